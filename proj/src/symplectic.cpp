#include "smf/symplectic.hpp"

#include <cmath>
#include <utility>

#include <Eigen/LU>

namespace smf {

namespace {

// Gauss-Jordan over Q; throws on a singular input.
RatMat exact_inverse(const RatMat& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw Error("exact_inverse: matrix not square");
  RatMat work = a;
  RatMat inv = RatMat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index row = col; row < n; ++row) {
      if (work(row, col) != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw Error("exact_inverse: singular matrix");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational p = work(col, col);
    work.row(col) /= p;
    inv.row(col) /= p;
    for (Eigen::Index row = 0; row < n; ++row) {
      if (row == col || work(row, col) == 0) continue;
      const Rational f = work(row, col);
      work.row(row) -= f * work.row(col);
      inv.row(row) -= f * inv.row(col);
    }
  }
  return inv;
}

CMat to_complex(const RatMat& a) {
  CMat out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out(i, j) = Cplx(to_real<Real>(a(i, j)), 0);
    }
  }
  return out;
}

}  // namespace

bool is_symplectic(const RatMat& g) {
  const Eigen::Index m = g.rows();
  if (g.cols() != m || m % 2 != 0 || m == 0) return false;
  const Eigen::Index n = m / 2;
  RatMat j = RatMat::Zero(m, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  const RatMat lhs = g.transpose() * j * g;
  return lhs == j;
}

SymplecticMat SymplecticMat::from_matrix(const Mat& g) {
  if (!is_symplectic(g)) throw Error("SymplecticMat: symplectic relations fail");
  return SymplecticMat(g);
}

SymplecticMat SymplecticMat::identity(Eigen::Index n) {
  return SymplecticMat(Mat(Mat::Identity(2 * n, 2 * n)));
}

SymplecticMat SymplecticMat::translation(const SymMatQ& x) {
  const Eigen::Index n = x.dim();
  Mat g = Mat::Identity(2 * n, 2 * n);
  g.topRightCorner(n, n) = x.mat();
  return SymplecticMat(std::move(g));
}

SymplecticMat SymplecticMat::gl_embed(const Mat& r) {
  const Eigen::Index n = r.rows();
  if (r.cols() != n) throw Error("gl_embed: matrix not square");
  Mat g = Mat::Zero(2 * n, 2 * n);
  g.topLeftCorner(n, n) = r;
  g.bottomRightCorner(n, n) = exact_inverse(r).transpose();
  return SymplecticMat(std::move(g));
}

SymplecticMat SymplecticMat::inversion(Eigen::Index n) {
  Mat g = Mat::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    g(i, n + i) = -1;
    g(n + i, i) = 1;
  }
  return SymplecticMat(std::move(g));
}

SymplecticMat SymplecticMat::partial_inversion(Eigen::Index n, Eigen::Index k) {
  if (k < 0 || k >= n) throw Error("partial_inversion: index out of range");
  Mat g = Mat::Identity(2 * n, 2 * n);
  g(k, k) = 0;
  g(n + k, n + k) = 0;
  g(k, n + k) = -1;
  g(n + k, k) = 1;
  return SymplecticMat(std::move(g));
}

SymplecticMat SymplecticMat::inverse() const {
  const Eigen::Index n = genus();
  Mat g(2 * n, 2 * n);
  g.topLeftCorner(n, n) = d().transpose();
  g.topRightCorner(n, n) = Mat(-b().transpose());
  g.bottomLeftCorner(n, n) = Mat(-c().transpose());
  g.bottomRightCorner(n, n) = a().transpose();
  return SymplecticMat(std::move(g));
}

HalfSpacePointR symplectic_act(const SymplecticMat& g, const HalfSpacePointR& z) {
  const Eigen::Index n = z.dim();
  if (g.genus() != n) throw Error("symplectic_act: dimension mismatch");
  const CMat zc = complex_matrix(z);
  const CMat num = to_complex(g.a()) * zc + to_complex(g.b());
  const CMat den = to_complex(g.c()) * zc + to_complex(g.d());

  Eigen::PartialPivLU<CMat> lu(den.transpose());
  const Real scale = std::max<Real>(1, den.cwiseAbs().maxCoeff());
  Real scale_pow = 1;
  for (Eigen::Index i = 0; i < n; ++i) scale_pow *= scale;
  if (std::abs(lu.determinant()) <= 1e-14L * scale_pow) {
    throw Error("symplectic_act: cZ + d numerically singular");
  }

  // W (cZ + d) = aZ + b, solved via the transposed system.
  CMat w = lu.solve(num.transpose()).transpose();
  w = ((w + w.transpose()) / Real(2)).eval();

  SymMatR x_out(n);
  SymMatR y_out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      x_out.set(i, j, w(i, j).real());
      y_out.set(i, j, w(i, j).imag());
    }
  }
  return HalfSpacePointR(x_out, y_out);
}

Cplx cocycle_j(const SymplecticMat& g, const HalfSpacePointR& z) {
  if (g.genus() != z.dim()) throw Error("cocycle_j: dimension mismatch");
  const CMat den = to_complex(g.c()) * complex_matrix(z) + to_complex(g.d());
  return den.determinant();
}

}  // namespace smf
