#include "smf/symmat.hpp"

namespace smf {

namespace {

using IntMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// Clears denominators: returns (L, A) with A = L * Q entrywise integral.
std::pair<Integer, IntMat> scale_to_integer(const RatMat& q) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      l = lcm_positive(l, denominator(q(i, j)));
    }
  }
  IntMat a(q.rows(), q.cols());
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      const Rational scaled = q(i, j) * Rational(l);
      a(i, j) = numerator(scaled);
    }
  }
  return {l, std::move(a)};
}

}  // namespace

// Bareiss fraction-free elimination; all divisions are exact.
Integer exact_det_int(const IntMat& input) {
  const Eigen::Index n = input.rows();
  if (input.cols() != n) throw Error("exact_det_int: matrix not square");
  if (n == 0) return 1;
  IntMat a = input;
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index pivot = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (a(r, k) != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  return sign == 1 ? det : Integer(-det);
}

Rational exact_det(const RatMat& q) {
  const Eigen::Index n = q.rows();
  if (q.cols() != n) throw Error("exact_det: matrix not square");
  if (n == 0) return 1;
  auto [l, a] = scale_to_integer(q);
  Rational det(exact_det_int(a));
  Rational scale(1);
  for (Eigen::Index i = 0; i < n; ++i) scale *= Rational(l);
  return det / scale;
}

std::vector<Rational> leading_principal_minors(const SymMatQ& t) {
  const Eigen::Index n = t.dim();
  std::vector<Rational> minors;
  minors.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 1; k <= n; ++k) {
    minors.push_back(exact_det(RatMat(t.mat().topLeftCorner(k, k))));
  }
  return minors;
}

bool is_positive_definite(const SymMatQ& t) {
  if (t.dim() == 0) return false;
  for (const Rational& minor : leading_principal_minors(t)) {
    if (minor <= 0) return false;
  }
  return true;
}

bool in_dual_lattice(const SymMatQ& t, const Integer& m) {
  if (m <= 0) throw Error("in_dual_lattice: M must be positive");
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    if (!is_integer(t(i, i) * Rational(m))) return false;
    for (Eigen::Index j = i + 1; j < t.dim(); ++j) {
      if (!is_integer(t(i, j) * Rational(2 * m))) return false;
    }
  }
  return true;
}

}  // namespace smf
