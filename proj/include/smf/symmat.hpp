// Symmetric matrices over an arbitrary scalar, with exact arithmetic
// (determinants, leading minors, definiteness) over the rationals.
#ifndef SMF_SYMMAT_HPP_
#define SMF_SYMMAT_HPP_

#include <Eigen/Core>

#include <type_traits>
#include <vector>

#include "smf/errors.hpp"
#include "smf/numeric.hpp"

namespace smf {

// Symmetric n x n matrix. The invariant T == T^t holds exactly: every write
// goes through set(), and construction from a full matrix validates equality.
template <typename Scalar>
class SymMat {
 public:
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  SymMat() : m_(0, 0) {}
  explicit SymMat(Eigen::Index n) : m_(Mat::Zero(n, n)) {
    if (n < 0) throw Error("SymMat: negative dimension");
  }

  static SymMat fromMatrix(Mat m) {
    if (m.rows() != m.cols()) throw Error("SymMat: matrix not square");
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
        if (!(m(i, j) == m(j, i))) throw Error("SymMat: matrix not symmetric");
      }
    }
    SymMat s;
    s.m_ = std::move(m);
    return s;
  }

  static SymMat identity(Eigen::Index n) {
    SymMat s;
    s.m_ = Mat::Identity(n, n);
    return s;
  }

  Eigen::Index dim() const { return m_.rows(); }
  const Mat& mat() const { return m_; }
  const Scalar& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  void set(Eigen::Index i, Eigen::Index j, const Scalar& v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }

  bool operator==(const SymMat& o) const {
    if (dim() != o.dim()) return false;
    for (Eigen::Index i = 0; i < dim(); ++i) {
      for (Eigen::Index j = i; j < dim(); ++j) {
        if (!(m_(i, j) == o.m_(i, j))) return false;
      }
    }
    return true;
  }
  bool operator!=(const SymMat& o) const { return !(*this == o); }

 private:
  Mat m_;
};

using SymMatQ = SymMat<Rational>;
using SymMatR = SymMat<Real>;

// Row-major lexicographic order on entries; a strict weak order usable as a
// map comparator and as the canonical-form tie break.
template <typename Scalar>
struct SymMatLexLess {
  bool operator()(const SymMat<Scalar>& a, const SymMat<Scalar>& b) const {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
      for (Eigen::Index j = 0; j < a.dim(); ++j) {
        if (a(i, j) < b(i, j)) return true;
        if (b(i, j) < a(i, j)) return false;
      }
    }
    return false;
  }
};

// (T, X) = tr(T X). For T in the dual lattice and X integral symmetric the
// value is an integer, which the Fourier-expansion tests rely on.
template <typename Scalar>
Scalar pairing(const SymMat<Scalar>& a, const SymMat<Scalar>& b) {
  if (a.dim() != b.dim()) throw Error("pairing: dimension mismatch");
  return (a.mat() * b.mat()).trace();
}

// Exact determinant of a general square rational matrix (Bareiss after
// clearing denominators).
Rational exact_det(const Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>& a);

// Right action T.r = r^t T r. Exact over exact scalars; the result is
// symmetrized from the upper triangle so the invariant holds bitwise.
// Singularity of r is rejected exactly in the rational instantiation.
template <typename Scalar>
SymMat<Scalar> gl_action(const SymMat<Scalar>& t,
                         const typename SymMat<Scalar>::Mat& r) {
  if (r.rows() != t.dim() || r.cols() != t.dim()) {
    throw Error("gl_action: dimension mismatch");
  }
  if constexpr (std::is_same_v<Scalar, Rational>) {
    if (exact_det(r) == 0) throw Error("gl_action: singular transform");
  }
  const typename SymMat<Scalar>::Mat p = r.transpose() * t.mat() * r;
  SymMat<Scalar> out(t.dim());
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    for (Eigen::Index j = i; j < t.dim(); ++j) out.set(i, j, p(i, j));
  }
  return out;
}

// Membership in (1/M) S_n(Z)^v: M T_ii integral, 2 M T_ij integral.
bool in_dual_lattice(const SymMatQ& t, const Integer& m);

inline Rational exact_det(const SymMatQ& t) { return exact_det(t.mat()); }

// Leading principal minors det(T[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const SymMatQ& t);

// Sylvester criterion on exact leading minors.
bool is_positive_definite(const SymMatQ& t);

// Fraction-free determinant of an integer matrix.
Integer exact_det_int(const Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>& a);

}  // namespace smf

#endif  // SMF_SYMMAT_HPP_
