// Points Z = X + iY of the Siegel upper half-space: X, Y symmetric with
// Y positive-definite. Exact-rational points are the API/CLI currency;
// floating points carry the working precision inside reduction and series
// evaluation.
#ifndef SMF_HALFSPACE_HPP_
#define SMF_HALFSPACE_HPP_

#include <complex>
#include <type_traits>

#include "smf/symmat.hpp"

namespace smf {

using Cplx = std::complex<Real>;
using CMat = Eigen::Matrix<Cplx, Eigen::Dynamic, Eigen::Dynamic>;

// Smallest eigenvalue of a symmetric floating matrix.
Real min_eigenvalue(const SymMatR& y);

template <typename Scalar>
class HalfSpacePoint {
 public:
  HalfSpacePoint(const SymMat<Scalar>& x, const SymMat<Scalar>& y)
      : x_(x), y_(y) {
    if (x.dim() != y.dim()) throw Error("HalfSpacePoint: dimension mismatch");
    if (!imag_positive()) throw Error("HalfSpacePoint: Im(Z) not positive-definite");
  }

  Eigen::Index dim() const { return x_.dim(); }
  const SymMat<Scalar>& real_part() const { return x_; }
  const SymMat<Scalar>& imag_part() const { return y_; }

 private:
  bool imag_positive() const {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      return is_positive_definite(y_);
    } else {
      return min_eigenvalue(y_) > Scalar(0);
    }
  }

  SymMat<Scalar> x_;
  SymMat<Scalar> y_;
};

using HalfSpacePointQ = HalfSpacePoint<Rational>;
using HalfSpacePointR = HalfSpacePoint<Real>;

SymMatR to_floating(const SymMatQ& t);
HalfSpacePointR to_floating(const HalfSpacePointQ& z);

// Z as a dense complex matrix.
CMat complex_matrix(const HalfSpacePointR& z);

// Purely imaginary point i·Y.
HalfSpacePointR imaginary_point(const SymMatR& y);

}  // namespace smf

#endif  // SMF_HALFSPACE_HPP_
