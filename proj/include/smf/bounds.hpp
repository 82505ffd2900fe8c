// Certified upper bounds for the convergence estimates: the archimedean
// constant, the series bound D M^alpha, the determinant tail, the Sturm
// cutoff, and the sup-norm and coefficient corollaries. Every bound value is
// the upper endpoint of an outward-rounded interval computation; partial
// sums (the quantities being bounded) use plain compensated floating point.
#ifndef SMF_BOUNDS_HPP_
#define SMF_BOUNDS_HPP_

#include <cstddef>
#include <string>
#include <utility>

#include "smf/halfspace.hpp"
#include "smf/numeric.hpp"
#include "smf/symmat.hpp"

namespace smf {

struct BoundParams {
  Rational ell;   // weight, in (1/2)Z, >= 0
  Eigen::Index n = 1;
  Real mu = 0.5L;  // Y-floor, in (0, 1)
  Integer m = 1;   // lattice denominator
  Real r = 1;      // determinant cutoff
  Real eps = 0;    // coefficient bound
};

// Throws unless ell in (1/2)Z >= 0, n >= 1, 0 < mu < 1, M >= 1.
void validate_bound_params(const BoundParams& p);

struct BoundReport {
  Real value = 0;        // certified upper bound on the target quantity
  std::string formula;   // identifier of the instantiated inequality
  BoundParams inputs;
  Real slack = 0;        // per-operation widening factor, 1 + 2^-40
};

// Upper bound on max_{v>0} v^N e^{-rv} = (N/r)^N e^{-N}, with 0^0 = 1.
Real power_exp_bound(Real n_exp, Real r);

// Upper bound on the archimedean constant C_{ell,n} = (ell/(2 pi e))^{ell n/2},
// which dominates det(T y)^{ell/2} e^{-pi (T,y)} over positive-definite T, y.
Real c_const(const Rational& ell, Eigen::Index n);

// The series constant: with N = n(n+1)/2,
//   D = C_{ell,n} 2^{n(n-1)/2} (2N/(pi mu))^N e^{-N} (2/(pi mu)),
//   alpha = N + 1,
// so that S_ell(M, y) <= D M^alpha whenever y >= mu 1_n. Returns (upper
// bound on D, exact alpha).
std::pair<Real, Rational> d_const(const Rational& ell, Eigen::Index n, Real mu);

// Partial sum over the by_trace list with tr(T) <= cutoff:
//   sum det(T)^{ell/2} det(y)^{ell/2} e^{-2 pi (T,y)}.
// Plain long double with compensated summation in enumeration order; this is
// the oracle side of the bound, not itself certified.
Real s_partial(const Rational& ell, const Integer& m, const SymMatR& y,
               const Rational& cutoff, std::size_t cap = 1000000);

// Upper bound on the det(T) >= R tail: D M^alpha exp(-pi mu n R^{1/n} / 2).
BoundReport tail_bound(const BoundParams& p);

// Determinant cutoff R = [(2/(pi n eps_n)) log(2 e^{2 pi n} D M^alpha)]^n
// with mu = eps_n, the Siegel floor for this genus. Coefficient bounds below
// R then propagate to the whole series.
Real sturm_cutoff(const Rational& ell, Eigen::Index n, const Integer& m);

// Both Sturm conclusions for |beta_T| <= eps below the cutoff: the sup-norm
// bound eps 2 e^{2 pi n} D M^alpha and the all-coefficient corollary
// eps 2 e^{4 pi n} D M^alpha. The floor is eps_n as in sturm_cutoff; p.mu is
// ignored here. Both values are exactly linear in eps.
std::pair<BoundReport, BoundReport> sup_bound_from_coeffs(const BoundParams& p);

// e^{2 pi n} L, the normalized-coefficient bound from a sup-norm bound.
Real coeff_bound_from_sup(Real l, Eigen::Index n);

}  // namespace smf

#endif  // SMF_BOUNDS_HPP_
