// Coefficient tables keyed on canonical orbit representatives: symmetry
// checking, orbit expansion, certified truncated evaluation on the half
// space, Fourier-Jacobi slicing, the shell growth certifier, and the exact
// discriminant-coefficient oracle.
#ifndef SMF_SERIES_HPP_
#define SMF_SERIES_HPP_

#include <map>
#include <string>
#include <vector>

#include "smf/halfspace.hpp"
#include "smf/symmat.hpp"
#include "smf/symplectic.hpp"

namespace smf {

struct CoeffTable {
  Eigen::Index n = 1;
  Rational ell;            // weight, in (1/2)Z, >= 0
  Integer m = 1;           // lattice denominator
  int sign_character = 1;  // factor applied to orbit members reached with
                           // det(gamma) = -1; equals (-1)^ell for integral ell
  std::map<SymMatQ, Cplx, SymMatLexLess<Rational>> entries;
};

// Throws unless n >= 1, M >= 1, ell in (1/2)Z >= 0, sign_character is +-1
// and matches (-1)^ell for integral ell, and every key is positive definite,
// in the dual lattice, and equal to its own orbit_canonical.
void validate_table(const CoeffTable& table);

// beta_T = det(T)^{-ell/2} a_T and its inverse.
Cplx normalize(const Cplx& a, const SymMatQ& t, const Rational& ell);
Cplx denormalize(const Cplx& beta, const SymMatQ& t, const Rational& ell);

struct SymmetryViolation {
  SymMatQ key;
  std::string what;
  Real magnitude = 0;
};

// Checks the unimodular coefficient symmetry on a table that may be raw
// (non-canonical keys allowed, never throws on them): keys should equal
// their canonical form, and whenever T and T.gamma are both present their
// values must agree up to the sign character. Returns all violations.
std::vector<SymmetryViolation> check_p_symmetry(
    const CoeffTable& table, const std::vector<RatMat>& gamma_samples);

// All orbit members of the stored keys reachable by the bounded unimodular
// sample set (entries <= 3 for n = 2, complete for small boxes; n = 1 is the
// full two-element group), with the sign character applied. A member reached
// with inconsistent signs has a forced zero coefficient and is stored as 0.
std::map<SymMatQ, Cplx, SymMatLexLess<Rational>> orbit_expand(const CoeffTable& table);

// Sum of a_T e^{2 pi i (T, Z)} over the orbit expansion, keys sorted,
// compensated summation. Genus <= 2.
Cplx eval_partial(const CoeffTable& table, const HalfSpacePointR& z);

struct EvalCert {
  Cplx value;   // eval_partial restricted to det(T) <= r
  Real err;     // certified bound on |true value - value|
};

// Certified truncation. Hypotheses recorded, not checkable here: the table
// stores every orbit with det(T) <= r carrying a nonzero coefficient, and
// |beta_T| <= sup_beta for every det(T) > r. Requires Im(Z) >= mu 1_n with
// 0 < mu < 1. The error adds the det > r tail to a trace tail covering the
// orbit members beyond the expansion set (the latter vanishes at genus 1).
EvalCert eval_certified(const CoeffTable& table, const HalfSpacePointR& z,
                        Real sup_beta, Real r, Real mu);

struct FjKey {
  SymMatQ tprime;             // lower-right (n-1) block
  std::vector<Rational> xi;   // first-row off-diagonal entries
  bool operator<(const FjKey& o) const {
    SymMatLexLess<Rational> less;
    if (less(tprime, o.tprime)) return true;
    if (less(o.tprime, tprime)) return false;
    return xi < o.xi;
  }
};

// Fourier-Jacobi slice at upper-left entry t: the orbit-expanded members
// with T_11 = t, keyed by their lower block and off-diagonal column. Every
// returned key comes from a positive-definite member. Genus >= 2.
std::map<FjKey, Cplx> fj_slice(const CoeffTable& table, const Rational& t);

struct GrowthSchedule {
  Real delta = 1.5L;  // shell ratio, in (1, n)
  Real d0 = 2;        // base shell boundary, > 1
  Real q = 1;         // base coefficient bound, > 0
  Real e = 1;         // per-shell growth exponent, > 0
};

struct GrowthCert {
  bool pass = false;       // every |beta_T| <= f(det T) at the schedule's E
  Real min_e = 0;          // minimal passing E (binary search, tol 1e-6);
                           // infinity when the base shell already fails
  Real poly_exponent = 0;  // delta E / (delta - 1) at the schedule's E
  std::vector<SymMatQ> failures;
};

// Shell check: index m has D0^{delta^{m-1}} <= det < D0^{delta^m} (m = 0 for
// det < D0) and allowance f(det) = Q D0^{E (delta^m - 1)/(delta - 1)}, which
// stays below Q det^{delta E/(delta - 1)} above the base shell.
GrowthCert growth_certify(const CoeffTable& table, const GrowthSchedule& sched);

// tau(1..count) from the exact product expansion q prod (1 - q^m)^24.
std::vector<Integer> delta_coeffs(int count);

// Genus-1 weight-12 table with a_k = tau(k) for k <= count.
CoeffTable delta_table(int count);

}  // namespace smf

#endif  // SMF_SERIES_HPP_
