// Reduction with certificates: Minkowski reduction of positive-definite
// rational forms (exact, n <= 3) and Siegel reduction of half-space points
// (floating, n <= 2). Certificates carry the transform, the reduced object
// and the floor constant they certify, and can be re-checked post hoc.
#ifndef SMF_REDUCTION_HPP_
#define SMF_REDUCTION_HPP_

#include "smf/halfspace.hpp"
#include "smf/symmat.hpp"
#include "smf/symplectic.hpp"

namespace smf {

struct MinkowskiCert {
  RatMat transform;     // gamma in GL_n(Z), integral entries, det +-1
  SymMatQ reduced;      // T.gamma = gamma^t T gamma
  Real floor_constant;  // C_n with (T.gamma)_11 <= C_n det(T)^{1/n}
};

struct SiegelCert {
  SymplecticMat transform;
  HalfSpacePointR reduced;
  Real floor_constant;  // eps_n <= smallest eigenvalue of Im
};

// C_n^n as an exact rational (1, 4/3, 2 for n = 1, 2, 3), so the Hermite
// inequality (T.gamma)_11^n <= C_n^n det(T) is a rational predicate.
Rational hermite_pow(Eigen::Index n);

// eps_n floors: sqrt(3)/2 for n = 1, 1/2 for n = 2.
Real siegel_floor(Eigen::Index n);

// Minimum of v^t T v over nonzero integer vectors with |v_i| <= radius.
// The caller must size the radius so the ball provably contains a minimal
// vector (the bound min <= C_n det^{1/n} suffices).
Rational shortest_value_bruteforce(const SymMatQ& t, const Integer& radius);

// Greedy successive-minima reduction behind an exact LLL pre-pass. The
// reduced form has (11) entry equal to the lattice minimum of T.
MinkowskiCert minkowski_reduce(const SymMatQ& t);

// Exact re-check: transform integral unimodular, reduced = T.transform,
// determinant preserved, Hermite inequality.
bool check_certificate(const MinkowskiCert& cert, const SymMatQ& input);

// Alternates integral translation, Minkowski reduction of Im(Z), and the
// best determinant-increasing inversion move until none applies; the
// iteration cap signals precision exhaustion.
SiegelCert siegel_reduce(const HalfSpacePointR& z);

// Post-hoc check: transform integral and exactly symplectic, reduced matches
// acting on the input within tol, smallest eigenvalue of Im >= floor - tol,
// det Im nondecreasing up to relative tol.
bool check_certificate(const SiegelCert& cert, const HalfSpacePointR& input,
                       Real tol);

}  // namespace smf

#endif  // SMF_REDUCTION_HPP_
