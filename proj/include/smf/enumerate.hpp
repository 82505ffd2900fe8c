// Enumeration of positive-definite half-integral matrices: complete lists
// under a trace cutoff, Minkowski-reduced representatives under a
// determinant cutoff, the exact counting bound, and canonical orbit
// representatives for unimodular dedup.
#ifndef SMF_ENUMERATE_HPP_
#define SMF_ENUMERATE_HPP_

#include <cstddef>
#include <vector>

#include "smf/symmat.hpp"

namespace smf {

struct EnumSpec {
  enum class Cutoff { Trace, Det };
  Eigen::Index n = 1;
  Integer m = 1;          // lattice denominator M
  Cutoff kind = Cutoff::Trace;
  Rational cutoff = 1;    // X for trace, R for determinant
};

// 2^{n(n-1)/2} M^N X^N with N = n(n+1)/2, exact.
Rational count_bound(Eigen::Index n, const Integer& m, const Rational& x);

// Complete list of positive-definite T in (1/M) S_n(Z)^v with tr(T) <= X,
// n <= 3. Ordered by (trace, diagonal lex, off-diagonal lex). Throws when
// the counting bound exceeds the cap.
std::vector<SymMatQ> by_trace(const EnumSpec& spec, std::size_t cap = 1000000);

// Cardinality of by_trace without materializing the list, so the counting
// bound can be checked on grids too large to hold in memory.
Integer by_trace_count(const EnumSpec& spec);

// Complete list of Minkowski-reduced positive-definite T in (1/M) S_n(Z)^v
// with det(T) <= R, one representative per unimodular orbit, n <= 2.
std::vector<SymMatQ> reduced_by_det(Eigen::Index n, const Integer& m,
                                    const Rational& r, std::size_t cap = 1000000);

// Canonical representative of the GL_n(Z) orbit of T: the Minkowski-reduced
// form, ties broken lexicographically on the row-major entry list, n <= 3.
SymMatQ orbit_canonical(const SymMatQ& t);

}  // namespace smf

#endif  // SMF_ENUMERATE_HPP_
