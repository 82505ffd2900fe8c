// Scalar types: exact rationals and integers (Boost.Multiprecision) and the
// extended-precision floating type used for all inexact work.
#ifndef SMF_NUMERIC_HPP_
#define SMF_NUMERIC_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <type_traits>

#include "smf/errors.hpp"

namespace boost {
namespace multiprecision {
namespace detail {

// Eigen 3.4 gives two-dimensional expressions a const_iterator typedef equal
// to void, and iterator_traits<void> has no value_type, so the generic
// byte-container probe is a hard error instead of a SFINAE miss. A type whose
// const_iterator is void cannot be a byte container.
template <class C>
  requires std::is_same_v<typename C::const_iterator, void>
struct is_byte_container<C> : public std::false_type {};

}  // namespace detail
}  // namespace multiprecision
}  // namespace boost

#include <boost/multiprecision/eigen.hpp>

namespace smf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// x86-64 extended double: 64 mantissa bits, the default working precision.
using Real = long double;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Largest integer <= q.
Integer floor_rational(const Rational& q);
// Smallest integer >= q.
Integer ceil_rational(const Rational& q);
// Largest k >= 0 with k*k <= m; m must be nonnegative.
Integer isqrt(const Integer& m);

template <typename T>
T to_real(const Rational& q) {
  return q.template convert_to<T>();
}

// Exact dyadic rational equal to the floating value; throws on non-finite x.
Rational rational_from_real(Real x);

// Accepts "a", "a/b", and plain decimals such as "-1.25" or "3e-2";
// decimals convert exactly via the appropriate power of ten.
Rational parse_rational(const std::string& text);

// Lowest terms, "n" when the denominator is one, otherwise "n/d".
std::string format_rational(const Rational& q);

// lcm of |a| and b; helpers for clearing denominators.
Integer lcm_positive(const Integer& a, const Integer& b);

}  // namespace smf

#endif  // SMF_NUMERIC_HPP_
