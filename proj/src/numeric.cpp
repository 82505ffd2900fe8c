#include "smf/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace smf {

Integer floor_rational(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  if (n >= 0) return n / d;
  return -((-n + d - 1) / d);
}

Integer ceil_rational(const Rational& q) { return -floor_rational(-q); }

Integer isqrt(const Integer& m) {
  if (m < 0) throw Error("isqrt: negative argument");
  return boost::multiprecision::sqrt(m);
}

Integer lcm_positive(const Integer& a, const Integer& b) {
  Integer aa = a < 0 ? Integer(-a) : a;
  if (aa == 0 || b <= 0) throw Error("lcm_positive: arguments must be nonzero");
  return aa / boost::multiprecision::gcd(aa, b) * b;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational parse_decimal(const std::string& text) {
  std::string mantissa = text;
  long exp10 = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = text.substr(0, epos);
    const std::string etail = text.substr(epos + 1);
    if (etail.empty()) throw Error("parse_rational: bad exponent in '" + text + "'");
    exp10 = std::strtol(etail.c_str(), nullptr, 10);
  }
  bool negative = false;
  std::string digits = mantissa;
  if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
    negative = digits[0] == '-';
    digits = digits.substr(1);
  }
  std::string intpart = digits, fracpart;
  auto dot = digits.find('.');
  if (dot != std::string::npos) {
    intpart = digits.substr(0, dot);
    fracpart = digits.substr(dot + 1);
  }
  if (intpart.empty()) intpart = "0";
  if (!all_digits(intpart) || (!fracpart.empty() && !all_digits(fracpart))) {
    throw Error("parse_rational: cannot parse '" + text + "'");
  }
  Integer num(intpart + fracpart);
  if (negative) num = -num;
  long shift = exp10 - static_cast<long>(fracpart.size());
  Rational q(num);
  Integer ten(10);
  if (shift > 0) {
    q *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(shift)));
  } else if (shift < 0) {
    q /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-shift)));
  }
  return q;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text.empty()) throw Error("parse_rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string ns = text.substr(0, slash);
    const std::string ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty()) throw Error("parse_rational: bad fraction '" + raw + "'");
    Integer n(ns), d(ds);
    if (d == 0) throw Error("parse_rational: zero denominator in '" + raw + "'");
    return Rational(n, d);
  }
  if (text.find('.') != std::string::npos || text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos) {
    return parse_decimal(text);
  }
  return Rational(Integer(text));
}

std::string format_rational(const Rational& q) {
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational rational_from_real(Real x) {
  if (!std::isfinite(x)) throw Error("rational_from_real: non-finite value");
  if (x == 0) return Rational(0);
  int exp = 0;
  const Real mantissa = std::frexp(x, &exp);
  // 64 bits cover the long double significand, so this scaling is exact.
  const Real scaled = std::ldexp(mantissa, 64);
  Integer m(scaled);
  Rational q(m);
  const int shift = exp - 64;
  if (shift >= 0) {
    q *= Rational(Integer(1) << shift);
  } else {
    q /= Rational(Integer(1) << (-shift));
  }
  return q;
}

}  // namespace smf
