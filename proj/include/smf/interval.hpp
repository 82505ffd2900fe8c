// Outward-rounded interval arithmetic over long double. Every operation
// widens its result by one relative step of 2^-40 per endpoint, which
// dominates both the 2^-64 rounding of the underlying arithmetic and the
// few-ulp accuracy of the libm transcendentals by a wide margin, so the
// enclosure property holds without touching the FPU rounding mode.
#ifndef SMF_INTERVAL_HPP_
#define SMF_INTERVAL_HPP_

#include <cmath>
#include <numbers>

#include "smf/errors.hpp"
#include "smf/numeric.hpp"

namespace smf {

class Ival {
 public:
  // Relative widening applied per endpoint per operation, 2^-40.
  static constexpr Real kStep = 0x1p-40L;

  Ival() = default;
  Ival(Real point) : lo_(point), hi_(point) {
    if (!std::isfinite(point)) throw Error("Ival: non-finite endpoint");
  }
  Ival(Real lo, Real hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
      throw Error("Ival: invalid endpoints");
    }
  }

  Real lo() const { return lo_; }
  Real hi() const { return hi_; }
  bool contains(Real x) const { return lo_ <= x && x <= hi_; }

  static Ival pi() { return bracket(std::numbers::pi_v<Real>); }
  static Ival e() { return bracket(std::numbers::e_v<Real>); }
  // Point value widened one step outward, for inputs carrying their own
  // conversion rounding.
  static Ival outer(Real x) { return outward(x, x); }

  friend Ival operator+(const Ival& a, const Ival& b) {
    return outward(a.lo_ + b.lo_, a.hi_ + b.hi_);
  }
  friend Ival operator-(const Ival& a, const Ival& b) {
    return outward(a.lo_ - b.hi_, a.hi_ - b.lo_);
  }
  Ival operator-() const {
    Ival out;
    out.lo_ = -hi_;
    out.hi_ = -lo_;
    return out;
  }
  friend Ival operator*(const Ival& a, const Ival& b) {
    const Real p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    Real lo = p[0], hi = p[0];
    for (int k = 1; k < 4; ++k) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    return outward(lo, hi);
  }
  friend Ival operator/(const Ival& a, const Ival& b) {
    if (b.lo_ <= 0 && b.hi_ >= 0) throw Error("Ival: division by interval containing zero");
    const Real p[4] = {a.lo_ / b.lo_, a.lo_ / b.hi_, a.hi_ / b.lo_, a.hi_ / b.hi_};
    Real lo = p[0], hi = p[0];
    for (int k = 1; k < 4; ++k) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    return outward(lo, hi);
  }

  friend Ival exp(const Ival& a) { return outward(std::exp(a.lo_), std::exp(a.hi_)); }
  friend Ival log(const Ival& a) {
    if (a.lo_ <= 0) throw Error("Ival: log of interval touching zero");
    return outward(std::log(a.lo_), std::log(a.hi_));
  }
  // base^e via exp(e log base); base must be strictly positive.
  friend Ival pow(const Ival& base, const Ival& e) { return exp(e * log(base)); }
  friend Ival pow_int(const Ival& base, long k) {
    if (k < 0) throw Error("Ival: negative integer exponent");
    Ival out(Real(1));
    for (long i = 0; i < k; ++i) out = out * base;
    return out;
  }

 private:
  Real lo_ = 0;
  Real hi_ = 0;

  // One-ulp outward bracket of a correctly rounded constant.
  static Ival bracket(Real x) {
    Ival out;
    out.lo_ = std::nextafter(x, Real(0));
    out.hi_ = std::nextafter(x, Real(4) * x);
    return out;
  }
  static Real up(Real x) { return x == 0 ? 0 : x + std::fabs(x) * kStep; }
  static Real down(Real x) { return x == 0 ? 0 : x - std::fabs(x) * kStep; }
  static Ival outward(Real lo, Real hi) {
    Ival out;
    out.lo_ = down(lo);
    out.hi_ = up(hi);
    if (!std::isfinite(out.lo_) || !std::isfinite(out.hi_)) {
      throw Error("Ival: overflow");
    }
    return out;
  }
};

// Enclosure of an exact rational, one conversion rounding plus the step.
inline Ival ival_of(const Rational& q) {
  const Real x = to_real<Real>(q);
  if (!std::isfinite(x)) throw Error("ival_of: rational out of range");
  return Ival::outer(x);
}

}  // namespace smf

#endif  // SMF_INTERVAL_HPP_
