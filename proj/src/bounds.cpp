#include "smf/bounds.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>

#include "smf/enumerate.hpp"
#include "smf/errors.hpp"
#include "smf/interval.hpp"
#include "smf/reduction.hpp"

namespace smf {
namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

bool is_half_integral(const Rational& ell) {
  const Integer d = denominator(ell);
  return d == 1 || d == 2;
}

// C_{ell,n} = (ell/(2 pi e))^{ell n / 2}; the exponent is a quarter-integer,
// hence exact in binary.
Ival c_ival(const Rational& ell, Eigen::Index n) {
  if (ell == 0) return Ival(Real(1));
  const Ival base = ival_of(ell) / (Ival(Real(2)) * Ival::pi() * Ival::e());
  const Real expo = to_real<Real>(ell * Integer(n) / 2);
  return pow(base, Ival(expo));
}

Ival d_ival(const Rational& ell, Eigen::Index n, Real mu) {
  const long big_n = static_cast<long>(n * (n + 1) / 2);
  const Ival pi_mu = Ival::pi() * Ival(mu);
  const Ival geom = Ival(Real(2)) / pi_mu;
  const Ival peak = pow_int(Ival(Real(2 * big_n)) / pi_mu, big_n) *
                    exp(Ival(-Real(big_n)));
  return c_ival(ell, n) * pow_int(Ival(Real(2)), static_cast<long>(n * (n - 1) / 2)) *
         peak * geom;
}

Ival m_pow_alpha(const Integer& m, Eigen::Index n) {
  return pow_int(ival_of(Rational(m)), static_cast<long>(n * (n + 1) / 2 + 1));
}

}  // namespace

void validate_bound_params(const BoundParams& p) {
  if (!is_half_integral(p.ell) || p.ell < 0) {
    throw Error("BoundParams: weight must be a nonnegative half-integer");
  }
  if (p.n < 1) throw Error("BoundParams: genus must be positive");
  if (!(p.mu > 0) || !(p.mu < 1)) throw Error("BoundParams: mu must lie in (0,1)");
  if (p.m < 1) throw Error("BoundParams: M must be at least 1");
}

Real power_exp_bound(Real n_exp, Real r) {
  if (!(r > 0)) throw Error("power_exp_bound: rate must be positive");
  if (n_exp < 0) throw Error("power_exp_bound: exponent must be nonnegative");
  if (n_exp == 0) return 1;
  const Ival n_iv(n_exp);
  return exp(n_iv * (log(n_iv / Ival(r)) - Ival(Real(1)))).hi();
}

Real c_const(const Rational& ell, Eigen::Index n) {
  if (!is_half_integral(ell) || ell < 0) {
    throw Error("c_const: weight must be a nonnegative half-integer");
  }
  if (n < 1) throw Error("c_const: genus must be positive");
  return c_ival(ell, n).hi();
}

std::pair<Real, Rational> d_const(const Rational& ell, Eigen::Index n, Real mu) {
  BoundParams p;
  p.ell = ell;
  p.n = n;
  p.mu = mu;
  validate_bound_params(p);
  return {d_ival(ell, n, mu).hi(), Rational(Integer(n * (n + 1) / 2 + 1))};
}

Real s_partial(const Rational& ell, const Integer& m, const SymMatR& y,
               const Rational& cutoff, std::size_t cap) {
  if (!is_half_integral(ell) || ell < 0) {
    throw Error("s_partial: weight must be a nonnegative half-integer");
  }
  if (min_eigenvalue(y) <= 0) throw Error("s_partial: y must be positive definite");
  if (cutoff <= 0) return 0;

  EnumSpec spec;
  spec.n = y.dim();
  spec.m = m;
  spec.kind = EnumSpec::Cutoff::Trace;
  spec.cutoff = cutoff;
  const auto list = by_trace(spec, cap);

  const Real ell_half = to_real<Real>(ell) / 2;
  const Real det_y = y.mat().determinant();
  Real sum = 0, comp = 0;
  for (const auto& t : list) {
    Real pair = 0;
    for (Eigen::Index i = 0; i < t.dim(); ++i) {
      pair += to_real<Real>(t(i, i)) * y(i, i);
      for (Eigen::Index j = i + 1; j < t.dim(); ++j) {
        pair += 2 * to_real<Real>(t(i, j)) * y(i, j);
      }
    }
    const Real det_t = to_real<Real>(exact_det(t));
    const Real term = std::pow(det_t * det_y, ell_half) * std::exp(-2 * kPi * pair);
    const Real shifted = term - comp;
    const Real next = sum + shifted;
    comp = (next - sum) - shifted;
    sum = next;
  }
  return sum;
}

BoundReport tail_bound(const BoundParams& p) {
  validate_bound_params(p);
  if (!(p.r > 0)) throw Error("tail_bound: R must be positive");
  const Ival d = d_ival(p.ell, p.n, p.mu);
  // A member with det(T) >= R has scaled trace k = M tr(T) >= n R^{1/n} M by
  // AM-GM, so the tail sits inside the geometric series from k0 =
  // ceil(n R^{1/n} M). At rate r = pi mu / (2M) the partial sum obeys
  // e^{-r k0} / (1 - e^{-r}) <= e^{-r (k0 - 1)} / r. D already carries the
  // 1/r, leaving the factor e^{-r (k0 - 1)}; a continuous exponent
  // -r n R^{1/n} M with the same D would undershoot the true tail near
  // R = 1 by up to e^r. Rounding k0 toward zero keeps the factor an upper
  // bound, and R -> 0+ gives k0 = 1, recovering the full-series bound.
  const Ival r_root = pow(Ival(p.r), Ival(Real(1)) / Ival(Real(p.n)));
  const Ival start = r_root * Ival(Real(p.n)) * ival_of(Rational(p.m));
  const Real k0 = std::ceil(start.lo());
  const Ival rate = Ival::pi() * Ival(p.mu) / (Ival(Real(2)) * ival_of(Rational(p.m)));
  const Ival decay = exp(-(rate * Ival(k0 - 1)));
  BoundReport report;
  report.value = (d * m_pow_alpha(p.m, p.n) * decay).hi();
  report.formula = "series-tail";
  report.inputs = p;
  report.slack = 1 + Ival::kStep;
  return report;
}

Real sturm_cutoff(const Rational& ell, Eigen::Index n, const Integer& m) {
  if (m < 1) throw Error("sturm_cutoff: M must be at least 1");
  const Real eps_n = siegel_floor(n);
  const Real d = d_const(ell, n, eps_n).first;
  const auto alpha = static_cast<Real>(n * (n + 1) / 2 + 1);
  const Real m_real = to_real<Real>(Rational(m));
  const Real arg = 2 * std::exp(2 * kPi * Real(n)) * d * std::pow(m_real, alpha);
  if (!(arg > 1)) throw Error("sturm_cutoff: degenerate log argument");
  const Real root = 2 / (kPi * Real(n) * eps_n) * std::log(arg);
  return std::pow(root, Real(n));
}

std::pair<BoundReport, BoundReport> sup_bound_from_coeffs(const BoundParams& p) {
  BoundParams q = p;
  q.mu = siegel_floor(p.n);
  validate_bound_params(q);
  if (p.eps < 0) throw Error("sup_bound_from_coeffs: eps must be nonnegative");
  const Ival core = Ival(Real(2)) * d_ival(q.ell, q.n, q.mu) * m_pow_alpha(q.m, q.n);
  const Ival arch = exp(Ival(Real(2 * q.n)) * Ival::pi());
  // The final scale by eps is a single rounding, absorbed by the interval
  // widening already inside the factor; linearity in eps is exact.
  BoundReport sup;
  sup.value = p.eps * (core * arch).hi();
  sup.formula = "sturm-sup";
  sup.inputs = q;
  sup.slack = 1 + Ival::kStep;
  BoundReport coeff;
  coeff.value = p.eps * (core * arch * arch).hi();
  coeff.formula = "sturm-coeff";
  coeff.inputs = q;
  coeff.slack = 1 + Ival::kStep;
  return {sup, coeff};
}

Real coeff_bound_from_sup(Real l, Eigen::Index n) {
  if (l < 0) throw Error("coeff_bound_from_sup: sup bound must be nonnegative");
  if (n < 1) throw Error("coeff_bound_from_sup: genus must be positive");
  return l * exp(Ival(Real(2 * n)) * Ival::pi()).hi();
}

}  // namespace smf
