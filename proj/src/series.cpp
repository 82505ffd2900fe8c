#include "smf/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "smf/bounds.hpp"
#include "smf/enumerate.hpp"
#include "smf/interval.hpp"

namespace smf {

namespace {

constexpr Real kMatchTol = 1e-12L;

bool is_half_integral(const Rational& q) {
  const Integer d = denominator(q);
  return d == 1 || d == 2;
}

struct Sample {
  RatMat g;
  bool improper;  // det(g) = -1
};

// Bounded unimodular sample sets: the full group at genus 1, entries up to 3
// at genus 2 (the same box the enumeration cross-checks are run against).
const std::vector<Sample>& unimodular_samples(Eigen::Index n) {
  static const std::vector<Sample> genus1 = [] {
    std::vector<Sample> out;
    RatMat g(1, 1);
    g(0, 0) = Rational(1);
    out.push_back({g, false});
    g(0, 0) = Rational(-1);
    out.push_back({g, true});
    return out;
  }();
  static const std::vector<Sample> genus2 = [] {
    std::vector<Sample> out;
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        for (int c = -3; c <= 3; ++c) {
          for (int d = -3; d <= 3; ++d) {
            const int det = a * d - b * c;
            if (det != 1 && det != -1) continue;
            RatMat g(2, 2);
            g(0, 0) = Rational(a);
            g(0, 1) = Rational(b);
            g(1, 0) = Rational(c);
            g(1, 1) = Rational(d);
            out.push_back({g, det == -1});
          }
        }
      }
    }
    return out;
  }();
  if (n == 1) return genus1;
  if (n == 2) return genus2;
  throw Error("orbit_expand: genus above 2 not supported");
}

void kahan_add(Real& sum, Real& comp, Real term) {
  const Real y = term - comp;
  const Real t = sum + y;
  comp = (t - sum) - y;
  sum = t;
}

}  // namespace

void validate_table(const CoeffTable& table) {
  if (table.n < 1) throw Error("CoeffTable: genus must be positive");
  if (table.m < 1) throw Error("CoeffTable: lattice denominator must be positive");
  if (table.ell < 0 || !is_half_integral(table.ell)) {
    throw Error("CoeffTable: weight must be a nonnegative half-integer");
  }
  if (table.sign_character != 1 && table.sign_character != -1) {
    throw Error("CoeffTable: sign character must be +-1");
  }
  if (is_integer(table.ell)) {
    const int forced = numerator(table.ell) % 2 == 0 ? 1 : -1;
    if (table.sign_character != forced) {
      throw Error("CoeffTable: sign character inconsistent with integral weight");
    }
  }
  for (const auto& [key, value] : table.entries) {
    (void)value;
    if (key.dim() != table.n) throw Error("CoeffTable: key dimension mismatch");
    if (!in_dual_lattice(key, table.m)) throw Error("CoeffTable: key outside the dual lattice");
    if (!is_positive_definite(key)) throw Error("CoeffTable: key not positive definite");
    if (!(orbit_canonical(key) == key)) throw Error("CoeffTable: key not canonical");
  }
}

Cplx normalize(const Cplx& a, const SymMatQ& t, const Rational& ell) {
  const Rational det = exact_det(t);
  if (!(det > 0)) throw Error("normalize: determinant not positive");
  return a * std::pow(to_real<Real>(det), -to_real<Real>(ell) / 2);
}

Cplx denormalize(const Cplx& beta, const SymMatQ& t, const Rational& ell) {
  const Rational det = exact_det(t);
  if (!(det > 0)) throw Error("denormalize: determinant not positive");
  return beta * std::pow(to_real<Real>(det), to_real<Real>(ell) / 2);
}

std::vector<SymmetryViolation> check_p_symmetry(
    const CoeffTable& table, const std::vector<RatMat>& gamma_samples) {
  if (table.sign_character != 1 && table.sign_character != -1) {
    throw Error("check_p_symmetry: sign character must be +-1");
  }
  std::vector<SymmetryViolation> out;
  for (const auto& [key, value] : table.entries) {
    if (!is_positive_definite(key)) {
      out.push_back({key, "key not positive definite", 0});
      continue;
    }
    if (!in_dual_lattice(key, table.m)) {
      out.push_back({key, "key outside the dual lattice", 0});
    }
    if (!(orbit_canonical(key) == key)) {
      out.push_back({key, "key not canonical", 0});
    }
    for (const auto& g : gamma_samples) {
      if (g.rows() != table.n || g.cols() != table.n) {
        throw Error("check_p_symmetry: sample dimension mismatch");
      }
      const Rational det = exact_det(g);
      if (det != 1 && det != -1) throw Error("check_p_symmetry: sample not unimodular");
      const SymMatQ image = gl_action(key, g);
      const auto it = table.entries.find(image);
      if (it == table.entries.end()) continue;
      const Cplx expected =
          det == -1 ? Cplx(Real(table.sign_character)) * value : value;
      const Real diff = std::abs(it->second - expected);
      if (diff > kMatchTol * (1 + std::abs(value))) {
        out.push_back({key, "orbit values disagree with the sign character", diff});
      }
    }
  }
  return out;
}

std::map<SymMatQ, Cplx, SymMatLexLess<Rational>> orbit_expand(const CoeffTable& table) {
  validate_table(table);
  const auto& samples = unimodular_samples(table.n);
  std::map<SymMatQ, Cplx, SymMatLexLess<Rational>> out;
  std::vector<SymMatQ> conflicted;
  for (const auto& [key, value] : table.entries) {
    for (const auto& s : samples) {
      const SymMatQ image = gl_action(key, s.g);
      const Cplx signed_value =
          s.improper ? Cplx(Real(table.sign_character)) * value : value;
      auto [it, inserted] = out.emplace(image, signed_value);
      if (!inserted &&
          std::abs(it->second - signed_value) > kMatchTol * (1 + std::abs(value))) {
        conflicted.push_back(image);
      }
    }
  }
  // A member reachable with both signs carries a coefficient equal to its
  // own negative, hence zero.
  for (const auto& t : conflicted) out[t] = Cplx(0);
  return out;
}

Cplx eval_partial(const CoeffTable& table, const HalfSpacePointR& z) {
  if (z.dim() != table.n) throw Error("eval_partial: dimension mismatch");
  const auto expanded = orbit_expand(table);
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  Real sum_re = 0, comp_re = 0, sum_im = 0, comp_im = 0;
  for (const auto& [t, a] : expanded) {
    const SymMatR tf = to_floating(t);
    const Real phase = two_pi * pairing(tf, z.real_part());
    const Real decay = std::exp(-two_pi * pairing(tf, z.imag_part()));
    const Cplx term = a * Cplx(std::cos(phase), std::sin(phase)) * decay;
    kahan_add(sum_re, comp_re, term.real());
    kahan_add(sum_im, comp_im, term.imag());
  }
  return {sum_re, sum_im};
}

EvalCert eval_certified(const CoeffTable& table, const HalfSpacePointR& z,
                        Real sup_beta, Real r, Real mu) {
  validate_table(table);
  if (z.dim() != table.n) throw Error("eval_certified: dimension mismatch");
  if (!(mu > 0 && mu < 1)) throw Error("eval_certified: mu outside (0, 1)");
  if (!(sup_beta >= 0)) throw Error("eval_certified: negative sup_beta");
  if (!(r > 0)) throw Error("eval_certified: cutoff must be positive");
  if (min_eigenvalue(z.imag_part()) < mu) {
    throw Error("eval_certified: Im(Z) below the stated floor");
  }

  CoeffTable head = table;
  head.entries.clear();
  Real beta_stored = 0;
  Rational lambda_floor = 0;
  bool first = true;
  for (const auto& [key, value] : table.entries) {
    const Rational det = exact_det(key);
    if (to_real<Real>(det) > r) continue;
    head.entries.emplace(key, value);
    const Real beta =
        (std::abs(value) * pow(ival_of(det), Ival(-to_real<Real>(table.ell) / 2))).hi();
    beta_stored = std::max(beta_stored, beta);
    Rational trace = 0;
    for (Eigen::Index i = 0; i < key.dim(); ++i) trace += key(i, i);
    const Rational floor = det / trace;
    if (first || floor < lambda_floor) lambda_floor = floor;
    first = false;
  }
  const Cplx value = head.entries.empty() ? Cplx(0) : eval_partial(head, z);

  // Lower bound on det(Im Z)^{ell/2}; the entries are exact floats.
  Ival det_y(Real(1));
  if (table.n == 1) {
    det_y = Ival::outer(z.imag_part()(0, 0));
  } else {
    det_y = Ival::outer(z.imag_part()(0, 0)) * Ival::outer(z.imag_part()(1, 1)) -
            Ival::outer(z.imag_part()(0, 1)) * Ival::outer(z.imag_part()(0, 1));
  }
  if (det_y.lo() <= 0) throw Error("eval_certified: Im(Z) determinant not positive");
  const Ival det_y_pow = pow(det_y, Ival(to_real<Real>(table.ell) / 2));

  BoundParams p;
  p.ell = table.ell;
  p.n = table.n;
  p.mu = mu;
  p.m = table.m;
  p.r = r;
  Ival err = Ival::outer(sup_beta) * Ival::outer(tail_bound(p).value) / det_y_pow;

  // Orbit members beyond the genus-2 sample set: every omitted member U of a
  // stored key T satisfies tr(U) >= 16 lambda_min(T) >= 16 det(T)/tr(T), and
  // each term is at most C e^{-pi mu tr(U)} / det(Y)^{ell/2}. Summing the
  // trace shells with the counting bound gives the second tail. At genus 1
  // the expansion is the whole orbit and nothing is omitted.
  if (table.n == 2 && !head.entries.empty() && beta_stored > 0) {
    const Integer s0 =
        std::max(Integer(1), ceil_rational(Rational(table.m) * 16 * lambda_floor));
    const Ival rate = Ival::pi() * Ival::outer(mu) / ival_of(Rational(table.m));
    const Ival half_rate = rate / Ival(2);
    const Real peb = power_exp_bound(3, half_rate.lo());
    const Ival geo =
        exp(-(half_rate * ival_of(Rational(s0)))) / (Ival(1) - exp(-half_rate));
    const Ival trace_tail =
        Ival::outer(c_const(table.ell, table.n)) * Ival(2) * Ival::outer(peb) * geo;
    err = err + Ival::outer(beta_stored) * trace_tail / det_y_pow;
  }
  return {value, err.hi()};
}

std::map<FjKey, Cplx> fj_slice(const CoeffTable& table, const Rational& t) {
  if (table.n < 2) throw Error("fj_slice: genus must be at least 2");
  const auto expanded = orbit_expand(table);
  std::map<FjKey, Cplx> out;
  for (const auto& [member, a] : expanded) {
    if (member(0, 0) != t) continue;
    SymMatQ lower(table.n - 1);
    for (Eigen::Index i = 1; i < table.n; ++i) {
      for (Eigen::Index j = i; j < table.n; ++j) lower.set(i - 1, j - 1, member(i, j));
    }
    std::vector<Rational> xi;
    for (Eigen::Index j = 1; j < table.n; ++j) xi.push_back(member(0, j));
    out.emplace(FjKey{lower, std::move(xi)}, a);
  }
  return out;
}

namespace {

int shell_index(Real det, const GrowthSchedule& sched) {
  if (det < sched.d0) return 0;
  const Real x = std::log(det) / std::log(sched.d0);
  const int m = static_cast<int>(std::floor(std::log(x) / std::log(sched.delta))) + 1;
  return std::max(m, 1);
}

Real allowance(const GrowthSchedule& sched, int shell, Real e) {
  const Real geom = (std::pow(sched.delta, Real(shell)) - 1) / (sched.delta - 1);
  return sched.q * std::pow(sched.d0, e * geom);
}

}  // namespace

GrowthCert growth_certify(const CoeffTable& table, const GrowthSchedule& sched) {
  validate_table(table);
  if (!(sched.delta > 1 && sched.delta < Real(table.n))) {
    throw Error("growth_certify: delta outside (1, n)");
  }
  if (!(sched.d0 > 1)) throw Error("growth_certify: base boundary must exceed 1");
  if (!(sched.q > 0)) throw Error("growth_certify: base bound must be positive");
  if (!(sched.e > 0)) throw Error("growth_certify: growth exponent must be positive");

  struct Item {
    const SymMatQ* key;
    Real beta;
    int shell;
  };
  std::vector<Item> items;
  for (const auto& [key, value] : table.entries) {
    items.push_back({&key, std::abs(normalize(value, key, table.ell)),
                     shell_index(to_real<Real>(exact_det(key)), sched)});
  }
  const Real slack = 1 + 1e-9L;
  const auto passes = [&](Real e) {
    for (const auto& item : items) {
      if (item.beta > allowance(sched, item.shell, e) * slack) return false;
    }
    return true;
  };

  GrowthCert cert;
  cert.poly_exponent = sched.delta * sched.e / (sched.delta - 1);
  cert.pass = true;
  for (const auto& item : items) {
    if (item.beta > allowance(sched, item.shell, sched.e) * slack) {
      cert.pass = false;
      cert.failures.push_back(*item.key);
    }
  }

  // The m = 0 shell allowance is Q independently of E, so a base-shell
  // failure has no finite minimal E.
  for (const auto& item : items) {
    if (item.shell == 0 && item.beta > sched.q * slack) {
      cert.min_e = std::numeric_limits<Real>::infinity();
      return cert;
    }
  }
  if (passes(0)) {
    cert.min_e = 0;
    return cert;
  }
  Real hi = std::max<Real>(sched.e, 1);
  while (!passes(hi)) hi *= 2;
  Real lo = 0;
  while (hi - lo > 1e-9L) {
    const Real mid = (lo + hi) / 2;
    (passes(mid) ? hi : lo) = mid;
  }
  cert.min_e = hi;
  return cert;
}

std::vector<Integer> delta_coeffs(int count) {
  if (count < 1) throw Error("delta_coeffs: count must be positive");
  std::vector<Integer> binom(25);
  binom[0] = 1;
  for (int j = 1; j <= 24; ++j) binom[j] = binom[j - 1] * (25 - j) / j;
  std::vector<Integer> p(count, Integer(0));
  p[0] = 1;
  for (int m = 1; m < count; ++m) {
    std::vector<Integer> next = p;
    for (int j = 1; j <= 24; ++j) {
      const long long jm = static_cast<long long>(j) * m;
      if (jm >= count) break;
      const Integer c = j % 2 == 0 ? binom[j] : -binom[j];
      for (int d = 0; d + jm < count; ++d) next[d + jm] += c * p[d];
    }
    p = std::move(next);
  }
  return p;
}

CoeffTable delta_table(int count) {
  CoeffTable table;
  table.n = 1;
  table.ell = 12;
  table.m = 1;
  table.sign_character = 1;
  const std::vector<Integer> tau = delta_coeffs(count);
  for (int k = 1; k <= count; ++k) {
    SymMatQ key(1);
    key.set(0, 0, Rational(k));
    table.entries.emplace(key, Cplx(to_real<Real>(Rational(tau[k - 1])), 0));
  }
  return table;
}

}  // namespace smf
