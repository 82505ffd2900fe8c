#include "smf/enumerate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

#include "smf/errors.hpp"
#include "smf/reduction.hpp"

namespace smf {
namespace {

using MatQ = SymMatQ::Mat;

Rational rat_pow(const Rational& base, unsigned e) {
  Rational out = 1;
  for (unsigned k = 0; k < e; ++k) out *= base;
  return out;
}

std::int64_t to_i64(const Integer& v, const char* what) {
  if (v < -(Integer(1) << 62) || v > (Integer(1) << 62)) {
    throw Error(std::string(what) + ": range too large");
  }
  return v.convert_to<std::int64_t>();
}

// Largest k >= 0 with k*k <= m, for m within exact double range.
std::int64_t isqrt64(std::int64_t m) {
  if (m < 0) return -1;
  auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(m)));
  while (k > 0 && k * k > m) --k;
  while ((k + 1) * (k + 1) <= m) ++k;
  return k;
}

Rational scaled_entry(std::int64_t num, const Integer& den) {
  return Rational(Integer(num), den);
}

// Walks the scaled forms S = 2M T (integral, even diagonal) with trace of T
// at most smax/M, in (trace, diagonal, off-diagonal) lexicographic order.
// Positive definiteness is exact: the off-diagonal ranges enforce the 2x2
// leading minor and n = 3 additionally filters on the integer determinant.
// The visitor receives the diagonal a_i (so S_ii = 2 a_i) and the
// off-diagonals c_ij = S_ij.
template <typename Visit>
void walk_by_trace(Eigen::Index n, std::int64_t smax, Visit&& visit) {
  if (n >= 2 && smax > 2000000) throw Error("by_trace: range too large");
  if (n == 1) {
    for (std::int64_t a = 1; a <= smax; ++a) visit(std::array<std::int64_t, 6>{a, 0, 0, 0, 0, 0});
    return;
  }
  if (n == 2) {
    for (std::int64_t s = 2; s <= smax; ++s) {
      for (std::int64_t a1 = 1; a1 <= s - 1; ++a1) {
        const std::int64_t a2 = s - a1;
        const std::int64_t cmax = isqrt64(4 * a1 * a2 - 1);
        for (std::int64_t c = -cmax; c <= cmax; ++c) {
          visit(std::array<std::int64_t, 6>{a1, a2, 0, c, 0, 0});
        }
      }
    }
    return;
  }
  if (smax > 100000) throw Error("by_trace: range too large");
  for (std::int64_t s = 3; s <= smax; ++s) {
    for (std::int64_t a1 = 1; a1 <= s - 2; ++a1) {
      for (std::int64_t a2 = 1; a2 <= s - 1 - a1; ++a2) {
        const std::int64_t a3 = s - a1 - a2;
        const std::int64_t c12max = isqrt64(4 * a1 * a2 - 1);
        const std::int64_t c13max = isqrt64(4 * a1 * a3 - 1);
        const std::int64_t c23max = isqrt64(4 * a2 * a3 - 1);
        for (std::int64_t c12 = -c12max; c12 <= c12max; ++c12) {
          for (std::int64_t c13 = -c13max; c13 <= c13max; ++c13) {
            for (std::int64_t c23 = -c23max; c23 <= c23max; ++c23) {
              const std::int64_t det =
                  2 * a1 * (4 * a2 * a3 - c23 * c23) -
                  c12 * (2 * a3 * c12 - c23 * c13) +
                  c13 * (c12 * c23 - 2 * a2 * c13);
              if (det > 0) visit(std::array<std::int64_t, 6>{a1, a2, a3, c12, c13, c23});
            }
          }
        }
      }
    }
  }
}

void validate_trace_spec(const EnumSpec& spec) {
  if (spec.n < 1 || spec.n > 3) throw Error("by_trace: n must be 1, 2, or 3");
  if (spec.m < 1) throw Error("by_trace: M must be at least 1");
  if (!(spec.cutoff > 0)) throw Error("by_trace: cutoff must be positive");
  if (spec.kind != EnumSpec::Cutoff::Trace) {
    throw Error("by_trace: spec does not carry a trace cutoff");
  }
}

SymMatQ assemble(Eigen::Index n, const Integer& m, const std::array<std::int64_t, 6>& e) {
  const Integer two_m = 2 * m;
  SymMatQ t(n);
  t.set(0, 0, scaled_entry(e[0], m));
  if (n >= 2) {
    t.set(1, 1, scaled_entry(e[1], m));
    t.set(0, 1, scaled_entry(e[3], two_m));
  }
  if (n >= 3) {
    t.set(2, 2, scaled_entry(e[2], m));
    t.set(0, 2, scaled_entry(e[4], two_m));
    t.set(1, 2, scaled_entry(e[5], two_m));
  }
  return t;
}

// All n x n integer matrices with entries in {-1, 0, 1} and determinant +-1,
// as signed bytes in row-major order. This is the transform set over which
// canonical representatives are minimized; for n <= 3 the maps identifying
// boundary-equivalent reduced forms all lie in it.
const std::vector<std::array<std::int8_t, 9>>& unimodular_pm1(Eigen::Index n) {
  static const std::vector<std::array<std::int8_t, 9>> two = [] {
    std::vector<std::array<std::int8_t, 9>> out;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b)
        for (int c = -1; c <= 1; ++c)
          for (int d = -1; d <= 1; ++d) {
            const int det = a * d - b * c;
            if (det == 1 || det == -1) {
              out.push_back({static_cast<std::int8_t>(a), static_cast<std::int8_t>(b),
                             static_cast<std::int8_t>(c), static_cast<std::int8_t>(d),
                             0, 0, 0, 0, 0});
            }
          }
    return out;
  }();
  static const std::vector<std::array<std::int8_t, 9>> three = [] {
    std::vector<std::array<std::int8_t, 9>> out;
    std::array<std::int8_t, 9> g{};
    for (int code = 0; code < 19683; ++code) {
      int rest = code;
      for (int k = 0; k < 9; ++k) {
        g[k] = static_cast<std::int8_t>(rest % 3 - 1);
        rest /= 3;
      }
      const int det = g[0] * (g[4] * g[8] - g[5] * g[7]) -
                      g[1] * (g[3] * g[8] - g[5] * g[6]) +
                      g[2] * (g[3] * g[7] - g[4] * g[6]);
      if (det == 1 || det == -1) out.push_back(g);
    }
    return out;
  }();
  return n == 2 ? two : three;
}

// Lexicographically greatest Minkowski-type representative among the images
// of a reduced integer form under the small transform set. Works on int64
// entries; the caller scales and descales.
std::array<std::int64_t, 9> canonical3_scaled(const std::array<std::int64_t, 9>& s) {
  std::array<std::int64_t, 9> best = s;
  bool have = false;
  for (const auto& g : unimodular_pm1(3)) {
    std::array<std::int64_t, 9> sg{};   // S * g
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) sg[3 * i + j] += s[3 * i + k] * g[3 * k + j];
    std::array<std::int64_t, 9> p{};    // g^t * S * g
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) p[3 * i + j] += g[3 * k + i] * sg[3 * k + j];
    if (p[0] != s[0] || p[4] != s[4] || p[8] != s[8]) continue;
    if (2 * std::abs(p[1]) > p[0] || 2 * std::abs(p[2]) > p[0] ||
        2 * std::abs(p[5]) > p[4]) {
      continue;
    }
    if (!have || std::lexicographical_compare(best.begin(), best.end(),
                                              p.begin(), p.end())) {
      best = p;
      have = true;
    }
  }
  return best;
}

}  // namespace

Rational count_bound(Eigen::Index n, const Integer& m, const Rational& x) {
  if (n < 1) throw Error("count_bound: n must be positive");
  if (m < 1) throw Error("count_bound: M must be at least 1");
  if (!(x > 0)) throw Error("count_bound: X must be positive");
  const auto big_n = static_cast<unsigned>(n * (n + 1) / 2);
  const Integer pow2 = Integer(1) << static_cast<unsigned>(n * (n - 1) / 2);
  return Rational(pow2 * boost::multiprecision::pow(m, big_n)) * rat_pow(x, big_n);
}

std::vector<SymMatQ> by_trace(const EnumSpec& spec, std::size_t cap) {
  validate_trace_spec(spec);
  if (count_bound(spec.n, spec.m, spec.cutoff) > Rational(Integer(cap))) {
    throw Error("by_trace: counting bound exceeds the output cap");
  }
  const std::int64_t smax =
      to_i64(floor_rational(Rational(spec.m) * spec.cutoff), "by_trace");
  std::vector<SymMatQ> out;
  walk_by_trace(spec.n, smax, [&](const std::array<std::int64_t, 6>& e) {
    out.push_back(assemble(spec.n, spec.m, e));
    if (out.size() > cap) throw Error("by_trace: output cap exceeded");
  });
  return out;
}

Integer by_trace_count(const EnumSpec& spec) {
  validate_trace_spec(spec);
  const std::int64_t smax =
      to_i64(floor_rational(Rational(spec.m) * spec.cutoff), "by_trace");
  Integer count = 0;
  walk_by_trace(spec.n, smax, [&](const std::array<std::int64_t, 6>&) { ++count; });
  return count;
}

std::vector<SymMatQ> reduced_by_det(Eigen::Index n, const Integer& m,
                                    const Rational& r, std::size_t cap) {
  if (n < 1 || n > 2) throw Error("reduced_by_det: n must be 1 or 2");
  if (m < 1) throw Error("reduced_by_det: M must be at least 1");
  if (!(r > 0)) throw Error("reduced_by_det: cutoff must be positive");
  std::vector<SymMatQ> out;
  const auto push = [&](SymMatQ t) {
    out.push_back(std::move(t));
    if (out.size() > cap) throw Error("reduced_by_det: output cap exceeded");
  };
  if (n == 1) {
    const Integer kmax = floor_rational(Rational(m) * r);
    for (Integer k = 1; k <= kmax; ++k) {
      SymMatQ t(1);
      t.set(0, 0, Rational(k, m));
      push(t);
    }
    return out;
  }
  // Reduced domain 0 <= 2 T_12 <= T_11 <= T_22 in scaled units a, c, b:
  // S = 2M T has S_11 = 2a, S_12 = c, S_22 = 2b with 0 <= c <= a <= b, and
  // det(T) <= R becomes 4ab - c^2 <= 4 M^2 R. The domain inequalities force
  // 3a^2 <= 4 M^2 R, which bounds the outer loop.
  const Rational lim = Rational(4 * m * m) * r;
  const Integer amax = isqrt(floor_rational(lim / 3));
  for (Integer a = 1; a <= amax; ++a) {
    for (Integer c = 0; c <= a; ++c) {
      const Integer bmax = floor_rational((lim + Rational(c * c)) / Rational(4 * a));
      for (Integer b = a; b <= bmax; ++b) {
        SymMatQ t(2);
        t.set(0, 0, Rational(a, m));
        t.set(1, 1, Rational(b, m));
        t.set(0, 1, Rational(c, 2 * m));
        push(t);
      }
    }
  }
  return out;
}

SymMatQ orbit_canonical(const SymMatQ& t) {
  const SymMatQ base = minkowski_reduce(t).reduced;
  const Eigen::Index n = base.dim();
  if (n == 1) return base;
  if (n == 2) {
    SymMatQ out = base;
    if (out(0, 1) < 0) out.set(0, 1, -out(0, 1));
    return out;
  }
  // Scale to an integer form, take the lexicographically greatest image with
  // the same (canonical) diagonal under the small transform set, and scale
  // back. The scaled entries fit int64 since reduced off-diagonals are
  // dominated by the diagonal.
  Integer den = 1;
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = i; j < 3; ++j) {
      den = lcm_positive(den, denominator(base(i, j)));
    }
  }
  std::array<std::int64_t, 9> s{};
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = 0; j < 3; ++j) {
      s[3 * i + j] = to_i64(numerator(base(i, j)) * (den / denominator(base(i, j))),
                            "orbit_canonical");
    }
  }
  const auto best = canonical3_scaled(s);
  SymMatQ out(3);
  for (Eigen::Index i = 0; i < 3; ++i) {
    for (Eigen::Index j = i; j < 3; ++j) {
      out.set(i, j, Rational(Integer(best[3 * i + j]), den));
    }
  }
  return out;
}

}  // namespace smf
