#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "smf/enumerate.hpp"
#include "smf/reduction.hpp"

using namespace smf;

namespace {

using MatQ = SymMatQ::Mat;
using LexSet = std::set<SymMatQ, SymMatLexLess<Rational>>;

// Independent enumeration: loop every candidate entry combination over the
// widest possible box and filter with the exact predicates only. No shared
// code with the production walker.
std::vector<SymMatQ> brute_force_by_trace(Eigen::Index n, const Integer& m,
                                          const Rational& x) {
  std::vector<SymMatQ> out;
  const Integer kmax = floor_rational(Rational(m) * x);
  const Integer cbox = 2 * kmax;
  std::vector<Integer> diag(n, 1), off(n * (n - 1) / 2, -cbox);
  const auto build = [&]() {
    SymMatQ t(n);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      t.set(i, i, Rational(diag[i], m));
      for (Eigen::Index j = i + 1; j < n; ++j) t.set(i, j, Rational(off[k++], 2 * m));
    }
    return t;
  };
  const auto admit = [&](const SymMatQ& t) {
    Rational trace = 0;
    for (Eigen::Index i = 0; i < n; ++i) trace += t(i, i);
    return trace <= x && is_positive_definite(t);
  };
  while (true) {
    const SymMatQ t = build();
    if (admit(t)) out.push_back(t);
    Eigen::Index k = 0;
    while (k < static_cast<Eigen::Index>(off.size()) && off[k] == cbox) {
      off[k] = -cbox;
      ++k;
    }
    if (k < static_cast<Eigen::Index>(off.size())) {
      ++off[k];
      continue;
    }
    Eigen::Index d = 0;
    while (d < n && diag[d] == kmax) {
      diag[d] = 1;
      ++d;
    }
    if (d == n) return out;
    ++diag[d];
  }
}

// All 2 x 2 integer matrices with entries in [-bound, bound] and det +-1.
std::vector<MatQ> unimodular_box2(int bound) {
  std::vector<MatQ> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          if (a * d - b * c == 1 || a * d - b * c == -1) {
            MatQ g(2, 2);
            g << Rational(a), Rational(b), Rational(c), Rational(d);
            out.push_back(g);
          }
        }
  return out;
}

// Random unimodular matrix as a short product of elementary row additions,
// permutation swaps, and sign flips.
MatQ random_unimodular(std::mt19937& rng, Eigen::Index n, int steps = 6) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> coeff(1, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<Eigen::Index> idx(0, n - 1);
  MatQ u = MatQ::Identity(n, n);
  for (int s = 0; s < steps; ++s) {
    MatQ e = MatQ::Identity(n, n);
    Eigen::Index i = idx(rng), j = idx(rng);
    switch (pick(rng)) {
      case 0:
        if (i == j) j = (j + 1) % n;
        e(i, j) = Rational(sign(rng) ? coeff(rng) : -coeff(rng));
        break;
      case 1:
        if (i != j) {
          e(i, i) = 0;
          e(j, j) = 0;
          e(i, j) = 1;
          e(j, i) = 1;
        }
        break;
      default:
        e(i, i) = -1;
        break;
    }
    u = MatQ(u * e);
  }
  return u;
}

SymMatQ random_pd(std::mt19937& rng, Eigen::Index n) {
  std::uniform_int_distribution<int> entry(-3, 3);
  while (true) {
    MatQ a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Rational(entry(rng));
    }
    if (exact_det(a) == 0) continue;
    const MatQ g = a.transpose() * a;
    SymMatQ t(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i; j < n; ++j) t.set(i, j, g(i, j));
    }
    return t;
  }
}

SymMatQ symq2(const Rational& a, const Rational& b, const Rational& d) {
  SymMatQ t(2);
  t.set(0, 0, a);
  t.set(0, 1, b);
  t.set(1, 1, d);
  return t;
}

Rational trace_of(const SymMatQ& t) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < t.dim(); ++i) s += t(i, i);
  return s;
}

// Spec order for by_trace output: trace, then diagonal, then off-diagonal,
// each lexicographic.
bool trace_order_less(const SymMatQ& a, const SymMatQ& b) {
  const Rational ta = trace_of(a), tb = trace_of(b);
  if (ta != tb) return ta < tb;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    if (a(i, i) != b(i, i)) return a(i, i) < b(i, i);
  }
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = i + 1; j < a.dim(); ++j) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  }
  return false;
}

EnumSpec trace_spec(Eigen::Index n, Integer m, Rational x) {
  EnumSpec spec;
  spec.n = n;
  spec.m = std::move(m);
  spec.kind = EnumSpec::Cutoff::Trace;
  spec.cutoff = std::move(x);
  return spec;
}

}  // namespace

TEST_CASE("count_bound closed forms") {
  CHECK(count_bound(1, 1, 5) == Rational(5));
  CHECK(count_bound(1, 1, Rational(7, 2)) == Rational(7, 2));
  CHECK(count_bound(2, 1, 2) == Rational(16));
  CHECK(count_bound(3, 2, 3) == Rational(373248));
  CHECK_THROWS_AS(count_bound(0, 1, 1), Error);
  CHECK_THROWS_AS(count_bound(2, 0, 1), Error);
  CHECK_THROWS_AS(count_bound(2, 1, 0), Error);
}

TEST_CASE("by_trace genus 1 lists integers up to the cutoff") {
  const auto list = by_trace(trace_spec(1, 1, 5));
  REQUIRE(list.size() == 5);
  for (int k = 1; k <= 5; ++k) CHECK(list[k - 1](0, 0) == Rational(k));

  const auto halves = by_trace(trace_spec(1, 2, Rational(5, 2)));
  REQUIRE(halves.size() == 5);
  for (int k = 1; k <= 5; ++k) CHECK(halves[k - 1](0, 0) == Rational(k, 2));
}

TEST_CASE("by_trace genus 2 pinned example") {
  const auto list = by_trace(trace_spec(2, 1, 2));
  REQUIRE(list.size() == 3);
  for (int b = -1; b <= 1; ++b) {
    CHECK(list[b + 1] == symq2(1, Rational(b, 2), 1));
  }
  CHECK(Rational(list.size()) <= count_bound(2, 1, 2));
}

TEST_CASE("by_trace matches the brute-force box oracle") {
  struct Cell {
    Eigen::Index n;
    int m;
    Rational x;
  };
  const Cell cells[] = {{2, 1, 2},          {2, 1, 3}, {2, 2, 1},
                        {2, 2, 2},          {2, 3, 1}, {2, 1, Rational(5, 2)},
                        {3, 1, 4},          {3, 2, 2}};
  for (const auto& cell : cells) {
    CAPTURE(cell.n);
    CAPTURE(cell.m);
    const auto list = by_trace(trace_spec(cell.n, cell.m, cell.x));
    const auto oracle = brute_force_by_trace(cell.n, cell.m, cell.x);
    REQUIRE(list.size() == oracle.size());
    const LexSet got(list.begin(), list.end());
    for (const auto& t : oracle) CHECK(got.count(t) == 1);
  }
}

TEST_CASE("by_trace output is ordered, duplicate-free, and exact") {
  for (Eigen::Index n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      for (int x = 1; x <= 4; ++x) {
        if (n == 3 && m == 2 && x > 3) continue;
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(x);
        const auto spec = trace_spec(n, m, x);
        const auto list = by_trace(spec, 5000000);
        CHECK(Integer(list.size()) == by_trace_count(spec));
        CHECK(Rational(Integer(list.size())) <= count_bound(n, m, x));
        const LexSet distinct(list.begin(), list.end());
        CHECK(distinct.size() == list.size());
        for (std::size_t k = 0; k + 1 < list.size(); ++k) {
          CHECK(trace_order_less(list[k], list[k + 1]));
        }
        for (const auto& t : list) {
          CHECK(in_dual_lattice(t, m));
          CHECK(is_positive_definite(t));
          CHECK(trace_of(t) <= Rational(x));
        }
      }
    }
  }
}

TEST_CASE("by_trace validates its spec and cap") {
  CHECK_THROWS_AS(by_trace(trace_spec(4, 1, 1)), Error);
  CHECK_THROWS_AS(by_trace(trace_spec(2, 0, 1)), Error);
  CHECK_THROWS_AS(by_trace(trace_spec(2, 1, -1)), Error);
  EnumSpec det_spec = trace_spec(2, 1, 1);
  det_spec.kind = EnumSpec::Cutoff::Det;
  CHECK_THROWS_AS(by_trace(det_spec), Error);
  CHECK_THROWS_AS(by_trace(trace_spec(2, 3, 6), 100), Error);
}

TEST_CASE("by_trace_count handles cells past the materialization cap") {
  const auto spec = trace_spec(3, 3, 6);
  CHECK_THROWS_AS(by_trace(spec), Error);
  const Integer count = by_trace_count(spec);
  CHECK(count > 0);
  CHECK(Rational(count) <= count_bound(3, 3, 6));
  CHECK(by_trace_count(spec) == count);
}

TEST_CASE("reduced_by_det genus 1 and the pinned genus 2 example") {
  const auto line = reduced_by_det(1, 1, 7);
  REQUIRE(line.size() == 7);
  for (int k = 1; k <= 7; ++k) CHECK(line[k - 1](0, 0) == Rational(k));

  const auto cell = reduced_by_det(2, 1, 1);
  REQUIRE(cell.size() == 2);
  CHECK(cell[0] == symq2(1, 0, 1));
  CHECK(cell[1] == symq2(1, Rational(1, 2), 1));
}

TEST_CASE("reduced_by_det members satisfy the reduced-domain inequalities") {
  for (int m = 1; m <= 3; ++m) {
    for (int r = 1; r <= 4; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      for (const auto& t : reduced_by_det(2, m, r)) {
        CHECK(in_dual_lattice(t, m));
        CHECK(is_positive_definite(t));
        const Rational det = exact_det(t);
        CHECK(det <= Rational(r));
        CHECK(t(0, 1) >= 0);
        CHECK(2 * t(0, 1) <= t(0, 0));
        CHECK(t(0, 0) <= t(1, 1));
        CHECK(t(0, 0) * t(0, 0) <= Rational(4, 3) * det);
        CHECK(minkowski_reduce(t).reduced(0, 0) == t(0, 0));
      }
    }
  }
}

TEST_CASE("reduced_by_det expansion recovers the direct box search") {
  const auto gammas = unimodular_box2(3);
  for (int m = 1; m <= 2; ++m) {
    for (int r = 1; r <= 4; r += 3) {
      CAPTURE(m);
      CAPTURE(r);
      LexSet expanded;
      for (const auto& rep : reduced_by_det(2, m, r)) {
        for (const auto& g : gammas) expanded.insert(gl_action(rep, g));
      }
      const Integer abox = 6 * m;
      const Integer cbox = 2 * abox;
      for (Integer a = 1; a <= abox; ++a) {
        for (Integer b = 1; b <= abox; ++b) {
          for (Integer c = -cbox; c <= cbox; ++c) {
            const SymMatQ t = symq2(Rational(a, m), Rational(c, 2 * m), Rational(b, m));
            if (!is_positive_definite(t)) continue;
            if (exact_det(t) > Rational(r)) continue;
            CHECK(expanded.count(t) == 1);
          }
        }
      }
    }
  }
}

TEST_CASE("reduced_by_det representatives are canonical and distinct") {
  for (int m = 1; m <= 2; ++m) {
    const auto reps = reduced_by_det(2, m, 4);
    LexSet canon;
    for (const auto& rep : reps) {
      CHECK(orbit_canonical(rep) == rep);
      canon.insert(orbit_canonical(rep));
    }
    CHECK(canon.size() == reps.size());
  }
}

TEST_CASE("orbit_canonical fixes the identity and merges the sign twins") {
  for (Eigen::Index n = 1; n <= 3; ++n) {
    CHECK(orbit_canonical(SymMatQ::identity(n)) == SymMatQ::identity(n));
  }
  const SymMatQ plus = symq2(1, Rational(1, 2), 1);
  const SymMatQ minus = symq2(1, Rational(-1, 2), 1);
  CHECK(orbit_canonical(plus) == plus);
  CHECK(orbit_canonical(minus) == plus);
}

TEST_CASE("orbit_canonical is invariant along random orbits") {
  std::mt19937 rng(20260814);
  for (int trial = 0; trial < 200; ++trial) {
    const SymMatQ t = random_pd(rng, 2);
    const SymMatQ canon = orbit_canonical(t);
    const MatQ g = random_unimodular(rng, 2);
    REQUIRE(boost::multiprecision::abs(numerator(exact_det(g))) == 1);
    CHECK(orbit_canonical(gl_action(t, g)) == canon);
  }
  for (int trial = 0; trial < 60; ++trial) {
    const SymMatQ t = random_pd(rng, 3);
    const SymMatQ canon = orbit_canonical(t);
    CHECK(is_positive_definite(canon));
    CHECK(exact_det(canon) == exact_det(t));
    const MatQ g = random_unimodular(rng, 3);
    CHECK(orbit_canonical(gl_action(t, g)) == canon);
  }
}

TEST_CASE("orbit_canonical rejects unsupported dimensions and indefinite input") {
  CHECK_THROWS_AS(orbit_canonical(SymMatQ::identity(4)), Error);
  CHECK_THROWS_AS(orbit_canonical(symq2(1, 2, 1)), Error);
}
