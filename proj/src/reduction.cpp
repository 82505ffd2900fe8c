#include "smf/reduction.hpp"

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/LU>

namespace smf {

namespace {

using IntVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;

Integer vec_gcd(const IntVec& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    g = boost::multiprecision::gcd(g, v(i));
  }
  return g;
}

// g = gcd(a, b) >= 0 together with x a + y b = g.
void egcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  Integer r0 = a, r1 = b;
  Integer x0 = 1, x1 = 0;
  Integer y0 = 0, y1 = 1;
  while (r1 != 0) {
    const Integer q = r0 / r1;
    Integer t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  if (r0 < 0) {
    r0 = -r0;
    x0 = -x0;
    y0 = -y0;
  }
  g = r0;
  x = x0;
  y = y0;
}

IntVec cross3(const IntVec& a, const IntVec& b) {
  IntVec c(3);
  c(0) = a(1) * b(2) - a(2) * b(1);
  c(1) = a(2) * b(0) - a(0) * b(2);
  c(2) = a(0) * b(1) - a(1) * b(0);
  return c;
}

Integer det2(const IntVec& a, const IntVec& b) {
  return a(0) * b(1) - a(1) * b(0);
}

Rational form_value(const RatMat& g, const IntVec& v) {
  Rational acc = 0;
  const Eigen::Index n = v.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      acc += g(i, j) * Rational(v(i)) * Rational(v(j));
    }
  }
  return acc;
}

// Nearest integer, ties toward +infinity.
Integer round_rational(const Rational& q) {
  return floor_rational(q + Rational(1, 2));
}

// Unimodular matrix whose first column is the primitive vector v (n <= 3).
RatMat complete_one(const IntVec& v) {
  const Eigen::Index n = v.size();
  RatMat u = RatMat::Zero(n, n);
  if (n == 1) {
    u(0, 0) = Rational(v(0));
    return u;
  }
  if (n == 2) {
    Integer g, x, y;
    egcd(v(0), v(1), g, x, y);
    u(0, 0) = Rational(v(0));
    u(1, 0) = Rational(v(1));
    u(0, 1) = Rational(-y);
    u(1, 1) = Rational(x);
    return u;
  }
  const Integer a = v(0), b = v(1), c = v(2);
  if (a == 0 && b == 0) {
    // c = +-1; columns (v, e1, e2) have determinant c.
    u(2, 0) = Rational(c);
    u(0, 1) = 1;
    u(1, 2) = 1;
    return u;
  }
  Integer g, s, t;
  egcd(a, b, g, s, t);
  Integer one, p, q;
  egcd(g, c, one, p, q);
  u(0, 0) = Rational(a);
  u(1, 0) = Rational(b);
  u(2, 0) = Rational(c);
  u(0, 1) = Rational(-t);
  u(1, 1) = Rational(s);
  u(0, 2) = Rational(-q * (a / g));
  u(1, 2) = Rational(-q * (b / g));
  u(2, 2) = Rational(p);
  return u;
}

// Third basis vector completing a primitive pair in Z^3 (cross gcd 1).
IntVec complete_pair(const IntVec& v1, const IntVec& v2) {
  const IntVec m = cross3(v1, v2);
  Integer g, x, y;
  egcd(m(0), m(1), g, x, y);
  Integer one, p, q;
  egcd(g, m(2), one, p, q);
  IntVec w(3);
  w(0) = x * p;
  w(1) = y * p;
  w(2) = q;
  return w;
}

// Exact LLL (delta = 3/4) on the Gram matrix; returns the unimodular
// column-transform. Gram-Schmidt data is recomputed after every column
// operation, which is cheap at n <= 3 and keeps the loop obviously exact.
RatMat lll_transform(const RatMat& gram) {
  const Eigen::Index n = gram.rows();
  RatMat u = RatMat::Identity(n, n);
  if (n == 1) return u;
  const Rational delta(3, 4);

  std::vector<Rational> bstar(n);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, Rational(0)));
  auto gso = [&]() {
    const RatMat g = u.transpose() * gram * u;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < i; ++j) {
        Rational num = g(i, j);
        for (Eigen::Index k = 0; k < j; ++k) num -= mu[i][k] * mu[j][k] * bstar[k];
        mu[i][j] = num / bstar[j];
      }
      Rational b = g(i, i);
      for (Eigen::Index k = 0; k < i; ++k) b -= mu[i][k] * mu[i][k] * bstar[k];
      bstar[i] = b;
    }
  };

  for (int guard = 0; guard < 10000; ++guard) {
    gso();
    for (Eigen::Index i = 1; i < n; ++i) {
      for (Eigen::Index j = i - 1; j >= 0; --j) {
        const Integer q = round_rational(mu[i][j]);
        if (q != 0) {
          u.col(i) -= Rational(q) * u.col(j);
          gso();
        }
      }
    }
    Eigen::Index swap_at = -1;
    for (Eigen::Index k = 1; k < n; ++k) {
      if (bstar[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
        swap_at = k;
        break;
      }
    }
    if (swap_at < 0) return u;
    u.col(swap_at).swap(u.col(swap_at - 1));
  }
  throw Error("lll_transform: iteration guard exceeded");
}

// Diagonal cofactors det(G with row/col i removed); 1 for n = 1.
std::vector<Rational> diagonal_cofactors(const RatMat& g) {
  const Eigen::Index n = g.rows();
  std::vector<Rational> cof(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    RatMat sub(n - 1, n - 1);
    Eigen::Index r = 0;
    for (Eigen::Index a = 0; a < n; ++a) {
      if (a == i) continue;
      Eigen::Index c = 0;
      for (Eigen::Index b = 0; b < n; ++b) {
        if (b == i) continue;
        sub(r, c) = g(a, b);
        ++c;
      }
      ++r;
    }
    cof[i] = (n == 1) ? Rational(1) : exact_det(sub);
  }
  return cof;
}

// Per-coordinate search radii: any v with v^t G v <= bound has
// v_i^2 <= bound * (G^{-1})_ii = bound * cof_i / det.
std::vector<Integer> box_radii(const RatMat& g, const Rational& bound,
                               const std::vector<Rational>& cof,
                               const Rational& det) {
  std::vector<Integer> radii(g.rows());
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    radii[static_cast<size_t>(i)] =
        isqrt(floor_rational(bound * cof[static_cast<size_t>(i)] / det));
  }
  return radii;
}

// Minimum of the form over nonzero vectors in the box that satisfy pred,
// ties broken toward the lexicographically greatest vector. Only one of
// +-v is visited.
template <typename Pred>
std::optional<std::pair<Rational, IntVec>> box_min(const RatMat& g,
                                                   const std::vector<Integer>& radii,
                                                   Pred pred) {
  const Eigen::Index n = g.rows();
  IntVec v(n);
  std::vector<long long> cur(n), lim(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lim[i] = radii[static_cast<size_t>(i)].convert_to<long long>();
    cur[i] = -lim[i];
  }
  std::optional<std::pair<Rational, IntVec>> best;
  while (true) {
    for (Eigen::Index i = 0; i < n; ++i) v(i) = Integer(cur[i]);
    Eigen::Index first = 0;
    while (first < n && v(first) == 0) ++first;
    if (first < n && v(first) > 0 && pred(v)) {
      Rational val = form_value(g, v);
      if (!best || val < best->first ||
          (val == best->first && [&] {
            for (Eigen::Index i = 0; i < n; ++i) {
              if (v(i) != best->second(i)) return v(i) > best->second(i);
            }
            return false;
          }())) {
        best = {std::move(val), v};
      }
    }
    Eigen::Index pos = n - 1;
    while (pos >= 0 && cur[pos] == lim[pos]) {
      cur[pos] = -lim[pos];
      --pos;
    }
    if (pos < 0) break;
    ++cur[pos];
  }
  return best;
}

bool is_identity(const RatMat& m) {
  return m == RatMat(RatMat::Identity(m.rows(), m.cols()));
}

bool entries_integral(const RatMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) return false;
    }
  }
  return true;
}

Integer round_to_integer(Real x) {
  if (!(std::fabs(x) < 1e15L)) {
    throw Error("siegel_reduce: translation overflow (precision exhaustion)");
  }
  return Integer(std::llround(static_cast<double>(x)));
}

SymMatQ rationalize(const SymMatR& y) {
  SymMatQ out(y.dim());
  for (Eigen::Index i = 0; i < y.dim(); ++i) {
    for (Eigen::Index j = i; j < y.dim(); ++j) {
      out.set(i, j, rational_from_real(y(i, j)));
    }
  }
  return out;
}

// Determinant-increasing candidate moves. Rank-one inversions along the
// vectors (1,0), (0,1), (1,1), (1,-1) and the full inversion, each composed
// with every symmetric integral shift with entries in {-1, 0, 1}; this
// family dominates the classical genus-2 boundary inequalities.
const std::vector<SymplecticMat>& inversion_moves(Eigen::Index n) {
  static const std::vector<SymplecticMat> genus1 = [] {
    std::vector<SymplecticMat> moves;
    for (int s = -1; s <= 1; ++s) {
      SymMatQ shift(1);
      shift.set(0, 0, Rational(s));
      moves.push_back(SymplecticMat::inversion(1) * SymplecticMat::translation(shift));
    }
    return moves;
  }();
  static const std::vector<SymplecticMat> genus2 = [] {
    std::vector<SymplecticMat> bases;
    bases.push_back(SymplecticMat::inversion(2));
    bases.push_back(SymplecticMat::partial_inversion(2, 0));
    bases.push_back(SymplecticMat::partial_inversion(2, 1));
    for (int sign : {1, -1}) {
      RatMat r = RatMat::Identity(2, 2);
      r(0, 1) = Rational(sign);
      bases.push_back(SymplecticMat::partial_inversion(2, 0) *
                      SymplecticMat::gl_embed(r));
    }
    std::vector<SymplecticMat> moves;
    for (const auto& base : bases) {
      for (int s00 = -1; s00 <= 1; ++s00) {
        for (int s01 = -1; s01 <= 1; ++s01) {
          for (int s11 = -1; s11 <= 1; ++s11) {
            SymMatQ shift(2);
            shift.set(0, 0, Rational(s00));
            shift.set(0, 1, Rational(s01));
            shift.set(1, 1, Rational(s11));
            moves.push_back(base * SymplecticMat::translation(shift));
          }
        }
      }
    }
    return moves;
  }();
  return n == 1 ? genus1 : genus2;
}

}  // namespace

Rational hermite_pow(Eigen::Index n) {
  switch (n) {
    case 1:
      return Rational(1);
    case 2:
      return Rational(4, 3);
    case 3:
      return Rational(2);
    default:
      throw Error("hermite_pow: unsupported dimension");
  }
}

Real siegel_floor(Eigen::Index n) {
  switch (n) {
    case 1:
      return std::sqrt(3.0L) / 2.0L;
    case 2:
      return 0.5L;
    default:
      throw Error("siegel_floor: unsupported dimension");
  }
}

Rational shortest_value_bruteforce(const SymMatQ& t, const Integer& radius) {
  if (radius <= 0) throw Error("shortest_value_bruteforce: radius must be positive");
  const Eigen::Index n = t.dim();
  std::vector<Integer> radii(static_cast<size_t>(n), radius);
  auto best = box_min(t.mat(), radii, [](const IntVec&) { return true; });
  if (!best) throw Error("shortest_value_bruteforce: empty box");
  return best->first;
}

MinkowskiCert minkowski_reduce(const SymMatQ& t) {
  const Eigen::Index n = t.dim();
  if (n > 3) throw Error("minkowski_reduce: unsupported dimension");
  if (!is_positive_definite(t)) throw Error("minkowski_reduce: not positive-definite");

  const RatMat pre = lll_transform(t.mat());
  const RatMat g = pre.transpose() * t.mat() * pre;
  const Rational det = exact_det(g);
  const std::vector<Rational> cof = diagonal_cofactors(g);

  std::vector<IntVec> chosen;
  for (Eigen::Index k = 0; k < n; ++k) {
    // Value bound B_k: some admissible vector achieves it, so the argmin
    // lies inside the corresponding box.
    Rational bound;
    if (k == 0) {
      bound = g(0, 0);
      for (Eigen::Index i = 1; i < n; ++i) bound = std::min(bound, Rational(g(i, i)));
    } else if (k == 1) {
      const RatMat comp = complete_one(chosen[0]);
      bound = form_value(g, IntVec(comp.col(1).unaryExpr(
                                [](const Rational& q) { return numerator(q); })));
      for (Eigen::Index c = 2; c < n; ++c) {
        bound = std::min(bound,
                         form_value(g, IntVec(comp.col(c).unaryExpr([](const Rational& q) {
                           return numerator(q);
                         }))));
      }
    } else {
      bound = form_value(g, complete_pair(chosen[0], chosen[1]));
    }

    auto pred = [&](const IntVec& v) {
      if (k == 0) return vec_gcd(v) == 1;
      if (k == 1) {
        if (n == 2) {
          const Integer d = det2(chosen[0], v);
          return d == 1 || d == -1;
        }
        return vec_gcd(cross3(chosen[0], v)) == 1;
      }
      const Integer d = chosen[0].dot(cross3(chosen[1], v));
      return d == 1 || d == -1;
    };

    auto best = box_min(g, box_radii(g, bound, cof, det), pred);
    if (!best) throw Error("minkowski_reduce: search box empty");
    chosen.push_back(best->second);
  }

  RatMat greedy(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) greedy(i, k) = Rational(chosen[k](i));
  }
  RatMat transform = pre * greedy;

  static const Real c_n[] = {0.0L, 1.0L, 1.15470053837925152902L,
                             1.25992104989487316477L};
  return MinkowskiCert{transform, gl_action(t, transform), c_n[n]};
}

bool check_certificate(const MinkowskiCert& cert, const SymMatQ& input) {
  const Eigen::Index n = input.dim();
  if (cert.transform.rows() != n || cert.transform.cols() != n) return false;
  if (!entries_integral(cert.transform)) return false;
  const Rational d = exact_det(cert.transform);
  if (d != 1 && d != -1) return false;
  if (!(gl_action(input, cert.transform) == cert.reduced)) return false;
  if (!is_positive_definite(cert.reduced)) return false;
  Rational lhs = 1;
  for (Eigen::Index i = 0; i < n; ++i) lhs *= cert.reduced(0, 0);
  return lhs <= hermite_pow(n) * exact_det(input);
}

SiegelCert siegel_reduce(const HalfSpacePointR& z) {
  const Eigen::Index n = z.dim();
  if (n > 2) throw Error("siegel_reduce: unsupported dimension");

  HalfSpacePointR current = z;
  SymplecticMat acc = SymplecticMat::identity(n);
  const auto& moves = inversion_moves(n);
  bool done = false;

  for (int iter = 0; iter < 500 && !done; ++iter) {
    // Minkowski-reduce the imaginary part: m(r) sends Z to r Z r^t, so
    // r = gamma^t realizes Y -> gamma^t Y gamma.
    const MinkowskiCert mc = minkowski_reduce(rationalize(current.imag_part()));
    if (!is_identity(mc.transform)) {
      const SymplecticMat g = SymplecticMat::gl_embed(RatMat(mc.transform.transpose()));
      current = symplectic_act(g, current);
      acc = g * acc;
    }

    // Translate the real part to the nearest integral symmetric matrix.
    SymMatQ shift(n);
    bool nonzero = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i; j < n; ++j) {
        const Integer r = round_to_integer(current.real_part()(i, j));
        if (r != 0) nonzero = true;
        shift.set(i, j, Rational(-r));
      }
    }
    if (nonzero) {
      const SymplecticMat g = SymplecticMat::translation(shift);
      current = symplectic_act(g, current);
      acc = g * acc;
    }

    // Steepest admissible inversion move; each application multiplies
    // det Im by 1/|j|^2 > 1, so the loop terminates.
    const SymplecticMat* pick = nullptr;
    Real best = 1.0L - 1e-12L;
    for (const auto& move : moves) {
      const Real a = std::abs(cocycle_j(move, current));
      if (a < best) {
        best = a;
        pick = &move;
      }
    }
    if (pick) {
      current = symplectic_act(*pick, current);
      acc = *pick * acc;
    } else {
      done = true;
    }
  }
  if (!done) throw Error("siegel_reduce: iteration cap exceeded (precision exhaustion)");

  return SiegelCert{acc, symplectic_act(acc, z), siegel_floor(n)};
}

bool check_certificate(const SiegelCert& cert, const HalfSpacePointR& input,
                       Real tol) {
  if (cert.transform.genus() != input.dim()) return false;
  if (!entries_integral(cert.transform.mat())) return false;
  if (!is_symplectic(cert.transform.mat())) return false;
  if (min_eigenvalue(cert.reduced.imag_part()) < cert.floor_constant - tol) {
    return false;
  }
  const Real det_in = input.imag_part().mat().determinant();
  const Real det_out = cert.reduced.imag_part().mat().determinant();
  if (det_out < det_in * (1 - tol)) return false;
  const HalfSpacePointR replay = symplectic_act(cert.transform, input);
  const Real dist =
      (complex_matrix(replay) - complex_matrix(cert.reduced)).cwiseAbs().maxCoeff();
  return dist <= tol;
}

}  // namespace smf
