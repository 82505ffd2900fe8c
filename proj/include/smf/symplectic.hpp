// Exact rational symplectic matrices, the standard generators, and their
// action on half-space points. The group arithmetic is exact; only the
// fractional-linear action itself runs in floating point.
#ifndef SMF_SYMPLECTIC_HPP_
#define SMF_SYMPLECTIC_HPP_

#include "smf/halfspace.hpp"
#include "smf/symmat.hpp"

namespace smf {

using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

// g^t J g = J for J = [[0, 1],[-1, 0]], checked entrywise over Q.
bool is_symplectic(const RatMat& g);

class SymplecticMat {
 public:
  using Mat = RatMat;

  // Validates the symplectic relations; throws on failure or odd size.
  static SymplecticMat from_matrix(const Mat& g);

  static SymplecticMat identity(Eigen::Index n);
  // n(X) = [[1, X],[0, 1]] for symmetric X.
  static SymplecticMat translation(const SymMatQ& x);
  // m(r) = [[r, 0],[0, r^{-t}]] for invertible r.
  static SymplecticMat gl_embed(const Mat& r);
  // [[0, -1],[1, 0]], acting as Z -> -Z^{-1}.
  static SymplecticMat inversion(Eigen::Index n);
  // Inversion in the k-th coordinate: with E = e_k e_k^t,
  // [[1-E, -E],[E, 1-E]].
  static SymplecticMat partial_inversion(Eigen::Index n, Eigen::Index k);

  Eigen::Index genus() const { return m_.rows() / 2; }
  const Mat& mat() const { return m_; }

  Mat a() const { return m_.topLeftCorner(genus(), genus()); }
  Mat b() const { return m_.topRightCorner(genus(), genus()); }
  Mat c() const { return m_.bottomLeftCorner(genus(), genus()); }
  Mat d() const { return m_.bottomRightCorner(genus(), genus()); }

  // [[d^t, -b^t],[-c^t, a^t]]; exact.
  SymplecticMat inverse() const;

  friend SymplecticMat operator*(const SymplecticMat& g, const SymplecticMat& h) {
    return SymplecticMat(Mat(g.m_ * h.m_));
  }
  bool operator==(const SymplecticMat& o) const { return m_ == o.m_; }

 private:
  explicit SymplecticMat(Mat g) : m_(std::move(g)) {}
  Mat m_;
};

// g·Z = (aZ + b)(cZ + d)^{-1}, symmetrized; throws when cZ + d is
// numerically singular or the image loses definiteness (precision
// exhaustion, not a mathematical failure).
HalfSpacePointR symplectic_act(const SymplecticMat& g, const HalfSpacePointR& z);

// j(g, Z) = det(cZ + d).
Cplx cocycle_j(const SymplecticMat& g, const HalfSpacePointR& z);

}  // namespace smf

#endif  // SMF_SYMPLECTIC_HPP_
