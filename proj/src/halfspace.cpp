#include "smf/halfspace.hpp"

#include <Eigen/Eigenvalues>

namespace smf {

Real min_eigenvalue(const SymMatR& y) {
  Eigen::SelfAdjointEigenSolver<SymMatR::Mat> solver(y.mat(),
                                                     Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("min_eigenvalue: eigenvalue iteration failed");
  }
  return solver.eigenvalues().minCoeff();
}

SymMatR to_floating(const SymMatQ& t) {
  SymMatR out(t.dim());
  for (Eigen::Index i = 0; i < t.dim(); ++i) {
    for (Eigen::Index j = i; j < t.dim(); ++j) {
      out.set(i, j, to_real<Real>(t(i, j)));
    }
  }
  return out;
}

HalfSpacePointR to_floating(const HalfSpacePointQ& z) {
  return HalfSpacePointR(to_floating(z.real_part()), to_floating(z.imag_part()));
}

CMat complex_matrix(const HalfSpacePointR& z) {
  const Eigen::Index n = z.dim();
  CMat m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      m(i, j) = Cplx(z.real_part()(i, j), z.imag_part()(i, j));
    }
  }
  return m;
}

HalfSpacePointR imaginary_point(const SymMatR& y) {
  SymMatR zero(y.dim());
  return HalfSpacePointR(zero, y);
}

}  // namespace smf
