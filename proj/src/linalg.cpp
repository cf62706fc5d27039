#include "cyk/linalg.hpp"

#include <cmath>

#include "cyk/error.hpp"

namespace cyk {

double min_eig_hermitian(const CMat& a) {
  const CMat h = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double min_eig_symmetric(const RMat& a) {
  const RMat h = (a + a.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<RMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

CMat hermitian_power(const CMat& a, double p) {
  const CMat h = (a + a.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const RVec& ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0) {
    throw Error(ErrorCode::NotPositiveDefinite, "matrix power needs a positive definite argument");
  }
  RVec powered(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) powered(i) = std::pow(ev(i), p);
  return es.eigenvectors() * powered.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
}

double max_abs(const CMat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }
double max_abs(const RMat& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

RMat standard_symplectic(int n) {
  RMat j = RMat::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n) = RMat::Identity(n, n);
  j.bottomLeftCorner(n, n) = -RMat::Identity(n, n);
  return j;
}

}  // namespace cyk
