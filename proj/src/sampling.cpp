#include "cyk/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "cyk/domain.hpp"

namespace cyk {

namespace {

CMat gaussian(int r, int c, Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  CMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = cplx(n(rng), n(rng));
  return m;
}

}  // namespace

std::vector<cplx> random_real_branch_points(int g, Rng& rng, double span, double min_gap) {
  std::uniform_real_distribution<double> u(-span, span);
  const int n = 2 * g + 1;
  for (;;) {
    std::vector<double> x(n);
    for (auto& v : x) v = u(rng);
    std::sort(x.begin(), x.end());
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i)
      if (x[i + 1] - x[i] < min_gap) ok = false;
    if (!ok) continue;
    return {x.begin(), x.end()};
  }
}

CMat random_siegel(int g, Rng& rng) {
  std::normal_distribution<double> n(0.0, 0.5);
  RMat X(g, g), A(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      X(i, j) = n(rng);
      A(i, j) = n(rng);
    }
  const RMat Xs = 0.5 * (X + X.transpose());
  const RMat Y = A * A.transpose() + 0.4 * RMat::Identity(g, g);
  CMat Z(g, g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) Z(i, j) = cplx(Xs(i, j), Y(i, j));
  return Z;
}

CMat random_domain_point(int g, Rng& rng, double max_norm) {
  std::uniform_real_distribution<double> u(0.0, max_norm);
  const CMat m = gaussian(g, g, rng);
  const double s = Eigen::JacobiSVD<CMat>(m).singularValues()(0);
  return m * (u(rng) / s);
}

CMat random_unitary(int n, Rng& rng) {
  Eigen::HouseholderQR<CMat> qr(gaussian(n, n, rng));
  CMat Q = qr.householderQ();
  const CMat R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const cplx d = R(k, k);
    if (std::abs(d) > 0) Q.col(k) *= d / std::abs(d);
  }
  return Q;
}

CMat random_su(int g, Rng& rng, double max_norm) {
  const CMat W = transitive_witness(random_domain_point(g, rng, max_norm));
  const CMat U = random_unitary(g, rng);
  CMat V = random_unitary(g, rng);
  const cplx d = U.determinant() * V.determinant();
  V *= std::pow(1.0 / d, 1.0 / g);
  CMat K = CMat::Zero(2 * g, 2 * g);
  K.topLeftCorner(g, g) = U;
  K.bottomRightCorner(g, g) = V;
  return W * K;
}

}  // namespace cyk
