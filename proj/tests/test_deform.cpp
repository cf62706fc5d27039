#include <gtest/gtest.h>

#include <cmath>

#include "cyk/deform.hpp"
#include "cyk/error.hpp"
#include "cyk/sampling.hpp"

using namespace cyk;

namespace {

GaussRational rg(Rng& rng) {
  std::uniform_int_distribution<int> n(-7, 7), d(1, 6);
  return {Rational(n(rng), d(rng)), Rational(n(rng), d(rng))};
}

std::vector<std::vector<GaussRational>> rmat(int g, Rng& rng) {
  std::vector<std::vector<GaussRational>> m(g, std::vector<GaussRational>(g));
  for (auto& row : m)
    for (auto& x : row) x = rg(rng);
  return m;
}

CMat special_unitary(int g, Rng& rng) {
  CMat U = random_unitary(g, rng);
  return U * std::pow(1.0 / U.determinant(), 1.0 / g);
}

}  // namespace

TEST(Bracket, ConstantFieldsVanish) {
  Rng rng(1);
  for (int s = 0; s < 200; ++s) {
    const int g = 1 + s % 4;
    EXPECT_TRUE(bracket(BeltramiField::constant(rmat(g, rng)), BeltramiField::constant(rmat(g, rng))).is_zero());
  }
}

TEST(Bracket, PolynomialCounterexample) {
  // phi1 = z^1 dzbar^1 (x) d_1, phi2 = dzbar^2 (x) d_1: only T(1,2) survives,
  // giving -phi2^1_2 d_1 phi1^1_1 = -1 in component (1 2; 1).
  auto a = BeltramiField::zero(2), b = BeltramiField::zero(2);
  a.coeffs[0][0] = Poly::monomial(2, {1, 0}, GaussRational(1));
  b.coeffs[0][1] = Poly::constant(2, GaussRational(1));
  const auto br = bracket(a, b);
  EXPECT_FALSE(br.is_zero());
  EXPECT_EQ(br.component(0, 1, 0), Poly::constant(2, GaussRational(-1)));
  EXPECT_EQ(br.component(1, 0, 0), Poly::constant(2, GaussRational(1)));
  EXPECT_TRUE(br.component(0, 1, 1).is_zero());
  const auto ba = bracket(b, a);
  EXPECT_EQ(ba.component(0, 1, 0), br.component(0, 1, 0));
}

TEST(Bracket, Bilinear) {
  Rng rng(2);
  auto a = BeltramiField::zero(2), b = BeltramiField::zero(2), c = BeltramiField::zero(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a.coeffs[i][j] = Poly::monomial(2, {i, j}, rg(rng));
      b.coeffs[i][j] = Poly::monomial(2, {j, 1}, rg(rng));
      c.coeffs[i][j] = Poly::monomial(2, {1, i}, rg(rng));
    }
  auto bc = b;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) bc.coeffs[i][j] = b.coeffs[i][j] + c.coeffs[i][j];
  const auto lhs = bracket(a, bc), x = bracket(a, b), y = bracket(a, c);
  for (int nu = 0; nu < 2; ++nu)
    EXPECT_EQ(lhs.component(0, 1, nu), x.component(0, 1, nu) + y.component(0, 1, nu));
}

TEST(Kuranishi, LinearSeries) {
  Rng rng(3);
  const int g = 2;
  std::vector<BeltramiField> basis;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      std::vector<std::vector<GaussRational>> e(g, std::vector<GaussRational>(g, GaussRational(0)));
      e[i][j] = GaussRational(1);
      basis.push_back(BeltramiField::constant(e));
    }
  std::vector<GaussRational> tau;
  for (int k = 0; k < g * g; ++k) tau.push_back(rg(rng));
  const auto r = kuranishi_series(basis, tau);
  EXPECT_TRUE(r.certificate.brackets_vanish);
  EXPECT_TRUE(r.certificate.residual_zero);
  EXPECT_EQ(r.phi.coeffs[1][0], Poly::constant(g, tau[2]));
  const auto z = kuranishi_series(basis, std::vector<GaussRational>(g * g, GaussRational(0)));
  EXPECT_EQ(z.phi.max_degree(), -1);
  auto poly = BeltramiField::zero(2);
  poly.coeffs[0][0] = Poly::monomial(2, {1, 0}, GaussRational(1));
  EXPECT_THROW(kuranishi_series({poly}, {GaussRational(1)}), Error);
}

TEST(OmegaTau, Coefficients) {
  const CMat z0 = CMat::Zero(3, 3);
  const auto w0 = omega_tau(z0);
  int nonzero = 0;
  for (const auto& kv : w0.coeffs) nonzero += std::abs(kv.second) > 0;
  EXPECT_EQ(nonzero, 1);
  EXPECT_EQ(w0.coeff({0, 1, 2}, {}), cplx(1.0));

  CMat t1(1, 1);
  t1(0, 0) = cplx(0.3, -0.2);
  EXPECT_EQ(omega_tau(t1).coeff({}, {0}), t1(0, 0));

  CMat t(2, 2);
  t << cplx(1, 2), cplx(0.5, 0), cplx(-1, 0.25), cplx(3, -1);
  const auto w = omega_tau(t);
  EXPECT_LT(std::abs(w.coeff({}, {0, 1}) - t.determinant()), 1e-14);
  const auto parts = hodge_components(w);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].coeffs.size(), 1u);
  EXPECT_EQ(parts[1].coeffs.size(), 4u);
  EXPECT_EQ(parts[2].coeffs.size(), 1u);
}

TEST(OmegaTau, HomogeneousDegree) {
  Rng rng(4);
  const CMat t = random_domain_point(3, rng, 0.8);
  const double s = 0.7;
  const auto a = omega_tau(t), b = omega_tau(s * t);
  for (const auto& [key, c] : a.coeffs) {
    const int k = static_cast<int>(key.second.size());
    EXPECT_LT(std::abs(b.coeff(key.first, key.second) - std::pow(s, k) * c), 1e-13);
  }
}

TEST(Potential, Oracles) {
  EXPECT_NEAR(wp_potential(CMat::Zero(2, 2)).value, 1.0, 1e-15);
  CMat t(1, 1);
  t(0, 0) = cplx(0.3, 0.4);
  EXPECT_NEAR(wp_potential(t).pairing_sum, 1.0 - 0.25, 1e-15);
  Rng rng(5);
  for (int s = 0; s < 40; ++s) {
    const auto r = wp_potential(random_domain_point(1 + s % 3, rng, 0.95));
    EXPECT_NEAR(r.pairing_sum, r.closed_form, 1e-12);
  }
}

TEST(Potential, UnitaryInvariance) {
  Rng rng(6);
  for (int g = 1; g <= 3; ++g) {
    const CMat t = random_domain_point(g, rng, 0.9);
    const CMat u = special_unitary(g, rng), v = special_unitary(g, rng);
    EXPECT_NEAR(wp_potential(t).value, wp_potential(CMat(u.transpose() * t * v)).value, 1e-10);
  }
}

TEST(Potential, MonotoneToBoundary) {
  Rng rng(7);
  CMat d = random_domain_point(2, rng, 1.0);
  d /= Eigen::JacobiSVD<CMat>(d).singularValues()(0);
  double prev = 2.0;
  for (double r = 0.0; r < 1.0; r += 0.05) {
    const double v = wp_potential(r * d).value;
    EXPECT_LT(v, prev);
    prev = v;
  }
  EXPECT_LT(wp_potential(0.999999 * d).value, 1e-5);
}

TEST(Metric, IdentityAtOrigin) {
  for (int g = 1; g <= 3; ++g)
    EXPECT_LT(max_abs(CMat(wp_metric(CMat::Zero(g, g)) - CMat::Identity(g * g, g * g))), 1e-8);
}

TEST(Metric, DiskClosedForm) {
  for (double x : {0.1, 0.4, 0.7}) {
    CMat t(1, 1);
    t(0, 0) = cplx(x, -0.5 * x);
    const double r2 = std::norm(t(0, 0));
    EXPECT_NEAR(wp_metric(t)(0, 0).real(), 1.0 / ((1 - r2) * (1 - r2)), 1e-6);
  }
}

TEST(Metric, SpectrumInvariantAndPositive) {
  Rng rng(8);
  for (int g = 1; g <= 2; ++g) {
    const CMat t = random_domain_point(g, rng, 0.7);
    const CMat u = random_unitary(g, rng), v = random_unitary(g, rng);
    const Eigen::VectorXd a = Eigen::SelfAdjointEigenSolver<CMat>(wp_metric(t)).eigenvalues();
    const Eigen::VectorXd b = Eigen::SelfAdjointEigenSolver<CMat>(wp_metric(CMat(u.transpose() * t * v))).eigenvalues();
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-6);
    EXPECT_GT(a.minCoeff(), 0.0);
  }
}

TEST(Metric, BoundaryErrors) {
  CMat t(1, 1);
  t(0, 0) = 0.99;
  try {
    wp_metric(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::StepTooLarge);
  }
  t(0, 0) = 1.5;
  try {
    wp_metric(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInDomain);
  }
}

TEST(Curvature, DiskConstant) {
  Rng rng(9);
  for (int s = 0; s < 4; ++s) {
    const CMat t = random_domain_point(1, rng, 0.5);
    CVec u(1);
    u(0) = 1.0;
    EXPECT_NEAR(wp_curvature(t).holomorphic_sectional(u), -2.0, 1e-4);
  }
}

TEST(Curvature, ParallelGenusOneAndTwo) {
  Rng rng(10);
  for (int g = 1; g <= 2; ++g)
    for (int s = 0; s < 2; ++s) {
      const CMat t = s == 0 ? CMat::Zero(g, g) : random_domain_point(g, rng, 0.4);
      CMat d = random_domain_point(g, rng, 1.0);
      d /= d.norm();
      EXPECT_LT(nabla_R_check(t, d), g == 1 ? 1e-4 : 1e-3);
    }
}

TEST(Taylor, ExpansionAtOrigin) {
  for (int g = 1; g <= 2; ++g) {
    const auto r = metric_taylor_check(g, 5);
    EXPECT_LT(r.metric_at_zero_defect, 1e-8);
    EXPECT_LT(r.third_order_max, 1e-7);
    EXPECT_LT(r.quadratic_vs_curvature, 1e-3);
    EXPECT_TRUE(r.ok);
  }
}
