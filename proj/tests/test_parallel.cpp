#include <gtest/gtest.h>

#include <cmath>

#include "cyk/combinatorics.hpp"
#include "cyk/cover.hpp"
#include "cyk/curve.hpp"
#include "cyk/parallel/kernels.hpp"
#include "cyk/sampling.hpp"
#include "cyk/theta.hpp"

using namespace cyk;

TEST(Kernels, QuadratureSerialMatchesOmp) {
  std::vector<kernels::QuadJob> jobs;
  for (int k = 1; k <= 9; ++k)
    jobs.push_back({[k](double x) {
                      CVec v(2);
                      v << std::exp(-k * x * x), cplx(std::cos(k * x), std::sin(x) / k);
                      return v;
                    },
                    0.0, 1.0 + k});
  const QuadratureOptions opt;
  const auto a = kernels::integrate_serial(jobs, opt), b = kernels::integrate_omp(jobs, opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].value, b[i].value);
  EXPECT_NEAR(a[0].value(0).real(), std::sqrt(kPi) / 2 * std::erf(2.0), 1e-12);
}

TEST(Kernels, ThetaSumSerialMatchesOmp) {
  Rng rng(21);
  for (int g = 1; g <= 3; ++g) {
    const CMat Z = random_siegel(g, rng);
    const RMat Y = Z.imag();
    const RVec c = RVec::Zero(g);
    const auto lat = theta_lattice(Y, c, std::vector<int>(g, 1), 3.0 * theta_radius(Y, 1e-14));
    CVec w(g);
    for (int i = 0; i < g; ++i) w(i) = cplx(0.1 * i, 0.02);
    const cplx s = kernels::theta_sum_serial(lat, Z, w), o = kernels::theta_sum_omp(lat, Z, w);
    EXPECT_LT(std::abs(s - o), 1e-14 * std::max(1.0, std::abs(s))) << lat.size();
    EXPECT_EQ(o, kernels::theta_sum_omp(lat, Z, w));
  }
}

TEST(Kernels, ThetaParallelFlag) {
  Rng rng(22);
  const CMat Z = random_siegel(3, rng);
  CVec z(3);
  z << cplx(0.1, 0.2), cplx(-0.3, 0.0), cplx(0.05, -0.1);
  ThetaOptions s, p;
  s.parallel = false;
  p.parallel = true;
  const auto ch = parse_characteristic("101,011");
  EXPECT_LT(std::abs(theta(ch, z, Z, 1e-14, s).value - theta(ch, z, Z, 1e-14, p).value), 1e-14);
}

TEST(Kernels, FirstViolationIsLexicographicallyFirst) {
  const auto subsets = k_subsets(12, 4);
  const kernels::SubsetPredicate ok = [](const std::vector<int>& s) { return s[1] + s[3] != 14 && s[0] != 5; };
  const auto a = kernels::first_violation_serial(subsets, ok), b = kernels::first_violation_omp(subsets, ok);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a, b);
  const kernels::SubsetPredicate all = [](const std::vector<int>&) { return true; };
  EXPECT_FALSE(kernels::first_violation_omp(subsets, all).has_value());
}

TEST(Kernels, PeriodsSerialMatchesOmp) {
  const auto c = new_curve({-1.0, 0.0, 1.5, 2.0, 4.0, 4.5, 7.0});
  PeriodOptions s, p;
  s.parallel = false;
  const auto a = period_matrix(c, build_cycles(c), 1e-12, s), b = period_matrix(c, build_cycles(c), 1e-12, p);
  EXPECT_EQ(a.raw, b.raw);
}

TEST(Kernels, GeneralPositionSerialMatchesOmp) {
  for (int g = 1; g <= 5; ++g) {
    const std::vector<GaussRational> l = [g] {
      std::vector<GaussRational> v;
      for (int i = 0; i <= 2 * g; ++i) v.push_back(GaussRational(i * i - 3));
      return v;
    }();
    const auto a = branch_arrangement(l);
    EXPECT_EQ(general_position(a, false).ok, general_position(a, true).ok);
    EXPECT_EQ(general_position(a, false).subsets_checked, general_position(a, true).subsets_checked);
  }
}
