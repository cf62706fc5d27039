#include <gtest/gtest.h>

#include <cmath>

#include "cyk/curve.hpp"
#include "cyk/error.hpp"
#include "cyk/sampling.hpp"

using namespace cyk;

namespace {

// Complete elliptic integral by Landen/AGM in long double, kept separate from the library's copy.
long double agm_k(long double k) {
  long double a = 1.0L, b = std::sqrt(1.0L - k * k);
  for (int i = 0; i < 60; ++i) {
    const long double an = (a + b) / 2;
    b = std::sqrt(a * b);
    a = an;
  }
  return 3.14159265358979323846264338327950288L / (2 * a);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

PeriodMatrix periods(const HyperellipticCurve& c, double tol = 1e-12, PeriodOptions opt = {}) {
  return period_matrix(c, build_cycles(c), tol, opt);
}

}  // namespace

TEST(Curve, GenusFromBranchCount) {
  EXPECT_EQ(new_curve({0.0, 1.0, 2.0}).genus, 1);
  EXPECT_EQ(new_curve({0.0, 1.0, 2.0, 3.0, 4.0}).genus, 2);
}

TEST(Curve, InputErrors) {
  EXPECT_EQ(code_of([] { new_curve({0.0, 1.0, 1.0 + 1e-15}); }), ErrorCode::DuplicateBranchPoint);
  EXPECT_EQ(code_of([] { new_curve({0.0, 1.0}); }), ErrorCode::EvenCount);
  EXPECT_TRUE(is_input_error(ErrorCode::DuplicateBranchPoint));
}

TEST(Curve, HolomorphicBasis) {
  const auto b = holomorphic_basis(new_curve({0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0}));
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b[0].power, 0);
  EXPECT_EQ(b[2].power, 2);
}

TEST(Curve, BranchPointsSortedLexicographically) {
  const auto c = new_curve({4.0, 0.0, 1.0});
  EXPECT_EQ(c.branch_points[0], cplx(0.0));
  EXPECT_EQ(c.branch_points[2], cplx(4.0));
}

TEST(Curve, CyclePairingIsStandardSymplectic) {
  for (int g = 1; g <= 5; ++g) {
    std::vector<cplx> l;
    for (int i = 0; i <= 2 * g; ++i) l.push_back(double(i));
    const IMat P = intersection_matrix(build_cycles(new_curve(l)));
    IMat J = IMat::Zero(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
      J(i, g + i) = 1;
      J(g + i, i) = -1;
    }
    EXPECT_EQ(P, J) << "g=" << g;
  }
}

TEST(Curve, EllipticPeriodMatchesAgm) {
  const auto pm = periods(new_curve({0.0, 1.0, 4.0}));
  const long double k = 0.5L;
  const double oracle = static_cast<double>(agm_k(std::sqrt(1.0L - k * k)) / agm_k(k));
  EXPECT_NEAR(pm.Z(0, 0).real(), 0.0, 1e-10);
  EXPECT_NEAR(pm.Z(0, 0).imag() / oracle, 1.0, 1e-8);
}

TEST(Curve, ImaginaryPartPositiveG1) {
  EXPECT_GT(periods(new_curve({0.0, 1.0, 2.0})).Z(0, 0).imag(), 0.0);
}

TEST(Curve, ComplexBranchPointsGenusOne) {
  const auto pm = periods(new_curve({cplx(0, 0), cplx(1, 1), cplx(2, -0.5)}));
  EXPECT_GT(pm.Z(0, 0).imag(), 0.0);
}

TEST(Curve, ComplexBranchPointsRejectedAboveGenusOne) {
  const auto c = new_curve({cplx(0, 0), cplx(1, 1), cplx(2, 0), cplx(3, 0), cplx(4, 0)});
  EXPECT_EQ(code_of([&] { periods(c); }), ErrorCode::UnsupportedComplexBranchPoints);
}

TEST(Curve, GenusTwoSymmetric) {
  const auto pm = periods(new_curve({0.0, 1.0, 2.0, 3.0, 4.0}));
  EXPECT_LT(max_abs(CMat(pm.Z - pm.Z.transpose())), 1e-8);
  EXPECT_GT(min_eig_symmetric(pm.Z.imag()), 0.0);
}

TEST(Curve, RiemannRelationsRandom) {
  Rng rng(11);
  for (int s = 0; s < 12; ++s) {
    const int g = 1 + s % 3;
    const auto pm = periods(new_curve(random_real_branch_points(g, rng)), 1e-10);
    EXPECT_LT(max_abs(CMat(pm.Z - pm.Z.transpose())), 1e-6);
    EXPECT_GT(min_eig_symmetric(pm.Z.imag()), 0.0);
  }
}

TEST(Curve, NormalizeIdentityCase) {
  CMat Z0(2, 2);
  Z0 << cplx(0.1, 1.0), cplx(0.2, 0.3), cplx(0.2, 0.3), cplx(-0.4, 1.5);
  CMat raw(2, 4);
  raw << CMat::Identity(2, 2), Z0;
  EXPECT_LT(max_abs(CMat(normalize_periods(raw).Z - Z0)), 1e-14);
}

TEST(Curve, NormalizeSingularABlock) {
  CMat raw(2, 4);
  raw << 1, 1, 0.5, 0.1, 2, 2, 0.3, 0.2;
  EXPECT_EQ(code_of([&] { normalize_periods(raw); }), ErrorCode::SingularABlock);
  EXPECT_EQ(code_of([&] { normalize_periods(CMat::Identity(2, 3)); }), ErrorCode::DimensionMismatch);
}

TEST(Curve, NodeCountDoesNotMatter) {
  const auto c = new_curve({-1.0, 0.5, 2.0, 3.5, 5.0});
  PeriodOptions a, b;
  a.nodes = 24;
  b.nodes = 40;
  EXPECT_LT(max_abs(CMat(periods(c, 1e-12, a).Z - periods(c, 1e-12, b).Z)), 1e-10);
}

TEST(Abel, EmptyDivisorIsZero) {
  const auto c = new_curve({0.0, 1.0, 4.0});
  const auto jp = abel_jacobi(c, periods(c), {});
  EXPECT_LT(jp.vector.norm(), 1e-15);
}

TEST(Abel, BranchDivisorsVanish) {
  for (const auto& l : std::vector<std::vector<cplx>>{{0.0, 1.0, 4.0}, {-2.0, -0.5, 1.0, 2.5, 3.0}}) {
    const auto c = new_curve(l);
    const auto pm = periods(c);
    for (const cplx& b : c.branch_points) {
      const CurvePoint p{b, 1, false};
      EXPECT_LT(lattice_residual(abel_jacobi(c, pm, {p}).vector * 2.0, pm.Z), 1e-7);
      EXPECT_LT(lattice_residual(abel_jacobi(c, pm, {p, p}).vector, pm.Z), 1e-7);
    }
  }
}

TEST(Abel, Additive) {
  const auto c = new_curve({0.0, 1.0, 2.0, 3.0, 4.0});
  const auto pm = periods(c);
  const CurvePoint p{cplx(0.5, 0.7), 1, false}, q{cplx(-1.0, 0.3), -1, false};
  const CVec both = abel_jacobi(c, pm, {p, q}).vector;
  const CVec sum = abel_jacobi(c, pm, {p}).vector + abel_jacobi(c, pm, {q}).vector;
  EXPECT_LT(lattice_residual(both - sum, pm.Z), 2e-10);
}

TEST(Abel, HyperellipticInvolutionCancels) {
  const auto c = new_curve({0.0, 1.0, 2.0, 3.0, 4.0});
  const auto pm = periods(c);
  const CurvePoint p{cplx(1.3, 0.4), 1, false}, ip{cplx(1.3, 0.4), -1, false};
  EXPECT_LT(lattice_residual(abel_jacobi(c, pm, {p, ip}).vector, pm.Z), 1e-9);
}

TEST(Abel, ReducedCoordinatesInUnitCube) {
  const auto c = new_curve({0.0, 1.0, 2.0, 3.0, 4.0});
  const auto pm = periods(c);
  const auto jp = abel_jacobi(c, pm, {{cplx(2.2, 1.1), 1, false}});
  const RVec x = lattice_coordinates(jp.reduced, pm.Z);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    EXPECT_GE(x(i), -1e-12);
    EXPECT_LT(x(i), 1.0 + 1e-12);
  }
}

TEST(Abel, PointFromXyReadsSheet) {
  const auto c = new_curve({0.0, 1.0, 4.0});
  const cplx z(2.0, 1.0);
  const cplx y = canonical_y(c, z);
  EXPECT_EQ(point_from_xy(c, z, y, 1e-10).sheet, 1);
  EXPECT_EQ(point_from_xy(c, z, -y, 1e-10).sheet, -1);
  EXPECT_THROW(point_from_xy(c, z, 2.0 * y, 1e-10), Error);
}
