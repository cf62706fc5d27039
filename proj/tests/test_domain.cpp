#include <gtest/gtest.h>

#include <cmath>

#include "cyk/combinatorics.hpp"
#include "cyk/curve.hpp"
#include "cyk/domain.hpp"
#include "cyk/error.hpp"
#include "cyk/sampling.hpp"

using namespace cyk;

namespace {

CMat blockdiag(const CMat& U, const CMat& V) {
  const auto g = U.rows();
  CMat M = CMat::Zero(2 * g, 2 * g);
  M.topLeftCorner(g, g) = U;
  M.bottomRightCorner(g, g) = V;
  return M;
}

}  // namespace

TEST(Domain, Contains) {
  CMat z(1, 1);
  z(0, 0) = 0.5;
  EXPECT_TRUE(contains(z, 0.0));
  for (int g = 1; g <= 3; ++g) EXPECT_FALSE(contains(CMat::Identity(g, g), 0.0));
  Rng rng(1);
  CMat m = random_domain_point(3, rng, 1.0);
  m *= 0.9 / Eigen::JacobiSVD<CMat>(m).singularValues()(0);
  EXPECT_TRUE(contains(m, 0.0));
  EXPECT_THROW(contains(CMat::Zero(2, 3), 0.0), Error);
}

TEST(Domain, SuCheck) {
  Rng rng(2);
  for (int g = 1; g <= 3; ++g) {
    EXPECT_TRUE(su_check(CMat::Identity(2 * g, 2 * g), 1e-12));
    const CMat U = random_unitary(g, rng);
    CMat V = random_unitary(g, rng);
    V *= std::pow(1.0 / (U.determinant() * V.determinant()), 1.0 / g);
    EXPECT_TRUE(su_check(blockdiag(U, V), 1e-10));
    const CMat H = signature_form(g);
    EXPECT_EQ(su_check(H, 1e-10), g % 2 == 0) << g;
  }
}

TEST(Domain, ActionLaws) {
  Rng rng(3);
  for (int s = 0; s < 60; ++s) {
    const int g = 1 + s % 3;
    const CMat Z = random_domain_point(g, rng, 0.9);
    EXPECT_LT(max_abs(CMat(act(CMat::Identity(2 * g, 2 * g), Z) - Z)), 1e-12);
    const CMat A = random_su(g, rng), B = random_su(g, rng);
    EXPECT_TRUE(contains(act(A, Z), 0.0));
    EXPECT_LT(max_abs(CMat(act(A * B, Z) - act(A, act(B, Z)))), 1e-10);
  }
}

TEST(Domain, StabilizerOfOrigin) {
  Rng rng(4);
  const CMat M = blockdiag(random_unitary(2, rng), random_unitary(2, rng));
  EXPECT_LT(max_abs(act(M, CMat::Zero(2, 2))), 1e-14);
}

TEST(Domain, WitnessClosedFormGenusOne) {
  CMat z(1, 1);
  z(0, 0) = 0.5;
  const CMat W = transitive_witness(z);
  EXPECT_NEAR(std::abs(act(W, CMat::Zero(1, 1))(0, 0) - 0.5), 0.0, 1e-12);
  EXPECT_TRUE(su_check(W, 1e-12));
  EXPECT_LT(max_abs(CMat(transitive_witness(CMat::Zero(2, 2)) - CMat::Identity(4, 4))), 1e-14);
}

TEST(Domain, WitnessRoundTrip) {
  Rng rng(5);
  for (int s = 0; s < 30; ++s) {
    const CMat Z = random_domain_point(1 + s % 3, rng, 0.95);
    EXPECT_LT(max_abs(CMat(act(transitive_witness(Z), CMat::Zero(Z.rows(), Z.rows())) - Z)), 1e-12);
  }
  EXPECT_THROW(transitive_witness(CMat::Identity(2, 2)), Error);
}

TEST(Domain, EmbedSp) {
  Rng rng(6);
  for (int g = 1; g <= 3; ++g) {
    const RMat J = realified_form(g);
    EXPECT_LT(max_abs(RMat(embed_sp(CMat::Identity(2 * g, 2 * g)) - RMat::Identity(4 * g, 4 * g))), 0.0 + 1e-16);
    const CMat K = blockdiag(random_unitary(g, rng), random_unitary(g, rng));
    const RMat S = embed_sp(K);
    EXPECT_LT(max_abs(RMat(S.transpose() * J * S - J)), 1e-12);
    EXPECT_LT(max_abs(RMat(S.transpose() * S - RMat::Identity(4 * g, 4 * g))), 1e-12);
    const CMat A = random_su(g, rng), B = random_su(g, rng);
    const RMat SA = embed_sp(A);
    EXPECT_LT(max_abs(RMat(SA.transpose() * J * SA - J)), 1e-10);
    EXPECT_LT(max_abs(RMat(embed_sp(A * B) - SA * embed_sp(B))), 1e-10);
  }
}

TEST(Domain, GraphSubspace) {
  Rng rng(7);
  const CMat Q = signature_form(2);
  const CMat E0 = graph_subspace(CMat::Zero(2, 2));
  EXPECT_LT(max_abs(CMat(E0.adjoint() * Q * E0 - CMat::Identity(2, 2))), 1e-15);
  const CMat Z = random_domain_point(2, rng, 0.8);
  const CMat E = graph_subspace(Z), F = graph_complement(Z);
  EXPECT_GT(min_eig_hermitian(E.adjoint() * Q * E), 0.0);
  EXPECT_LT(-min_eig_hermitian(-F.adjoint() * Q * F), 0.0);
  EXPECT_LT(max_abs(CMat(E.adjoint() * Q * F)), 1e-14);
  CMat nearly = CMat::Identity(2, 2) * 0.999999;
  EXPECT_LT(min_eig_hermitian(graph_subspace(nearly).adjoint() * Q * graph_subspace(nearly)), 1e-5);
}

TEST(Hodge, WeightOneDimensions) {
  Rng rng(8);
  for (int g = 1; g <= 3; ++g) {
    const auto f = weight1_hodge(random_domain_point(g, rng, 0.8));
    EXPECT_EQ(f.piece_dim(1), 2 * g);
    EXPECT_EQ(f.dim(), 4 * g);
    const auto z = weight1_hodge(CMat::Zero(g, g));
    EXPECT_TRUE(hodge_positivity_check(z).ok);
  }
}

TEST(Hodge, PositivityOnRandomPoints) {
  Rng rng(9);
  for (int s = 0; s < 100; ++s)
    EXPECT_TRUE(hodge_positivity_check(weight1_hodge(random_domain_point(1 + s % 3, rng, 0.95))).ok);
}

TEST(Hodge, SwappedPiecesFail) {
  auto f = weight1_standard(2);
  EXPECT_TRUE(hodge_positivity_check(f).ok);
  std::swap(f.pieces[0].basis, f.pieces[1].basis);
  EXPECT_FALSE(hodge_positivity_check(f).ok);
}

TEST(Hodge, FromPeriodsOfCurve) {
  const auto c = new_curve({0.0, 1.0, 4.0});
  const auto pm = period_matrix(c, build_cycles(c), 1e-12);
  EXPECT_TRUE(hodge_positivity_check(weight1_from_periods(pm.Z)).ok);
  const auto c2 = new_curve({0.0, 1.0, 2.0, 3.0, 4.0});
  EXPECT_TRUE(hodge_positivity_check(weight1_from_periods(period_matrix(c2, build_cycles(c2), 1e-12).Z)).ok);
}

TEST(Hodge, WedgePowerPositive) {
  for (int g = 1; g <= 3; ++g) {
    const auto w = wedge_power(weight1_standard(g), g);
    EXPECT_EQ(w.weight, g);
    EXPECT_TRUE(hodge_positivity_check(w).ok) << g;
  }
  Rng rng(10);
  const auto c = new_curve(random_real_branch_points(2, rng));
  const auto w = wedge_power(weight1_from_periods(period_matrix(c, build_cycles(c), 1e-12).Z), 2);
  EXPECT_TRUE(hodge_positivity_check(w).ok);
}

TEST(Hodge, WedgeDimsMatchEnumeration) {
  for (int g = 1; g <= 6; ++g) {
    // Count g-subsets of 2g slots by how many come from the second half.
    std::vector<std::uint64_t> count(g + 1, 0);
    for (const auto& s : k_subsets(2 * g, g)) {
      int q = 0;
      for (int x : s) q += x >= g;
      ++count[q];
    }
    EXPECT_EQ(wedge_hodge_dims(g), count);
    std::uint64_t total = 0;
    for (auto v : count) total += v;
    EXPECT_EQ(total, binomial(2 * g, g));
  }
  EXPECT_EQ(wedge_hodge_dims(3), (std::vector<std::uint64_t>{1, 9, 9, 1}));
  EXPECT_EQ(wedge_hodge_dims(4), (std::vector<std::uint64_t>{1, 16, 36, 16, 1}));
}

TEST(Hodge, VhsDimensions) {
  for (int g = 1; g <= 4; ++g) {
    const long long n = 2 * g;
    // dim Sp(2n, R) - dim U(n)
    EXPECT_EQ(vhs_moduli_dimension(1, {n, n}), n * (2 * n + 1) - n * n);
    EXPECT_EQ(vhs_moduli_dimension(1, {n, n}), 2LL * g * (2 * g + 1));
  }
  EXPECT_EQ(vhs_moduli_dimension(1, {1, 1}), 2);
  // Weight 3, (1, g^2, g^2, 1): r = g^2 + 1, K1 = U(1) x U(g^2).
  for (long long g = 1; g <= 3; ++g) {
    const long long r = g * g + 1;
    EXPECT_EQ(vhs_moduli_dimension(3, {1, g * g, g * g, 1}), r * (2 * r + 1) - 1 - g * g * g * g);
  }
  // K3 type: SO(2, 20) / (U(1) x SO(20)) has real dimension 40.
  EXPECT_EQ(vhs_moduli_dimension(2, {1, 20, 1}), 40);
  EXPECT_THROW(vhs_moduli_dimension(4, {1, 1, 1, 1, 1}), Error);
  EXPECT_THROW(vhs_moduli_dimension(1, {1, 2}), Error);
}
