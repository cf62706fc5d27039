#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cyk/combinatorics.hpp"
#include "cyk/cover.hpp"
#include "cyk/domain.hpp"
#include "cyk/error.hpp"

using namespace cyk;

namespace {

std::vector<GaussRational> ints(int g) {
  std::vector<GaussRational> l;
  for (int i = 0; i <= 2 * g; ++i) l.push_back(GaussRational(i));
  return l;
}

}  // namespace

TEST(Arrangement, Covectors) {
  const auto a = branch_arrangement(ints(1));
  ASSERT_EQ(a.hyperplanes.size(), 4u);
  EXPECT_EQ(a.hyperplanes[2], (Covector{GaussRational(1), GaussRational(2)}));
  EXPECT_EQ(a.hyperplanes[3], (Covector{GaussRational(0), GaussRational(1)}));
  const auto b = branch_arrangement(ints(2));
  ASSERT_EQ(b.hyperplanes.size(), 6u);
  EXPECT_EQ(b.hyperplanes[4], (Covector{GaussRational(1), GaussRational(4), GaussRational(16)}));
  EXPECT_EQ(b.hyperplanes[5], (Covector{GaussRational(0), GaussRational(0), GaussRational(1)}));
}

TEST(Arrangement, InputErrors) {
  EXPECT_THROW(branch_arrangement({GaussRational(0), GaussRational(1)}), Error);
  EXPECT_THROW(branch_arrangement({GaussRational(0), GaussRational(1), GaussRational(1)}), Error);
}

TEST(Arrangement, GeneralPositionForDistinctPoints) {
  for (int g = 1; g <= 5; ++g) EXPECT_TRUE(general_position(branch_arrangement(ints(g))).ok);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> n(-40, 40), d(1, 11);
  for (int g = 1; g <= 4; ++g) {
    std::vector<GaussRational> l;
    while (static_cast<int>(l.size()) < 2 * g + 1) {
      GaussRational x{Rational(n(rng), d(rng)), Rational(n(rng), d(rng))};
      if (std::find(l.begin(), l.end(), x) == l.end()) l.push_back(x);
    }
    EXPECT_TRUE(general_position(branch_arrangement(l)).ok);
  }
}

TEST(Arrangement, RandomHyperplanes) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> n(-1000, 1000);
  for (int g = 1; g <= 4; ++g) {
    Arrangement a;
    a.g = g;
    for (int k = 0; k < 2 * g + 2; ++k) {
      Covector h;
      for (int j = 0; j <= g; ++j) h.push_back(GaussRational(n(rng)));
      a.hyperplanes.push_back(h);
    }
    EXPECT_TRUE(general_position(a).ok);
  }
}

TEST(Arrangement, RepeatedHyperplaneDetected) {
  auto a = branch_arrangement(ints(2));
  a.hyperplanes[4] = a.hyperplanes[1];
  const auto r = general_position(a);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.violating, (std::vector<int>{1, 4}));
  EXPECT_EQ(general_position(a, false).violating, r.violating);
  EXPECT_THROW(pairwise_intersections(a), Error);
}

TEST(Arrangement, ExactRank) {
  EXPECT_EQ(exact_rank({{GaussRational(1), GaussRational(2)}, {GaussRational(2), GaussRational(4)}}), 1);
  EXPECT_EQ(exact_rank({{GaussRational(1), GaussRational(2)}, {GaussRational(2), GaussRational(5)}}), 2);
  const GaussRational i(Rational(0), Rational(1));
  EXPECT_EQ(exact_rank({{GaussRational(1), i}, {i, GaussRational(-1)}}), 1);
}

TEST(Arrangement, PairwiseFlats) {
  EXPECT_EQ(pairwise_intersections(branch_arrangement(ints(2))).size(), 15u);
  const auto f3 = pairwise_intersections(branch_arrangement(ints(3)));
  EXPECT_EQ(f3.size(), 28u);
  EXPECT_EQ(f3[0].projective_dim, 1);
  const auto f1 = pairwise_intersections(branch_arrangement(ints(1)));
  EXPECT_EQ(f1.size(), 6u);
  EXPECT_TRUE(f1[0].vacuous);
  EXPECT_EQ(f1[0].projective_dim, -1);
}

TEST(Group, Orders) {
  for (int g = 1; g <= 6; ++g) {
    const auto N = group_N(g);
    EXPECT_EQ(N.order, (std::uint64_t{1} << (g - 1)) * factorial(g));
    EXPECT_EQ(N.index, 2u);
    EXPECT_TRUE(N.closed);
    EXPECT_TRUE(N.is_sign_kernel);
    EXPECT_EQ(N.has_table, g <= 5);
  }
  EXPECT_EQ(group_N(2).order, 4u);
  EXPECT_EQ(group_N(3).order, 24u);
  EXPECT_THROW(group_N(7), Error);
}

TEST(Group, TableIsAGroupTable) {
  const auto N = group_N(3);
  const std::size_t n = N.order;
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::uint32_t> row, col;
    for (std::size_t j = 0; j < n; ++j) {
      row.insert(N.table[i * n + j]);
      col.insert(N.table[j * n + i]);
    }
    EXPECT_EQ(row.size(), n);
    EXPECT_EQ(col.size(), n);
  }
  for (std::size_t a = 0; a < n; a += 3)
    for (std::size_t b = 0; b < n; b += 5)
      for (std::size_t c = 0; c < n; c += 7)
        EXPECT_EQ(N.table[N.table[a * n + b] * n + c], N.table[a * n + N.table[b * n + c]]);
}

TEST(Group, ProductRule) {
  // (s, pi)(s', pi') = (s + pi.s', pi pi')
  const CoverGroupElement a{{1, 0, 0}, {1, 2, 0}}, b{{0, 1, 1}, {0, 2, 1}};
  const auto c = compose(a, b);
  EXPECT_EQ(c.perm, (std::vector<int>{1, 0, 2}));
  // pi.s' moves entry k of s' to slot pi(k).
  std::vector<int> moved(3);
  for (int k = 0; k < 3; ++k) moved[a.perm[k]] = b.signs[k];
  for (int k = 0; k < 3; ++k) EXPECT_EQ(c.signs[k], (a.signs[k] + moved[k]) % 2);
  EXPECT_EQ(compose(identity_element(3), a), a);
}

TEST(Ramification, Report) {
  for (int g = 1; g <= 3; ++g) {
    const auto r = ramification_analysis(g);
    EXPECT_EQ(r.mismatches, 0u);
    EXPECT_EQ(r.ramification_components, static_cast<std::size_t>(2 * g + 2));
    EXPECT_TRUE(r.generic_trivial);
    EXPECT_TRUE(r.weierstrass_slot_fixed);
    EXPECT_TRUE(r.points_single_orbit);
    EXPECT_EQ(r.infeasible_tuples, 0u);
    EXPECT_TRUE(r.ok);
  }
  EXPECT_THROW(ramification_analysis(5), Error);
}

TEST(Invariance, SymbolAction) {
  // Two sign flips on the slots carrying the symbol: eigenvalue +1.
  const CoverGroupElement both{{1, 1}, {0, 1}};
  EXPECT_EQ(apply_element(both, 2, 0, 0, 1, 1).sign, 1);
  const CoverGroupElement one{{1, 0}, {0, 1}};
  EXPECT_EQ(apply_element(one, 2, 0, 0, 1, 1).sign, -1);
  EXPECT_EQ(apply_element(one, 2, 0, 0, 0, 1).sign, 1);
  const CoverGroupElement swap{{0, 0}, {1, 0}};
  EXPECT_EQ(apply_element(swap, 2, 0, 1, 0, 0).index, ((1 * 2 + 1) * 2 + 1) * 2 + 0);
}

TEST(Invariance, AllClassesFixed) {
  for (int g = 1; g <= 4; ++g) {
    const auto r = invariance_check(g);
    EXPECT_EQ(r.classes, g * g);
    EXPECT_TRUE(r.invariant_under_N);
    EXPECT_TRUE(r.ok);
  }
}

TEST(HodgeNumbers, Diamond) {
  EXPECT_EQ(hodge_numbers(2).middle, (std::vector<std::uint64_t>{1, 4, 1}));
  EXPECT_EQ(hodge_numbers(2).b2, 16u);
  EXPECT_TRUE(hodge_numbers(2).b2_flagged);
  const auto d3 = hodge_numbers(3);
  EXPECT_EQ(d3.middle, (std::vector<std::uint64_t>{1, 9, 9, 1}));
  EXPECT_EQ(d3.b2, 29u);
  EXPECT_FALSE(d3.b2_flagged);
  EXPECT_EQ(hodge_numbers(4).middle, (std::vector<std::uint64_t>{1, 16, 36, 16, 1}));
  EXPECT_EQ(hodge_numbers(4).b2, 46u);
  for (int g = 2; g <= 6; ++g) {
    const auto d = hodge_numbers(g);
    EXPECT_TRUE(d.cross_checked);
    EXPECT_EQ(d.middle, wedge_hodge_dims(g));
    std::uint64_t s = 0;
    for (auto v : d.middle) s += v;
    EXPECT_EQ(s, binomial(2 * g, g));
    EXPECT_EQ(d.middle[1], static_cast<std::uint64_t>(g * g));
  }
  EXPECT_THROW(hodge_numbers(1), Error);
}
