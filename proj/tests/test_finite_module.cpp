#include <gtest/gtest.h>

#include <random>

#include "gammalat/finite_module.hpp"
#include "oracles.hpp"

using namespace gammalat;

namespace {

// Presents x on a random basis: relations U R, action U A U^{-1}.
FiniteGammaModule scramble(const FiniteGammaModule& x, std::mt19937_64& rng) {
  IntMatrix inv;
  const IntMatrix u = oracle::random_unimodular(x.generators(), rng, &inv);
  return FiniteGammaModule(x.params(), u * x.relations(), u * x.action() * inv);
}

std::vector<StandardLabel> oracle_labels(const FiniteGammaModule& x) {
  for (const auto& labels : oracle::label_multisets(x.params().p, x.params().n, x.log_order()))
    if (oracle::standard_sum_surjects(x, labels)) return labels;
  return {};
}

}  // namespace

TEST(SnfInvariants, Examples) {
  const GroupParams g = GroupParams::make(3, 2);
  EXPECT_EQ(snf_invariants(standard_module(g, 2, 1)), (IntVector{9, 9, 9}));
  EXPECT_TRUE(snf_invariants(FiniteGammaModule::zero(g)).empty());
  const FiniteGammaModule s = module_direct_sum(standard_module(g, 2, 2), standard_module(g, 1, 1));
  EXPECT_EQ(snf_invariants(s), (IntVector{3, 3, 3, 9}));
}

TEST(FiniteModule, RejectsNonEquivariantAction) {
  const GroupParams g = GroupParams::make(3, 1);
  // sigma = 2 on Z/3 has order 2, not dividing 3.
  EXPECT_THROW(FiniteGammaModule::diagonal(g, {1}, IntMatrix{{2}}), InvalidInput);
  // action not preserving the relations.
  EXPECT_THROW(FiniteGammaModule(g, IntMatrix{{3, 0}, {0, 9}}, IntMatrix{{1, 0}, {1, 1}}), InvalidInput);
}

TEST(Canonicalize, CoordinateChangesAreInverse) {
  const GroupParams g = GroupParams::make(3, 2);
  std::mt19937_64 rng(21);
  const FiniteGammaModule x = module_direct_sum(standard_module(g, 2, 1), standard_module(g, 1, 2));
  const FiniteGammaModule y = scramble(x, rng);
  const CanonicalForm c = canonicalize(y);
  EXPECT_TRUE(c.module.is_canonical());
  EXPECT_EQ(snf_invariants(c.module), snf_invariants(x));
  const IntMatrix round = reduce_coordinates(c.module, c.to_canonical * c.from_canonical);
  EXPECT_EQ(round, reduce_coordinates(c.module, IntMatrix::identity(c.module.generators())));
}

TEST(Recognition, ConstructionRoundTrip) {
  const GroupParams g = GroupParams::make(3, 2);
  const FiniteGammaModule x = module_direct_sum(standard_module(g, 2, 1), standard_module(g, 1, 2));
  const Recognition r = recognize_standard_sum(x);
  ASSERT_TRUE(std::holds_alternative<StandardSum>(r));
  const StandardSum& s = std::get<StandardSum>(r);
  EXPECT_EQ(s.labels, (std::vector<StandardLabel>{{1, 2}, {2, 1}}));
  EXPECT_TRUE(is_bijective(s.to_module));
  EXPECT_TRUE(maps_equal(compose(s.from_module, s.to_module), identity_map(s.standard)));
  EXPECT_TRUE(maps_equal(compose(s.to_module, s.from_module), identity_map(x)));
}

TEST(Recognition, ZeroModule) {
  const auto l = standard_labels(FiniteGammaModule::zero(GroupParams::make(3, 1)));
  ASSERT_TRUE(l.has_value());
  EXPECT_TRUE(l->empty());
}

TEST(Recognition, ScrambledPresentationsAgreeWithBruteForce) {
  std::mt19937_64 rng(2024);
  for (int seed = 0; seed < 20; ++seed) {
    const int n = 1 + seed % 2;
    const GroupParams g = GroupParams::make(3, n);
    // random standard sum of log order at most 3
    std::vector<StandardLabel> labels;
    int size = 0;
    for (int tries = 0; tries < 6; ++tries) {
      const StandardLabel l{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % (n + 1))};
      const int s = l.a * static_cast<int>(g.index(l.j));
      if (size + s <= 3) {
        labels.push_back(l);
        size += s;
      }
    }
    std::sort(labels.begin(), labels.end());
    const FiniteGammaModule x = canonicalize(scramble(standard_sum_module(g, labels), rng)).module;
    const auto got = standard_labels(x);
    ASSERT_TRUE(got.has_value()) << seed;
    EXPECT_EQ(*got, labels) << seed;
    auto expected = oracle_labels(x);
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(*got, expected) << seed;
  }
}

TEST(Recognition, NonStandardModule) {
  // Z/9 with sigma acting by 4: the action is nontrivial but no standard
  // module of order 9 is cyclic as a group with such an action.
  const GroupParams g = GroupParams::make(3, 1);
  const FiniteGammaModule x = FiniteGammaModule::diagonal(g, {2}, IntMatrix{{4}});
  EXPECT_TRUE(std::holds_alternative<NotStandard>(recognize_standard_sum(x)));
  EXPECT_FALSE(standard_labels(x).has_value());
  EXPECT_TRUE(oracle_labels(x).empty());
}

TEST(QuotientGrid, StandardModuleClosedForm) {
  const GroupParams g = GroupParams::make(3, 3);
  for (int a = 1; a <= 2; ++a)
    for (int j = 0; j <= 3; ++j) {
      const FiniteGammaModule x = standard_module(g, a, j);
      const auto grid = quotient_grid(x, 3);
      for (int a2 = 1; a2 <= 3; ++a2)
        for (int j2 = 0; j2 <= 3; ++j2)
          EXPECT_EQ(grid[a2 - 1][j2], std::min(a, a2) * oracle::ipow(3, 3 - std::max(j, j2)));
    }
}

TEST(Maps, WellDefinednessAndEquivariance) {
  const GroupParams g = GroupParams::make(3, 1);
  const FiniteGammaModule z9 = standard_module(g, 2, 1);
  const FiniteGammaModule z3 = standard_module(g, 1, 1);
  EXPECT_NO_THROW(make_map(z9, z3, IntMatrix{{1}}));
  // Z/3 -> Z/9 by 1 is not well defined, by 3 it is.
  EXPECT_THROW(make_map(z3, z9, IntMatrix{{1}}), InvariantFailure);
  EXPECT_NO_THROW(make_map(z3, z9, IntMatrix{{3}}));
  const FiniteGammaModule reg = standard_module(g, 1, 0);
  // e -> sum of cosets is equivariant into the trivial module only via augmentation.
  EXPECT_NO_THROW(make_map(reg, z3, IntMatrix{{1, 1, 1}}));
  EXPECT_THROW(make_map(z3, reg, IntMatrix{{1}, {0}, {0}}), InvariantFailure);
  const GammaMap norm = make_map(z3, reg, IntMatrix{{1}, {1}, {1}});
  EXPECT_EQ(image_log_order(norm), 1);
  EXPECT_EQ(cokernel_type(norm), (std::vector<int>{1, 1}));
  EXPECT_FALSE(is_bijective(norm));
  EXPECT_TRUE(is_zero_map(scalar_map(z3, 3)));
  EXPECT_TRUE(maps_equal(group_ring_action(reg, norm_element(g, 1)), compose(norm, make_map(reg, z3, IntMatrix{{1, 1, 1}}))));
}

TEST(FixedTorsion, Examples) {
  const GroupParams g = GroupParams::make(3, 2);
  const FiniteGammaModule x = standard_module(g, 2, 0);  // (Z/9)[Gamma], rank 9
  EXPECT_EQ(fixed_torsion_log_order(x, 1, 0), 9);
  EXPECT_EQ(fixed_torsion_log_order(x, 2, 2), 2);  // norm line
  EXPECT_EQ(fixed_torsion_log_order(x, 1, 1), 3);
  EXPECT_EQ(quotient_log_order(x, 1, 2), 1);
  EXPECT_EQ(quotient_log_order(x, 2, 1), 6);
}
