#include <gtest/gtest.h>

#include "gammalat/cohomology.hpp"
#include "gammalat/diagram.hpp"

using namespace gammalat;

namespace {

YakovlevDiagram delta(const GroupParams& g, int a, int b) { return yakovlev_diagram(mab_lattice(g, a, b)); }

YakovlevDiagram sum_of(const std::vector<YakovlevDiagram>& ds, const GroupParams& g) {
  YakovlevDiagram out = zero_diagram(g);
  for (const auto& d : ds) out = diagram_direct_sum(out, d);
  return out;
}

}  // namespace

TEST(ValidateDiagram, LibraryAndBrokenDiagrams) {
  for (int n = 1; n <= 3; ++n) {
    const GroupParams g = GroupParams::make(3, n);
    EXPECT_TRUE(validate_diagram(zero_diagram(g)));
    for (int a = 1; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) EXPECT_TRUE(validate_diagram(delta(g, a, b))) << diagram_defect(delta(g, a, b)).value_or("");
  }
  // M_{2,0}: up is x p from Z/3 to Z/9, so zeroing it breaks up o down = p.
  YakovlevDiagram d = delta(GroupParams::make(3, 2), 2, 0);
  d.ups[0] = zero_map(d.ups[0].source, d.ups[0].target);
  EXPECT_FALSE(validate_diagram(d));
  EXPECT_TRUE(diagram_defect(d).has_value());
}

TEST(DirectSum, ZeroIsNeutralAndValidityIsAdditive) {
  const GroupParams g = GroupParams::make(3, 2);
  const YakovlevDiagram d = delta(g, 1, 0);
  const YakovlevDiagram s = diagram_direct_sum(d, zero_diagram(g));
  EXPECT_EQ(diagram_invariants(s), diagram_invariants(d));
  EXPECT_EQ(diagram_isomorphic(s, d), Decision::Yes);
  EXPECT_TRUE(validate_diagram(diagram_direct_sum(d, delta(g, 1, 1))));
  YakovlevDiagram broken = delta(g, 2, 0);
  broken.ups[0] = zero_map(broken.ups[0].source, broken.ups[0].target);
  EXPECT_FALSE(validate_diagram(diagram_direct_sum(d, broken)));
  EXPECT_THROW(diagram_direct_sum(d, zero_diagram(GroupParams::make(3, 1))), InvalidInput);
}

TEST(DirectSum, CohomologyIsAdditive) {
  const GroupParams g = GroupParams::make(3, 2);
  const GammaLattice m = mab_lattice(g, 1, 0), n = mab_lattice(g, 1, 1);
  EXPECT_EQ(diagram_isomorphic(yakovlev_diagram(direct_sum(m, n)), diagram_direct_sum(yakovlev_diagram(m), yakovlev_diagram(n))),
            Decision::Yes);
}

TEST(Isomorphism, Examples) {
  const GroupParams g = GroupParams::make(3, 2);
  const YakovlevDiagram d10 = delta(g, 1, 0), d11 = delta(g, 1, 1);
  EXPECT_EQ(diagram_isomorphic(d10, d10), Decision::Yes);
  EXPECT_EQ(diagram_isomorphic(d10, d11), Decision::No);
  EXPECT_EQ(diagram_isomorphic(d11, d10), Decision::No);
  EXPECT_EQ(d10.levels[0].log_order(), 3);
  EXPECT_EQ(d11.levels[0].log_order(), 1);
  for (int i = 0; i <= 2; ++i)
    EXPECT_EQ(diagram_isomorphic(d10, yakovlev_diagram(direct_sum(mab_lattice(g, 1, 0), permutation_lattice(g, i)))),
              Decision::Yes);
  EXPECT_EQ(to_string(Decision::Unknown), "unknown");
}

TEST(Isomorphism, AgreesWithClosedFormDiagrams) {
  for (int n = 1; n <= 3; ++n) {
    const GroupParams g = GroupParams::make(3, n);
    for (int a = 1; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        const YakovlevDiagram l = lemma_diagram(g, a, b);
        EXPECT_TRUE(validate_diagram(l));
        EXPECT_EQ(diagram_isomorphic(delta(g, a, b), l), Decision::Yes) << a << "," << b;
      }
  }
}

TEST(Certificate, Examples) {
  const GroupParams g = GroupParams::make(3, 2);
  EXPECT_TRUE(indecomposability_certificate(zero_diagram(g)));
  EXPECT_TRUE(indecomposability_certificate(delta(g, 1, 0)));
  EXPECT_TRUE(indecomposability_certificate(delta(g, 1, 1)));
  EXPECT_TRUE(indecomposability_certificate(delta(g, 2, 0)));
  EXPECT_FALSE(indecomposability_certificate(diagram_direct_sum(delta(g, 1, 0), delta(g, 1, 0))));
}

TEST(Morphism, IdentityIsAMorphism) {
  const YakovlevDiagram d = delta(GroupParams::make(3, 2), 1, 0);
  DiagramMorphism id;
  for (const auto& l : d.levels) id.components.push_back(identity_map(l));
  EXPECT_TRUE(is_diagram_morphism(d, d, id));
  DiagramMorphism bad = id;
  bad.components[0] = zero_map(d.levels[0], d.levels[0]);
  EXPECT_FALSE(is_diagram_morphism(d, d, bad));
}

TEST(LibraryLabels, ExtractionOrder) {
  const auto labels = library_labels(GroupParams::make(3, 2));
  EXPECT_EQ(labels.size(), 3u);
  EXPECT_EQ(labels.front(), (MabLabel{1, 0}));  // level orders 27 + 9
  EXPECT_EQ(library_labels(GroupParams::make(3, 1)), (std::vector<MabLabel>{{1, 0}}));
}

TEST(Subtraction, Examples) {
  const GroupParams g = GroupParams::make(3, 2);
  const YakovlevDiagram d11 = delta(g, 1, 1);
  const SubtractionResult r = subtract_library(sum_of({d11, d11, d11}, g));
  EXPECT_EQ(r.extracted, (std::vector<MabLabel>{{1, 1}, {1, 1}, {1, 1}}));
  ASSERT_TRUE(r.remainder.has_value());
  EXPECT_TRUE(is_zero_diagram(*r.remainder));

  const SubtractionResult mixed = subtract_library(yakovlev_diagram(direct_sum(mab_lattice(g, 1, 0), mab_lattice(g, 1, 1))));
  auto labels = mixed.extracted;
  std::sort(labels.begin(), labels.end());
  EXPECT_EQ(labels, (std::vector<MabLabel>{{1, 0}, {1, 1}}));
  ASSERT_TRUE(mixed.remainder.has_value());
  EXPECT_EQ(diagram_isomorphic(*mixed.remainder, zero_diagram(g)), Decision::Yes);

  for (int i = 0; i <= 2; ++i) {
    const SubtractionResult p = subtract_library(yakovlev_diagram(permutation_lattice(g, i)));
    EXPECT_TRUE(p.extracted.empty());
    ASSERT_TRUE(p.remainder.has_value());
    EXPECT_TRUE(is_zero_diagram(*p.remainder));
  }
}
