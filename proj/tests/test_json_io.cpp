#include <gtest/gtest.h>

#include "gammalat/cohomology.hpp"
#include "json_io.hpp"
#include "selftest.hpp"

using namespace gammalat;
using io::Json;

TEST(DatumJson, RoundTrip) {
  for (const ExtensionDatum& d :
       {selftest::single_place_datum(2, 3, 1), selftest::many_places_datum(4, 12), selftest::unramified_family(5, 2, 1)[0]}) {
    const Json doc = io::datum_to_json(d);
    const ExtensionDatum back = io::datum_from_json(doc);
    EXPECT_EQ(back.params, d.params);
    EXPECT_EQ(back.r1, d.r1);
    EXPECT_EQ(back.r2, d.r2);
    EXPECT_EQ(back.ramified, d.ramified);
    EXPECT_EQ(back.s_counts, d.s_counts);
    EXPECT_EQ(io::canonical_dump(io::datum_to_json(back)), io::canonical_dump(doc));
  }
}

TEST(ReportJson, RoundTripIsByteIdentical) {
  for (const ExtensionDatum& d : {selftest::single_place_datum(1, 2, 0), selftest::many_places_datum(5, 12)}) {
    const DecompositionReport r = recover_structure(d);
    const std::string first = io::canonical_dump(io::report_to_json(d, r));
    const Json parsed = Json::parse(first);
    const DecompositionReport back = io::report_from_json(parsed);
    EXPECT_EQ(back.library_summands, r.library_summands);
    EXPECT_EQ(back.perm_multiplicities, r.perm_multiplicities);
    EXPECT_EQ(back.minkowski_count, r.minkowski_count);
    EXPECT_EQ(back.status, r.status);
    EXPECT_EQ(io::canonical_dump(io::report_to_json(io::datum_from_json(parsed.at("input")), back)), first);
  }
}

TEST(DatumJson, SchemaErrors) {
  const Json good = io::datum_to_json(selftest::single_place_datum(1, 1, 0));
  Json bad = good;
  bad["r1"] = "two";
  EXPECT_THROW(io::datum_from_json(bad), InvalidInput);
  bad = good;
  bad["extra"] = 1;
  EXPECT_THROW(io::datum_from_json(bad), InvalidInput);
  bad = good;
  bad.erase("p");
  EXPECT_THROW(io::datum_from_json(bad), InvalidInput);
  bad = good;
  bad["p"] = 4;
  EXPECT_THROW(io::datum_from_json(bad), InvalidInput);
  bad = good;
  bad["regime"] = "Elsewhere";
  EXPECT_THROW(io::datum_from_json(bad), InvalidInput);
  bad = good;
  bad["ramified"] = Json::array({Json{{"inertia_order", 3}}});
  EXPECT_THROW(io::datum_from_json(bad), InvalidInput);
  EXPECT_THROW(io::datum_from_json(Json::array()), InvalidInput);
}

TEST(DiagramJson, Shape) {
  const YakovlevDiagram d = yakovlev_diagram(mab_lattice(GroupParams::make(3, 2), 1, 1));
  const Json j = io::diagram_to_json(d);
  EXPECT_EQ(j.at("p"), 3);
  EXPECT_EQ(j.at("n"), 2);
  EXPECT_EQ(j.at("levels").size(), 2u);
  EXPECT_EQ(j.at("ups").size(), 1u);
  EXPECT_EQ(j.at("downs").size(), 1u);
}
