#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schur/json_io.hpp"
#include "test_util.hpp"

using namespace schur;
using nlohmann::json;

TEST_CASE("group documents round-trip") {
  Group g = build_frobenius(5, 4);
  json doc = group_to_json(g);
  Group back = group_from_json(doc);
  REQUIRE(back.order() == g.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) CHECK(back.mul(a, b) == g.mul(a, b));
  CHECK(back.family() == g.family());
}

TEST_CASE("identity is relabeled to element 0") {
  // Z3 with the identity parked at index 2.
  json doc{{"order", 3}, {"table", {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}}};
  Group g = group_from_json(doc);
  CHECK(g.mul(0, 0) == 0);
  CHECK(g.element_order(1) == 3);
}

TEST_CASE("tables without identity are rejected") {
  json doc{{"table", {{1, 0}, {0, 1}}}};
  // rows are permutations but no two-sided identity exists at any index
  CHECK_THROWS_AS(group_from_json(json{{"table", {{1, 1}, {0, 0}}}}), std::invalid_argument);
}

TEST_CASE("sring documents") {
  Group s3 = build_symmetric(3);
  SRing ca = SRing::class_algebra(s3);
  json doc = sring_to_json(ca, true);
  CHECK(doc["rank"] == 3);
  CHECK(doc["central"] == true);
  CHECK(doc["basic_sets"].size() == 3);
  CHECK(doc.contains("group"));

  auto parts = partition_from_json(doc);
  SRing back = SRing::from_partition(s3, parts);
  CHECK(back == ca);

  // bare-array form
  auto parts2 = partition_from_json(json::parse("[[0],[3,4],[1,2,5]]"));
  CHECK(SRing::from_partition(s3, parts2) == ca);
}

TEST_CASE("ring elements serialize sparsely with decimal strings") {
  Group z5 = build_cyclic(5);
  GroupRingElement xi = ring_pow(set_sum(z5, ElementSet({1, 2, 3, 4})), 13);
  json doc = ring_element_to_json(xi);
  CHECK(!doc["coeffs"].contains("0") == (xi.coeff(0) == 0));
  GroupRingElement back = ring_element_from_json(z5, doc);
  CHECK(back == xi);
  // coefficients overflow 64 bits at this size; spot-check one digit string
  CHECK(doc["coeffs"].begin().value().get<std::string>().size() > 7);
}

TEST_CASE("diagnosis reports embed config and schema") {
  Diagnosis d;
  d.check = "demo";
  d.subject = "S3";
  d.verdict = Verdict::Confirmed;
  RunConfig cfg;
  json doc = diagnosis_to_json(d, cfg, 17);
  CHECK(doc["verdict"] == "confirmed");
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["config"]["seed"] == 42);
  CHECK(!doc.contains("elapsed_ms"));  // timings off by default

  cfg.timings = true;
  json timed = diagnosis_to_json(d, cfg, 17);
  CHECK(timed["elapsed_ms"] == 17);
}

TEST_CASE("reports are byte-identical across repeated runs") {
  Group d18 = build_dihedral(18);
  RunConfig cfg;
  auto make = [&] {
    auto rings = enumerate_central_srings(d18);
    return enumeration_report("D18", rings, true, cfg).dump();
  };
  CHECK(make() == make());
}
