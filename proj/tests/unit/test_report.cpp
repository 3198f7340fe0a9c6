#include "cdt/error.hpp"
#include "cdt/pipeline.hpp"
#include "cdt/report.hpp"
#include "cdt/zipper.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;

TEST_CASE("graph JSON round trip") {
  for (auto w : catalog_graphs()) {
    const auto g = build(w).graph;
    CHECK(graph_from_json(graph_to_json(g)) == g);
  }
  const auto ref = kappa2_reference(build(CatalogGraph::k33).graph, 3, 4);
  const auto j = graph_to_json(ref);
  CHECK(j.contains("multiplicity"));
  CHECK(graph_from_json(j).multiplicity(0, 2) == 3);
}

TEST_CASE("bad graph JSON") {
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges": [[0, 1]]})")), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 2]]})")), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1], [1, 0]]})")), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n": "two", "edges": []})")), InvalidInput);
}

TEST_CASE("orientation JSON round trip") {
  const auto g = build(CatalogGraph::coxeter).graph;
  const auto oac = solve_oa(build_constraint_graph(g, girth_cycles(g), 3)).oac();
  const auto back = oac_from_json(oac_to_json(oac, g));
  CHECK(back.cycles == oac.cycles);
  CHECK(back.reversed == oac.reversed);
}

TEST_CASE("certificates serialise their walk") {
  const auto g = build(CatalogGraph::petersen).graph;
  const auto sol = solve_oa(build_constraint_graph(g, girth_cycles(g), 3));
  REQUIRE_FALSE(sol.balanced());
  const auto j = certificate_to_json(sol.certificate(), g);
  CHECK(j["odd"] == true);
  CHECK(j["walk"].size() == sol.certificate().cycles.size());
}

TEST_CASE("zip JSON and DOT") {
  const auto g = build(CatalogGraph::k4).graph;
  const auto oac = solve_oa(build_constraint_graph(g, girth_cycles(g), 2)).oac();
  const auto y = zip(g, oac, 2);
  const auto j = marked_graph_to_json(y);
  CHECK(j["faces"].size() == 4);
  CHECK(j["components"] == 1);
  const auto dot = graph_to_dot(g, "k4");
  CHECK(dot.find("graph \"k4\" {") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("run reports are deterministic and ordered") {
  const PipelineOptions opts{std::chrono::milliseconds(2000)};
  const auto a = verify_all(opts, CatalogGraph::coxeter, "verify-all --only coxeter").to_json();
  const auto b = verify_all(opts, CatalogGraph::coxeter, "verify-all --only coxeter").to_json();
  CHECK(a.dump() == b.dump());
  CHECK(a["schema_version"] == kReportSchemaVersion);
  const auto& checks = a["checks"];
  for (std::size_t i = 1; i < checks.size(); ++i)
    CHECK(checks[i - 1]["id"].get<std::string>() < checks[i]["id"].get<std::string>());
  CHECK(a["summary"]["checks"] == checks.size());
}

TEST_CASE("skipped checks do not fail a run") {
  RunReport r;
  r.checks.push_back({"x.a", 1, 1, true, false, ""});
  r.checks.push_back({"x.b", 1, nullptr, false, true, "not measured"});
  CHECK(r.passed());
  r.checks.push_back({"x.c", 1, 2, false, false, ""});
  CHECK_FALSE(r.passed());
}
