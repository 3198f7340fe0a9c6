#include "cdt/catalog.hpp"
#include "cdt/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;
using namespace std::chrono_literals;

TEST_CASE("ids round-trip") {
  for (auto w : catalog_graphs()) CHECK(parse_catalog_graph(catalog_id(w)) == w);
  CHECK(parse_catalog_graph("biggs-smith") == CatalogGraph::biggs_smith);
  CHECK_THROWS_AS(parse_catalog_graph("k5"), InvalidInput);
}

TEST_CASE("builders agree with independent constructions") {
  for (auto w : catalog_graphs()) {
    CAPTURE(catalog_id(w));
    const auto built = build(w);
    const auto& o = oracle(w);
    CHECK(built.graph.order() == o["n"].get<int>());
    CHECK(regular_degree(built.graph) == 3);
    CHECK(built.graph.labels() == built.scheme.names());
  }
}

TEST_CASE("table rows") {
  // Every column the oracle measures, against the stored row.
  for (auto w : catalog_graphs()) {
    CAPTURE(catalog_id(w));
    const auto row = expected_row(w);
    const auto& o = oracle(w);
    CHECK(row.n == o["n"].get<int>());
    CHECK(row.d == o["d"].get<int>());
    CHECK(row.g == o["g"].get<int>());
    CHECK(row.k == o["k"].get<int>());
    CHECK(row.eta == o["eta"].get<int>());
    CHECK(row.a == o["a"].get<std::uint64_t>());
    CHECK(row.b == o["b"].get<bool>());
  }
}

TEST_CASE("row verification") {
  const auto r = verify_row(CatalogGraph::coxeter, {.automorphisms = true, .kappa = true, .hamilton_budget = 10s});
  CHECK(r.passed());
  REQUIRE(r.column("h") != nullptr);
  CHECK(r.column("h")->measured == 0);
  const auto p = verify_row(CatalogGraph::pappus, {.automorphisms = false, .kappa = true});
  CHECK_FALSE(p.passed());
  CHECK(p.column("kappa")->measured == 0);
  CHECK(p.column("a")->skipped);
}

TEST_CASE("fixture parser") {
  const auto fx = parse_fixture(
      "graph k4\n"
      "k 2\n"
      "scheme digits 4\n"
      "(123), (210), (301), (032)\n");
  CHECK(fx.graph == CatalogGraph::k4);
  CHECK(fx.cycles.size() == 4);
  CHECK(fx.cycles[1].traversal == std::vector<Vertex>{2, 1, 0});
  CHECK_THROWS_AS(parse_fixture("graph k4\nk 2\nscheme digits 4\n(12\n"), InvalidInput);
  CHECK_THROWS_AS(parse_fixture("k 2\n"), InvalidInput);
  CHECK_THROWS_AS(fixture_oac(CatalogGraph::petersen), InvalidInput);
}

TEST_CASE("listed cycles are girth cycles") {
  for (auto w : catalog_graphs()) {
    if (!has_fixture_oac(w)) continue;
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const auto listed = fixture_oac(w, true);
    CHECK(static_cast<int>(listed.size()) == expected_row(w).eta);
    CHECK(listed.cycles == girth_cycles(g));
  }
}
