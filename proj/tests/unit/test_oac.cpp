#include "cdt/error.hpp"
#include "cdt/oac.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;

namespace {

// Every orientation of every cycle, checked directly.
int brute_force_assignments(const Graph& g, const std::vector<CanonicalCycle>& cycles, int k) {
  int valid = 0;
  const auto n = cycles.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    OrientedCycleSet s;
    s.cycles = cycles;
    for (std::size_t i = 0; i < n; ++i) s.reversed.push_back(((mask >> i) & 1u) != 0);
    if (validate_oac(g, s, k)) ++valid;
  }
  return valid;
}

}  // namespace

TEST_CASE("balance and component count match the oracle") {
  for (auto w : catalog_graphs()) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const auto& o = oracle(w);
    const int k = o["k"].get<int>();
    const auto cg = build_constraint_graph(g, girth_cycles(g), k);
    const auto sol = solve_oa(cg);
    CHECK(sol.balanced() == o["balanced"].get<bool>());
    if (sol.balanced()) {
      CHECK(sol.components == o["constraint_components"].get<int>());
      CHECK(validate_oac(g, sol.oac(), k));
    } else {
      CHECK(certificate_is_odd(sol.certificate()));
    }
  }
}

TEST_CASE("number of assignments is a power of two in the components") {
  for (auto w : {CatalogGraph::k4, CatalogGraph::q3, CatalogGraph::k33, CatalogGraph::dodecahedral}) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const int k = expected_row(w).k;
    const auto cycles = girth_cycles(g);
    const auto cg = build_constraint_graph(g, cycles, k);
    const int c = constraint_components(cg);
    CHECK(brute_force_assignments(g, cycles, k) == (1 << c));
  }
}

TEST_CASE("kappa classifier") {
  for (auto w : catalog_graphs()) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    CHECK(classify_kappa(g) == oracle(w)["kappa"].get<int>());
  }
}

TEST_CASE("listed orientations") {
  for (auto w : catalog_graphs()) {
    if (!has_fixture_oac(w)) continue;
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const int k = expected_row(w).k;
    const auto listed = fixture_oac(w);
    const bool valid = validate_oac(g, listed, k);
    CHECK(valid == (w != CatalogGraph::pappus));
    if (!valid) continue;
    const auto cg = build_constraint_graph(g, girth_cycles(g), k);
    CHECK(equal_up_to_component_flips(cg, solve_oa(cg).oac(), listed));
  }
}

TEST_CASE("listed obstruction walks are odd") {
  for (auto w : {CatalogGraph::petersen, CatalogGraph::heawood}) {
    CAPTURE(catalog_id(w));
    CHECK(certificate_is_odd(fixture_obstruction(w)));
  }
}

TEST_CASE("flipping a component keeps validity") {
  const auto g = build(CatalogGraph::coxeter).graph;
  const auto cg = build_constraint_graph(g, girth_cycles(g), 3);
  const auto sol = solve_oa(cg);
  const auto flipped = flip_component(cg, sol.oac(), 0);
  CHECK(validate_oac(g, flipped, 3));
  CHECK(flipped.reversed != sol.oac().reversed);
  CHECK(equal_up_to_component_flips(cg, sol.oac(), flipped));
}

TEST_CASE("traversals round-trip") {
  const auto g = build(CatalogGraph::k4).graph;
  const auto oac = solve_oa(build_constraint_graph(g, girth_cycles(g), 2)).oac();
  const auto again = OrientedCycleSet::from_traversals(oac.traversals());
  CHECK(again.cycles == oac.cycles);
  CHECK(again.reversed == oac.reversed);
}
