#include "cdt/automorphism.hpp"
#include "cdt/error.hpp"
#include "cdt/zipper.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;

namespace {

MarkedGraph zip_solved(CatalogGraph w, ZipOptions options = {}) {
  const auto g = build(w).graph;
  const int k = expected_row(w).k;
  const auto oac = solve_oa(build_constraint_graph(g, girth_cycles(g), k)).oac();
  return zip(g, oac, k, options);
}

std::vector<int> part_orders(const MarkedGraph& y) {
  std::vector<int> out;
  for (const auto& p : connected_parts(y)) out.push_back(p.order());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cycle powers") {
  const std::vector<Vertex> hex{0, 1, 2, 3, 4, 5};
  const auto sq = cycle_power(hex, 3);
  CHECK(sq.orbits.size() == 2);
  CHECK(sq.orbits[0] == std::vector<int>{0, 2, 4});
  CHECK(sq.arcs[1].head == 3);
  CHECK(sq.arcs[1].label == 2);
  const std::vector<Vertex> hept{0, 1, 2, 3, 4, 5, 6};
  const auto p7 = cycle_power(hept, 3);
  CHECK(p7.orbits.size() == 1);
  CHECK(p7.orbits[0] == std::vector<int>{0, 2, 4, 6, 1, 3, 5});
  CHECK(cycle_power(hept, 2).arcs[6].head == 0);
  CHECK_THROWS_AS(cycle_power(hex, 4), Unsupported);
  CHECK_THROWS_AS(cycle_power(hex, 5), Unsupported);
  CHECK_THROWS_AS(cycle_power(std::vector<Vertex>{0, 1}, 2), InvalidInput);
}

TEST_CASE("plane graphs zip back to themselves on the sphere") {
  for (auto w : {CatalogGraph::k4, CatalogGraph::q3, CatalogGraph::dodecahedral}) {
    CAPTURE(catalog_id(w));
    const auto y = zip_solved(w);
    const auto g = build(w).graph;
    const auto on_g = on_underlying_vertices(y, g.order());
    REQUIRE(on_g.has_value());
    CHECK(*on_g == g);
    const auto e = verify_polygonal_embedding(y, y.faces);
    CHECK(e.orientable);
    CHECK(e.genus == 0);
  }
}

TEST_CASE("zip sizes match the oracle") {
  for (auto w : {CatalogGraph::k33, CatalogGraph::desargues, CatalogGraph::coxeter}) {
    CAPTURE(catalog_id(w));
    const auto& o = oracle(w);
    for (bool merge : {false, true}) {
      const auto y = zip_solved(w, {.require_opposite = true, .merge_by_vertex = merge});
      const auto& ref = o[merge ? "zip_merged" : "zip"];
      CHECK(y.order() == ref["vertices"].get<int>());
      CHECK(static_cast<int>(y.edges.size()) == ref["edges"].get<int>());
      CHECK(part_orders(y) == ref["component_orders"].get<std::vector<int>>());
    }
  }
}

TEST_CASE("relaxed zip of the Pappus graph") {
  const auto g = build(CatalogGraph::pappus).graph;
  const auto listed = fixture_oac(CatalogGraph::pappus);
  CHECK_THROWS_AS(zip(g, listed, 3), InvalidInput);
  const auto y = zip(g, listed, 3, {.require_opposite = false});
  CHECK(y.same_direction_pairs > 0);
  CHECK(y.order() == oracle(CatalogGraph::pappus)["zip"]["vertices"].get<int>());
  CHECK(part_orders(y) == std::vector<int>{9, 9});
}

TEST_CASE("multiplicity reference") {
  const auto g = build(CatalogGraph::k33).graph;
  const auto ref = kappa2_reference(g, 3, 4);
  CHECK(ref.order() == 6);
  CHECK(ref.size() == 18);
  CHECK(ref.multiplicity(0, 2) == 3);
  const auto merged = zip_solved(CatalogGraph::k33, {.require_opposite = true, .merge_by_vertex = true});
  const auto on_g = on_underlying_vertices(merged, 6);
  REQUIRE(on_g.has_value());
  CHECK(*on_g == ref);
  CHECK_THROWS_AS(kappa2_reference(build(CatalogGraph::coxeter).graph, 3, 7), PreconditionFailed);
  CHECK_THROWS_AS(kappa2_reference(build(CatalogGraph::petersen).graph, 3, 5), PreconditionFailed);
}

TEST_CASE("embedding of the tetrahedron and its Petrie walks") {
  const auto g = complete(4);
  const std::vector<std::vector<Vertex>> tri{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}};
  const auto faces = faces_from_cycles(g, tri);
  const auto e = verify_polygonal_embedding(g, faces);
  CHECK(e.orientable);
  CHECK(e.euler_characteristic == 2);
  std::vector<std::pair<int, int>> ends;
  for (const auto& ed : g.edges()) ends.emplace_back(ed.u, ed.v);
  const auto walks = petrie_walks(ends, faces);
  CHECK(walks.size() == 3);
  for (const auto& w : walks) CHECK(w.size() == 4);
  const std::vector<std::vector<Vertex>> bad{{0, 1, 2}, {0, 1, 3}, {1, 3, 2}, {0, 2, 3}};
  CHECK_FALSE(verify_polygonal_embedding(g, faces_from_cycles(g, bad)).orientable);
  CHECK(orient_faces(ends, faces_from_cycles(g, bad)).has_value());
  CHECK_THROWS_AS(faces_from_cycles(cycle_graph(5), std::vector<std::vector<Vertex>>{{0, 2, 4}}), InvalidInput);
}

TEST_CASE("zip rejects k outside 2..3") {
  const auto g = build(CatalogGraph::tutte).graph;
  const auto oac = solve_oa(build_constraint_graph(g, girth_cycles(g), 5)).oac();
  CHECK_THROWS_AS(zip(g, oac, 5), Unsupported);
}
