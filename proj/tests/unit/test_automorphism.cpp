#include "cdt/automorphism.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;

TEST_CASE("group orders and arc transitivity match the oracle") {
  for (auto w : catalog_graphs()) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const auto aut = automorphism_group(g);
    CHECK(aut.order == oracle(w)["a"].get<std::uint64_t>());
    for (const auto& p : aut.generators) CHECK(is_automorphism(g, p));
    CHECK(arc_transitivity(g, aut) == oracle(w)["k"].get<int>());
  }
}

TEST_CASE("small groups") {
  CHECK(automorphism_group(cycle_graph(7)).order == 14);
  CHECK(automorphism_group(complete(5)).order == 120);
  CHECK(automorphism_group(Graph(1)).order == 1);
  // Colouring one vertex of C6 leaves its reflection.
  std::vector<int> colors(6, 0);
  colors[0] = 1;
  CHECK(automorphism_group(cycle_graph(6), colors).order == 2);
}

TEST_CASE("isomorphism under relabelling") {
  const auto g = build(CatalogGraph::desargues).graph;
  const auto perm = random_perm(g.order(), 7);
  const auto h = relabel(g, perm);
  const auto iso = find_isomorphism(g, h);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(g, h, iso->mapping));
  CHECK_FALSE(find_isomorphism(g, build(CatalogGraph::pappus).graph).has_value());
  // Same parameters, different graphs: the Desargues graph and the
  // dodecahedral graph are both cubic on 20 vertices.
  CHECK_FALSE(are_isomorphic(g, build(CatalogGraph::dodecahedral).graph).has_value());
}

TEST_CASE("permutation helpers") {
  const Permutation p{1, 2, 0};
  const Permutation q{0, 2, 1};
  CHECK(compose(p, inverse(p)) == Permutation{0, 1, 2});
  CHECK(compose(p, q) == Permutation{2, 1, 0});
  const std::vector<Permutation> gens{p};
  CHECK(orbit(gens, 0).size() == 3);
  CHECK(set_orbit(gens, {0, 1}).size() == 3);
  CHECK(tuple_orbit(gens, {0, 1}).size() == 3);
}

TEST_CASE("extension of a partial map") {
  const auto g = build(CatalogGraph::petersen).graph;
  const std::vector<std::pair<Vertex, Vertex>> fix{{0, 0}};
  const auto p = extend_to_automorphism(g, fix);
  REQUIRE(p.has_value());
  CHECK(is_automorphism(g, *p));
  // An edge cannot go to a non-edge.
  Vertex far = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (!g.adjacent(0, v)) far = v;
  const Vertex near = g.neighbors(0)[0];
  const std::vector<std::pair<Vertex, Vertex>> bad{{0, 0}, {near, far}};
  CHECK_FALSE(extend_to_automorphism(g, bad).has_value());
}

TEST_CASE("s-arcs") {
  const auto g = build(CatalogGraph::heawood).graph;
  CHECK(s_arcs(g, 1).size() == 42);
  CHECK(s_arcs(g, 4).size() == 14 * 3 * 8);
}
