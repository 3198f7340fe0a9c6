#include <chrono>

#include "cdt/error.hpp"
#include "cdt/automorphism.hpp"
#include "cdt/graph.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;
using namespace std::chrono_literals;

TEST_CASE("construction rejects bad input") {
  const std::vector<std::pair<Vertex, Vertex>> loop{{0, 0}};
  CHECK_THROWS_AS(make_graph(2, loop), InvalidInput);
  const std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(make_graph(2, dup), InvalidInput);
  const std::vector<std::pair<Vertex, Vertex>> range{{0, 5}};
  CHECK_THROWS_AS(make_graph(3, range), InvalidInput);
  const auto multi = make_graph(2, dup, EdgeMode::multigraph);
  CHECK(multi.multiplicity(0, 1) == 2);
  CHECK(multi.size() == 2);
  CHECK(underlying_simple(multi).size() == 1);
}

TEST_CASE("edges are sorted pairs") {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  const auto e = g.edges();
  REQUIRE(e.size() == 2);
  CHECK(e[0] == VertexPair{0, 2});
  CHECK(e[1] == VertexPair{1, 3});
}

TEST_CASE("derived graphs") {
  // C5 is self-complementary.
  CHECK(are_isomorphic(complement(cycle_graph(5)), cycle_graph(5)).has_value());
  // L(K4) is the octahedron K_{2,2,2}.
  const auto oct = line_graph(complete(4));
  CHECK(oct.order() == 6);
  CHECK(oct.size() == 12);
  CHECK(regular_degree(oct) == 4);
  CHECK(clique_number(oct) == 3);
  // Distance-2 graph of K3,3 is two triangles.
  const auto sq = distance_power(build(CatalogGraph::k33).graph, 2);
  CHECK(sq.size() == 6);
  CHECK(component_count(sq) == 2);
  CHECK_THROWS_AS(distance_power(build(CatalogGraph::k4).graph, 2), PreconditionFailed);
  const std::vector<Vertex> three{0, 1, 2};
  CHECK(induced_subgraph(complete(5), three).size() == 3);
}

TEST_CASE("metrics match the oracle") {
  for (auto w : catalog_graphs()) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const auto& o = oracle(w);
    CHECK(g.order() == o["n"].get<int>());
    CHECK(static_cast<int>(g.size()) == o["m"].get<int>());
    CHECK(diameter(g) == o["d"].get<int>());
    CHECK(girth(g) == o["g"].get<int>());
    CHECK(is_bipartite(g) == o["b"].get<bool>());
    CHECK(is_planar(g) == o["planar"].get<bool>());
    CHECK(clique_number(g) == o["clique_number"].get<int>());
  }
}

TEST_CASE("girth of a forest is empty") {
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK_FALSE(girth(path).has_value());
  CHECK_THROWS_AS(diameter(Graph(2)), PreconditionFailed);
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(complete(5)) == 5);
  CHECK(chromatic_number(build(CatalogGraph::heawood).graph) == 2);
  CHECK(chromatic_number(build(CatalogGraph::petersen).graph) == 3);
  CHECK(chromatic_number(cycle_graph(7)) == 3);
  const auto g = build(CatalogGraph::coxeter).graph;
  const auto c = optimal_coloring(g);
  CHECK(is_proper_coloring(g, c));
  CHECK(chromatic_number(g) == 3);
  CHECK_THROWS_AS(chromatic_number(Graph(kChromaticLimit + 1)), Unsupported);
}

TEST_CASE("hamiltonicity") {
  CHECK(hamiltonian_cycle(build(CatalogGraph::petersen).graph, 5s).status == Tristate::no);
  CHECK(hamiltonian_cycle(build(CatalogGraph::coxeter).graph, 60s).status == Tristate::no);
  for (auto w : {CatalogGraph::q3, CatalogGraph::tutte, CatalogGraph::foster, CatalogGraph::biggs_smith}) {
    const auto g = build(w).graph;
    const auto r = hamiltonian_cycle(g, 60s);
    REQUIRE(r.status == Tristate::yes);
    CHECK(static_cast<int>(r.cycle.size()) == g.order());
    for (std::size_t i = 0; i < r.cycle.size(); ++i) CHECK(g.adjacent(r.cycle[i], r.cycle[(i + 1) % r.cycle.size()]));
  }
}

TEST_CASE("planarity") {
  CHECK(is_planar(complete(4)));
  CHECK_FALSE(is_planar(complete(5)));
  CHECK_FALSE(is_planar(build(CatalogGraph::k33).graph));
  CHECK(is_planar(build(CatalogGraph::dodecahedral).graph));
}
