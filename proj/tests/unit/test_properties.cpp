#include "cdt/automorphism.hpp"
#include "cdt/zipper.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;

// Invariants must not depend on the vertex numbering.
TEST_CASE("relabelling leaves every invariant unchanged") {
  const CatalogGraph graphs[] = {CatalogGraph::petersen, CatalogGraph::heawood, CatalogGraph::desargues,
                                 CatalogGraph::coxeter};
  for (auto w : graphs) {
    const auto g = build(w).graph;
    const auto& o = oracle(w);
    for (std::uint32_t seed = 0; seed < 100; ++seed) {
      CAPTURE(catalog_id(w));
      CAPTURE(seed);
      const auto h = relabel(g, random_perm(g.order(), seed));
      CHECK(girth(h) == o["g"].get<int>());
      CHECK(diameter(h) == o["d"].get<int>());
      CHECK(static_cast<int>(girth_cycles(h).size()) == o["eta"].get<int>());
      const int k = o["k"].get<int>();
      const auto sol = solve_oa(build_constraint_graph(h, girth_cycles(h), k));
      CHECK(sol.balanced() == o["balanced"].get<bool>());
      if (seed % 10 == 0) CHECK(automorphism_group(h).order == o["a"].get<std::uint64_t>());
    }
  }
}

TEST_CASE("canonical forms are idempotent") {
  const auto g = build(CatalogGraph::tutte).graph;
  for (const auto& c : girth_cycles(g)) {
    CHECK(CanonicalCycle::from(c.vertices()) == c);
    CHECK(CanonicalCycle::from(c.reversed()) == c);
  }
  for (const auto& p : paths_of_order(g, 4)) CHECK(CanonicalPath::from(p.vertices()) == p);
}

TEST_CASE("reversing every cycle mirrors the zip") {
  for (auto w : {CatalogGraph::k4, CatalogGraph::dodecahedral, CatalogGraph::coxeter, CatalogGraph::desargues}) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const int k = expected_row(w).k;
    const auto cg = build_constraint_graph(g, girth_cycles(g), k);
    auto oac = solve_oa(cg).oac();
    const auto y = zip(g, oac, k);
    for (int c = 0; c < constraint_components(cg); ++c) oac = flip_component(cg, oac, c);
    CHECK(validate_oac(g, oac, k));
    const auto z = zip(g, oac, k);
    CHECK(z.order() == y.order());
    CHECK(z.edges.size() == y.edges.size());
    CHECK(are_isomorphic(underlying_simple(z.graph()), underlying_simple(y.graph())).has_value());
    CHECK(verify_polygonal_embedding(z, z.faces).genus == verify_polygonal_embedding(y, y.faces).genus);
  }
}

TEST_CASE("serial and parallel agree on shuffled inputs") {
  const auto g = build(CatalogGraph::foster).graph;
  for (std::uint32_t seed = 0; seed < 3; ++seed) {
    const auto h = relabel(g, random_perm(g.order(), seed));
    const auto c = cycles_of_length(h, 10);
    CHECK(c == cycles_of_length_serial(h, 10));
    CHECK(path_incidence(c, 5) == path_incidence_serial(c, 5));
  }
}
