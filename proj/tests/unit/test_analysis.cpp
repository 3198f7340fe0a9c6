#include "cdt/analysis.hpp"
#include "cdt/automorphism.hpp"
#include "cdt/error.hpp"
#include "cdt/pipeline.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;

namespace {

void require_all_pass(const std::vector<CheckRecord>& checks) {
  for (const auto& c : checks) {
    CAPTURE(c.id);
    CAPTURE(c.measured.dump());
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("line graphs of complete graphs") {
  for (int n = 4; n <= 8; ++n) {
    CAPTURE(n);
    const auto r = check_lkn_theorem(n);
    CHECK(r.holds());
    CHECK(r.stars.size() == static_cast<std::size_t>(n));
    CHECK(r.triangles.size() == static_cast<std::size_t>(n * (n - 1) * (n - 2) / 6));
  }
  const auto r6 = check_lkn_theorem(6);
  CHECK(r6.line_graph.order() == 15);
  CHECK(r6.stars.size() + r6.triangles.size() == 26);
}

TEST_CASE("fastening conditions reject a bad family") {
  // K4 as one copy of itself is fine; its triangles overlap in edges.
  const auto k4 = complete(4);
  const auto whole = make_family("whole", {{0, 1, 2, 3}});
  CHECK(check_k2_fastened(k4, {whole}).holds());
  const auto tris = make_family("triangles", cliques_of_size(k4, 3));
  const auto r = check_k2_fastened(k4, {tris});
  CHECK_FALSE(r.holds());
  CHECK_FALSE(r.families[0].edge_unique);
  // A single edge is not a decomposition.
  const auto partial = make_family("partial", {{0, 1}});
  CHECK_FALSE(check_k2_fastened(k4, {partial}).families[0].decomposes);
}

TEST_CASE("dual of the tetrahedron") {
  const auto g = complete(4);
  const auto oac = solve_oa(build_constraint_graph(g, girth_cycles(g), 2)).oac();
  const auto y = zip(g, oac, 2);
  const auto d = dual_cycle_graph(y, y.faces);
  CHECK(are_isomorphic(d, complete(4)).has_value());
}

TEST_CASE("Fano colourings") {
  const auto g = build(CatalogGraph::coxeter).graph;
  const auto c = find_fano_coloring(g);
  REQUIRE(c.has_value());
  CHECK(check_fano_coloring(g, *c));
  const auto coll = fano_collineations();
  CHECK(coll.size() == 168);
  for (std::size_t i = 0; i < coll.size(); i += 17) CHECK(check_fano_coloring(g, apply_collineation(*c, coll[i])));
  auto broken = *c;
  broken.vertex[0] = broken.vertex[g.neighbors(0)[0]];
  CHECK_FALSE(check_fano_coloring(g, broken));
  // K4: a quadrangle on the vertices, the opposite line on every star.
  const auto k4 = find_fano_coloring(complete(4));
  REQUIRE(k4.has_value());
  CHECK(check_fano_coloring(complete(4), *k4));
  CHECK_FALSE(find_fano_coloring(cycle_graph(7)).has_value());
}

TEST_CASE("Pappus analysis") { require_all_pass(pappus_checks()); }

TEST_CASE("Desargues analysis") { require_all_pass(desargues_checks()); }

TEST_CASE("Coxeter analysis") {
  for (const auto& c : coxeter_checks()) {
    CAPTURE(c.id);
    CAPTURE(c.measured.dump());
    if (c.id == "analysis.coxeter.dual") {
      // The dual is 7-regular on 24 vertices and 4-colourable.
      CHECK(c.measured["vertices"] == oracle(CatalogGraph::coxeter)["dual"]["vertices"]);
      CHECK(c.measured["chromatic_number"] == oracle(CatalogGraph::coxeter)["dual"]["chromatic_number"]);
      CHECK_FALSE(c.pass);
    } else {
      CHECK(c.pass);
    }
  }
}

TEST_CASE("Klein identification") {
  const auto g = build(CatalogGraph::coxeter).graph;
  const auto oac = solve_oa(build_constraint_graph(g, girth_cycles(g), 3)).oac();
  const auto r = verify_klein_identification(zip(g, oac, 3));
  CHECK(r.holds());
  CHECK(r.vertices == 56);
  CHECK(r.faces == 24);
  CHECK(r.embedding.genus == 3);
  CHECK(r.automorphisms == 336);
  CHECK(r.petrie_lengths == std::vector<int>(21, 8));
}
