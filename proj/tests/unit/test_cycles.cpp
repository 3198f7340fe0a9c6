#include "cdt/automorphism.hpp"
#include "cdt/cycles.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;

TEST_CASE("canonical forms") {
  const std::vector<Vertex> a{3, 1, 4, 2};
  const std::vector<Vertex> b{2, 4, 1, 3};
  const auto ca = CanonicalCycle::from(a);
  CHECK(ca == CanonicalCycle::from(b));
  CHECK(ca.vertices() == std::vector<Vertex>{1, 3, 2, 4});
  const std::vector<Vertex> fwd{1, 3};
  const std::vector<Vertex> back{3, 1};
  CHECK(ca.direction_of(fwd) == 1);
  CHECK(ca.direction_of(back) == -1);
  CHECK(CanonicalPath::from(std::vector<Vertex>{5, 2, 0}).vertices() == std::vector<Vertex>{0, 2, 5});
  CHECK(to_string(ca) == "(1 3 2 4)");
}

TEST_CASE("girth cycles and path counts match the oracle") {
  for (auto w : catalog_graphs()) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const auto& o = oracle(w);
    const auto cycles = girth_cycles(g);
    CHECK(static_cast<int>(cycles.size()) == o["eta"].get<int>());
    for (const auto& c : cycles) CHECK(is_cycle_of(g, c.vertices()));
    for (const auto& [m, count] : o["paths"].items())
      CHECK(paths_of_order(g, std::stoi(m)).size() == count.get<std::size_t>());
  }
}

TEST_CASE("parallel kernels agree with the serial reference") {
  for (auto w : {CatalogGraph::petersen, CatalogGraph::coxeter, CatalogGraph::tutte, CatalogGraph::foster}) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const int len = *girth(g);
    const auto cycles = cycles_of_length(g, len);
    CHECK(cycles == cycles_of_length_serial(g, len));
    CHECK(girth_cycles(g) == girth_cycles_serial(g));
    CHECK(paths_of_order(g, 4) == paths_of_order_serial(g, 4));
    CHECK(path_incidence(cycles, 3) == path_incidence_serial(cycles, 3));
  }
}

TEST_CASE("longer cycles") {
  CHECK(cycles_of_length(complete(4), 4).size() == 3);
  CHECK(cycles_of_length(build(CatalogGraph::petersen).graph, 6).size() == 10);
  CHECK(cycles_of_length(complete(5), 5).size() == 12);
}

TEST_CASE("multiplicity census") {
  for (auto w : catalog_graphs()) {
    CAPTURE(catalog_id(w));
    const auto g = build(w).graph;
    const auto& o = oracle(w);
    const int k = o["k"].get<int>();
    const auto r = check_sf_uh(g, o["g"].get<int>(), k);
    const auto mu = r.mu();
    REQUIRE(mu.size() == o["mu"].size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
      REQUIRE(o["mu"][i].size() == 1);
      CHECK(mu[i] == o["mu"][i][0].get<int>());
      CHECK(r.levels[i].constant);
    }
    CHECK(r.mu0_is_two);
    CHECK(r.fits_power_i_plus_1);
  }
}

TEST_CASE("cycles through a path") {
  const auto g = build(CatalogGraph::petersen).graph;
  const auto cycles = girth_cycles(g);
  const auto inc = path_incidence(cycles, 3);
  const auto& [path, where] = *inc.begin();
  CHECK(where.size() == 2);
  CHECK(cycles_through_path(g, cycles, path).size() == 2);
}

TEST_CASE("cycle-path transitivity") {
  for (auto w : {CatalogGraph::petersen, CatalogGraph::heawood, CatalogGraph::coxeter}) {
    const auto g = build(w).graph;
    CHECK(check_cycle_path_uh(g, automorphism_group(g)));
  }
}
