#include "cdt/automorphism.hpp"
#include "cdt/configuration.hpp"
#include "cdt/error.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cdt;
using namespace cdt::test;

TEST_CASE("Fano plane") {
  const auto fano = fano_plane();
  const auto shape = configuration_shape(fano);
  CHECK(shape.is_symmetric(7, 3));
  CHECK(shape.linear);
  CHECK(fano.flags().size() == 21);
  CHECK(are_isomorphic(levi_graph(fano), build(CatalogGraph::heawood).graph).has_value());
  CHECK(is_self_dual(fano));
  const auto d = self_duality(fano);
  REQUIRE(d.has_value());
  CHECK(is_duality(fano, *d));
  // Every two points are collinear.
  CHECK(menger_graph(fano).size() == 21);
}

TEST_CASE("Pappus configuration") {
  const auto levi_pappus = build(CatalogGraph::pappus).graph;
  // Points 0..8, lines read off the classical picture.
  const auto pappus = IncidenceConfiguration::make(
      9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 4, 8}, {0, 5, 7}, {1, 3, 8}, {1, 5, 6}, {2, 3, 7}, {2, 4, 6}});
  CHECK(configuration_shape(pappus).is_symmetric(9, 3));
  CHECK(are_isomorphic(levi_graph(pappus), levi_pappus).has_value());
  CHECK(is_self_dual(pappus));
}

TEST_CASE("small configurations") {
  // One line through four points plus the three lines joining a fifth point.
  const auto cfg = IncidenceConfiguration::make(5, {{0, 1, 2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_FALSE(configuration_shape(cfg).uniform);
  const auto triangle = IncidenceConfiguration::make(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_self_dual(triangle));
  const auto star = IncidenceConfiguration::make(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(is_self_dual(star), PreconditionFailed);
  CHECK(dual(dual(star)).lines.size() == star.lines.size());
}

TEST_CASE("bad configurations are rejected") {
  CHECK_THROWS_AS(IncidenceConfiguration::make(3, {{0, 5}}), InvalidInput);
  CHECK_THROWS_AS(IncidenceConfiguration::make(3, {{0, 0}}), InvalidInput);
}

TEST_CASE("isomorphism of configurations") {
  const auto fano = fano_plane();
  auto shuffled = fano;
  std::reverse(shuffled.lines.begin(), shuffled.lines.end());
  CHECK(configuration_isomorphism(fano, shuffled).has_value());
  // Another labelling of the Fano plane.
  const auto other = IncidenceConfiguration::make(
      7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  CHECK(configuration_isomorphism(fano, other).has_value());
  const auto pencil = IncidenceConfiguration::make(7, {{0, 1, 2, 3, 4, 5, 6}});
  CHECK_FALSE(configuration_isomorphism(fano, pencil).has_value());
}
