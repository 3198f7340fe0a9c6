#pragma once

#include <fstream>
#include <random>
#include <string>

#include "cdt/catalog.hpp"
#include "cdt/report.hpp"

namespace cdt::test {

// Reference values written by tools/oracle.py.
inline const Json& oracle() {
  static const Json data = [] {
    std::ifstream in(CDT_ORACLE_JSON);
    return Json::parse(in);
  }();
  return data;
}

inline const Json& oracle(CatalogGraph which) { return oracle().at(std::string(catalog_id(which))); }

inline Graph complete(int n) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline std::vector<Vertex> random_perm(int n, std::uint32_t seed) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace cdt::test
