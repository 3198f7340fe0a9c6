#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdt/automorphism.hpp"
#include "cdt/graph.hpp"

namespace cdt {

/// Undirected cycle stored as its lexicographically least rotation or
/// reflection: it starts at its least vertex and the second entry is smaller
/// than the last.
class CanonicalCycle {
 public:
  CanonicalCycle() = default;
  /// Canonicalises any traversal of the cycle.
  static CanonicalCycle from(std::span<const Vertex> traversal);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  Vertex operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// The traversal in the opposite direction, starting at the same vertex.
  std::vector<Vertex> reversed() const;

  /// +1 if the canonical traversal runs along `path` in its given order, -1
  /// if against it, 0 if `path` is not a subpath.
  int direction_of(std::span<const Vertex> path) const;
  bool contains_vertex(Vertex v) const;

  auto operator<=>(const CanonicalCycle&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Path stored with the smaller endpoint first.
class CanonicalPath {
 public:
  CanonicalPath() = default;
  static CanonicalPath from(std::span<const Vertex> walk);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Number of vertices.
  std::size_t order() const { return vertices_.size(); }

  auto operator<=>(const CanonicalPath&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

std::string to_string(const CanonicalCycle& c);
std::string to_string(const CanonicalPath& p);

/// True iff consecutive vertices (cyclically) are adjacent and none repeat.
bool is_cycle_of(const Graph& g, std::span<const Vertex> traversal);
bool is_path_of(const Graph& g, std::span<const Vertex> walk);

/// All cycles of the given length, sorted, without duplicates.
/// cycles_of_length runs one search per root vertex in parallel; the serial
/// variant is the reference implementation and returns identical output.
std::vector<CanonicalCycle> cycles_of_length(const Graph& g, int length);
std::vector<CanonicalCycle> cycles_of_length_serial(const Graph& g, int length);

/// All shortest cycles; empty for forests.
std::vector<CanonicalCycle> girth_cycles(const Graph& g);
std::vector<CanonicalCycle> girth_cycles_serial(const Graph& g);

/// All paths with m vertices (m >= 2), canonical and sorted.
std::vector<CanonicalPath> paths_of_order(const Graph& g, int m);
std::vector<CanonicalPath> paths_of_order_serial(const Graph& g, int m);

/// For every m-vertex subpath of the given cycles, the indices of the cycles
/// containing it (ascending).
using PathIncidence = std::map<CanonicalPath, std::vector<int>>;
PathIncidence path_incidence(std::span<const CanonicalCycle> cycles, int m);
PathIncidence path_incidence_serial(std::span<const CanonicalCycle> cycles, int m);

/// Cycles containing `path` as a subpath. Throws InvalidInput when `path` is
/// not a path of g.
std::vector<CanonicalCycle> cycles_through_path(const Graph& g, std::span<const CanonicalCycle> cycles,
                                                const CanonicalPath& path);

struct FasteningLevel {
  int i = 0;                  // level index
  int path_order = 0;         // k - i vertices
  std::size_t paths = 0;      // number of such paths in G
  int min_multiplicity = 0;   // over all paths
  int max_multiplicity = 0;
  bool constant = false;
  bool pairwise_exact = false;  // two cycles through a path share only it
};

struct SfUhReport {
  int girth = 0;
  int k = 0;
  std::size_t cycle_count = 0;
  std::vector<FasteningLevel> levels;
  bool mu0_is_two = false;
  bool fits_power_i = false;        // mu_i == 2^i
  bool fits_power_i_plus_1 = false; // mu_i == 2^(i+1)
  std::vector<int> mu() const;
  bool holds() const;  // constant multiplicities, pairwise exact, mu0 = 2
};

SfUhReport check_sf_uh(const Graph& g, int girth, int k);

struct CyclePathUhReport {
  bool cycles_transitive = false;
  bool cycle_dihedral = false;  // stabiliser induces order-2g dihedral action
  bool paths_transitive = false;
  bool path_flip = false;
  bool holds() const { return cycles_transitive && cycle_dihedral && paths_transitive && path_flip; }
};

CyclePathUhReport check_cycle_path_uh_report(const Graph& g, const GroupDescription& aut, int k);
/// C_g-UH and P_k-UH with k the arc-transitivity computed from aut.
bool check_cycle_path_uh(const Graph& g, const GroupDescription& aut);

}  // namespace cdt
