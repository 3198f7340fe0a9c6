#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "cdt/cycles.hpp"
#include "cdt/graph.hpp"

namespace cdt {

/// One constraint per k-vertex path: the orientation bits x_a, x_b of the two
/// girth cycles through `path` must satisfy x_a XOR x_b == parity, where bit
/// 0 selects a cycle's canonical traversal.
struct ConstraintEdge {
  int a = 0;
  int b = 0;
  CanonicalPath path;
  bool parity = false;
};

struct ConstraintGraph {
  std::vector<CanonicalCycle> cycles;
  int k = 0;
  std::vector<ConstraintEdge> edges;  // in canonical path order
};

/// A direction for every girth cycle.
struct OrientedCycleSet {
  std::vector<CanonicalCycle> cycles;  // sorted
  std::vector<bool> reversed;          // false: canonical traversal

  std::size_t size() const { return cycles.size(); }
  std::vector<Vertex> traversal(std::size_t i) const;
  std::vector<std::vector<Vertex>> traversals() const;
  /// Sorts the traversals by canonical cycle. Throws InvalidInput on a
  /// repeated cycle.
  static OrientedCycleSet from_traversals(std::span<const std::vector<Vertex>> traversals);
};

/// Closed walk cycle_0, path_0, cycle_1, ..., path_{m-1}, cycle_0 in the
/// constraint graph whose parities sum to 1.
struct ObstructionCertificate {
  std::vector<CanonicalCycle> cycles;  // cycle_0 .. cycle_{m-1}
  std::vector<CanonicalPath> paths;    // path_i is shared by cycle_i and cycle_{i+1 mod m}
};

/// Paths in fewer than two cycles add no constraint. Throws
/// PreconditionFailed when some k-vertex path lies in three or more cycles.
ConstraintGraph build_constraint_graph(const Graph& g, std::span<const CanonicalCycle> cycles, int k);

/// Number of connected components of the constraint graph (isolated cycles
/// included).
int constraint_components(const ConstraintGraph& cg);

struct OaSolution {
  std::variant<OrientedCycleSet, ObstructionCertificate> result;
  int components = 0;  // valid assignments number 2^components when balanced

  bool balanced() const { return std::holds_alternative<OrientedCycleSet>(result); }
  const OrientedCycleSet& oac() const { return std::get<OrientedCycleSet>(result); }
  const ObstructionCertificate& certificate() const { return std::get<ObstructionCertificate>(result); }
};

/// Spanning-tree propagation of orientation bits. The least cycle of each
/// component keeps its canonical direction. An unbalanced graph yields the
/// fundamental cycle of the first violated constraint.
OaSolution solve_oa(const ConstraintGraph& cg);

/// Parity of the certificate recomputed from the cycles and paths alone;
/// true means the walk is contradictory (odd). Throws InvalidInput when a
/// listed path is not shared by the adjacent cycles.
bool certificate_is_odd(const ObstructionCertificate& cert);

/// True iff each k-vertex path of g lies in exactly two cycles of the set and
/// they traverse it in opposite directions. Throws InvalidInput when the set
/// is not exactly the girth cycles of g.
bool validate_oac(const Graph& g, const OrientedCycleSet& oac, int k);

/// Component id (in the constraint graph) per cycle.
std::vector<int> constraint_component_ids(const ConstraintGraph& cg);

/// True iff `other` is obtained from `reference` by reversing whole
/// constraint-graph components.
bool equal_up_to_component_flips(const ConstraintGraph& cg, const OrientedCycleSet& reference,
                                 const OrientedCycleSet& other);

/// Reverses every cycle in the given component.
OrientedCycleSet flip_component(const ConstraintGraph& cg, const OrientedCycleSet& oac, int component);

/// 0: no orientation assignment; 1: planar; 2: g == 2(k-1); 3: g > 2(k-1).
int classify_kappa(const Graph& g, int girth, int k);
/// Computes girth and arc-transitivity first.
int classify_kappa(const Graph& g);

}  // namespace cdt
