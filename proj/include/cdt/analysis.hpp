#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cdt/automorphism.hpp"
#include "cdt/configuration.hpp"
#include "cdt/graph.hpp"
#include "cdt/zipper.hpp"

namespace cdt {

/// Vertex sets (sorted, in sorted order) each inducing a copy of one
/// template graph in some host.
struct CopyFamily {
  std::string name;
  std::vector<std::vector<Vertex>> members;
  std::size_t size() const { return members.size(); }
};

CopyFamily make_family(std::string name, std::vector<std::vector<Vertex>> members);

struct PappusTriangles {
  CopyFamily h0;  // triangles that are not zipped faces
  CopyFamily h1;  // colour class of the least zipped triangle
  CopyFamily h2;
  bool h0_common_label = false;  // each H0 triangle's edges share one label
  /// Per family (h0, h1, h2): its members grouped into classes of pairwise
  /// vertex-disjoint triangles; empty when the grouping is not a partition.
  std::array<std::vector<std::vector<int>>, 3> parallel_classes;
};

/// Throws PreconditionFailed unless the zipped triangles are 2-colourable
/// under "shares an edge" and the three families hold 9 triangles each.
PappusTriangles classify_pappus_triangles(const MarkedGraph& y);

/// Points are the vertices 0..point_count-1; lines are the members.
IncidenceConfiguration configuration_from_family(int point_count, const CopyFamily& family,
                                                 std::vector<std::string> point_names = {});

struct FamilyConditions {
  std::string name;
  std::size_t copies = 0;                 // n_i
  std::optional<int> copies_per_vertex;   // m_i when constant
  bool uniform = false;         // (a) one orbit, stabiliser induces Aut(template)
  bool decomposes = false;      // (b) induced copies, edge-disjoint, covering E
  bool meets_in_vertices = false;  // (c) constant m_i, two copies share <= 1 vertex
  bool census = false;          // (d) the family accounts for every induced copy
  bool edge_unique = false;     // (e) each edge in exactly one copy
  bool holds() const { return uniform && decomposes && meets_in_vertices && census && edge_unique; }
};

struct FastenedReport {
  std::vector<FamilyConditions> families;
  bool holds() const;
};

/// Conditions (a)-(e) of a K2-fastened multi-family UH graph, measured per
/// family. Throws PreconditionFailed on an empty family list.
FastenedReport check_k2_fastened(const Graph& g, const std::vector<CopyFamily>& families);
/// Same, reusing a known automorphism group of g.
FastenedReport check_k2_fastened(const Graph& g, const GroupDescription& aut, const std::vector<CopyFamily>& families);

struct LknReport {
  int n = 0;
  Graph line_graph;        // L(K_n); vertex i is the i-th pair of K_n
  CopyFamily stars;        // n copies of K_{n-1}
  CopyFamily triangles;    // C(n,3) copies of K_3
  FastenedReport conditions;
  bool holds() const;
};

/// Throws InvalidInput unless 4 <= n <= 8.
LknReport check_lkn_theorem(int n);

/// One vertex per face; faces adjacent when they share an edge.
Graph dual_cycle_graph(const MarkedGraph& y, const FaceSet& faces);

/// Vertex and edge colours in 1..7; edge colours follow Graph::edges().
struct FanoColoring {
  std::vector<int> vertex;
  std::vector<int> edge;
};

/// The incident edge colours at each vertex form a Fano line, every edge
/// colour forms a line with its two end colours, and each vertex colour
/// together with its incident line leaves a non-collinear triple.
bool check_fano_coloring(const Graph& g, const FanoColoring& colors);

/// Backtracking search for a colouring passing check_fano_coloring.
std::optional<FanoColoring> find_fano_coloring(const Graph& g);

/// The 168 permutations of the points 1..7 (as 0..6) preserving lines.
std::vector<std::array<int, 7>> fano_collineations();

FanoColoring apply_collineation(const FanoColoring& colors, const std::array<int, 7>& perm);

struct KleinReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  bool cubic = false;
  bool connected = false;
  int girth = 0;
  EmbeddingReport embedding;
  std::uint64_t automorphisms = 0;
  std::vector<int> petrie_lengths;  // sorted
  bool holds() const;
};

/// Checks the zipped Coxeter graph against the Klein map: (56, 84, 24),
/// cubic, connected, girth 7, orientable genus 3, 336 automorphisms and
/// Petrie polygons of length 8.
KleinReport verify_klein_identification(const MarkedGraph& y);

}  // namespace cdt
