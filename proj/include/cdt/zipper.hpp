#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cdt/graph.hpp"
#include "cdt/oac.hpp"

namespace cdt {

/// Position `position` of oriented cycle `cycle`.
struct Occurrence {
  int cycle = 0;
  int position = 0;
  auto operator<=>(const Occurrence&) const = default;
};

/// Arc of a cycle power: from position tail to tail + (k-1).
struct MarkedArc {
  int tail = 0;
  int head = 0;
  Vertex label = -1;  // middle vertex for k = 3, -1 for k = 2
};

/// The (k-1)-th power of one oriented girth cycle. Orbits list positions
/// in traversal order; arcs[p] starts at position p.
struct MarkedCyclePower {
  int source = 0;
  std::vector<Vertex> cycle;
  int k = 0;
  std::vector<std::vector<int>> orbits;
  std::vector<MarkedArc> arcs;
};

/// Throws Unsupported for k outside {2, 3}.
MarkedCyclePower cycle_power(std::span<const Vertex> oriented, int k, int source = 0);

/// Edge `edge` traversed from its first endpoint (forward) or its second.
struct Dart {
  int edge = 0;
  bool forward = true;
  auto operator<=>(const Dart&) const = default;
};

/// Closed walks declared as 2-cell faces.
struct FaceSet {
  std::vector<std::vector<Dart>> faces;
  std::size_t size() const { return faces.size(); }
};

struct MarkedEdge {
  int u = 0;
  int v = 0;
  Vertex label = -1;
  std::vector<Vertex> path;  // the shared path of G, canonical
  Occurrence arc_a;          // tails of the two zipped arcs
  Occurrence arc_b;
};

struct MarkedGraph {
  int k = 0;
  std::vector<Vertex> underlying;                 // G-vertex per vertex
  std::vector<std::vector<Occurrence>> classes;   // occurrences per vertex
  std::vector<MarkedEdge> edges;                  // canonical path order
  FaceSet faces;                                  // one per power orbit
  std::vector<int> face_source;                   // cycle index per face
  std::vector<std::string> source_labels;         // G labels, if any
  int same_direction_pairs = 0;                   // nonzero only in relaxed mode

  int order() const { return static_cast<int>(underlying.size()); }
  std::vector<std::pair<int, int>> edge_ends() const;
  /// Multigraph with vertex labels from G and edge labels naming the middle
  /// vertex. Throws PreconditionFailed on loops.
  Graph graph() const;
};

/// Connected components of y as separate marked graphs, ordered by least
/// vertex; faces go with their edges.
std::vector<MarkedGraph> connected_parts(const MarkedGraph& y);

struct ZipOptions {
  /// Reject arc pairs running the same way along their path. When false,
  /// such pairs are still zipped endpoint to like endpoint and counted.
  bool require_opposite = true;
  /// Also identify every occurrence of the same G-vertex, so that Y lives on
  /// V(G). The arc-endpoint closure alone splits a vertex whenever its
  /// zipped faces fall into several fans.
  bool merge_by_vertex = false;
};

/// Zips the (k-1)-powers of the oriented cycles along their arc pairs.
/// Occurrences are identified through zipped arc endpoints (union-find), and
/// by G-vertex as well under merge_by_vertex.
/// Throws Unsupported for k outside {2, 3}, PreconditionFailed when an arc
/// lacks exactly one partner, InvalidInput on a same-direction pair when
/// opposite pairs are required.
MarkedGraph zip(const Graph& g, const OrientedCycleSet& oac, int k, const ZipOptions& options = {});

/// (g-1) copies of every edge of the (k-1)-th distance power of G. Throws
/// PreconditionFailed unless G has an orientation assignment and
/// g == 2(k-1).
Graph kappa2_reference(const Graph& g, int k, int girth);

/// If every G-vertex is the image of exactly one vertex of y, y as a
/// multigraph on V(G).
std::optional<Graph> on_underlying_vertices(const MarkedGraph& y, int source_order);

struct EmbeddingReport {
  bool orientable = false;  // every edge traversed once each way, as given
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  int genus = 0;  // orientable genus, or crosscap number when non-orientable
};

/// Checks that faces cover every edge twice and close up into a surface
/// (the link of each vertex is one cycle). Throws PreconditionFailed
/// otherwise.
EmbeddingReport verify_polygonal_embedding(int vertex_count, std::span<const std::pair<int, int>> edge_ends,
                                           const FaceSet& faces);
EmbeddingReport verify_polygonal_embedding(const MarkedGraph& y, const FaceSet& faces);
/// Simple graph; edge ids follow Graph::edges().
EmbeddingReport verify_polygonal_embedding(const Graph& g, const FaceSet& faces);

/// Faces given as closed vertex walks of a simple graph.
FaceSet faces_from_cycles(const Graph& g, std::span<const std::vector<Vertex>> cycles);
/// Faces given as vertex sets of triangles in y, each traversed in some
/// direction; parallel edges are not allowed between the corners.
FaceSet faces_from_triangles(const MarkedGraph& y, std::span<const std::vector<int>> triangles);

/// Reverses faces so that every edge is traversed once each way, keeping
/// the first face as given; nullopt when impossible.
std::optional<FaceSet> orient_faces(std::span<const std::pair<int, int>> edge_ends, const FaceSet& faces);

/// Petrie walks of an oriented map, each as a dart sequence; one per
/// polygon (the reverse walk is not listed separately). Needs every dart
/// used exactly once.
std::vector<std::vector<Dart>> petrie_walks(std::span<const std::pair<int, int>> edge_ends, const FaceSet& faces);

}  // namespace cdt
