#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cdt {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const VertexPair&) const = default;
};

enum class EdgeMode { simple, multigraph };

/// Finite undirected graph without loops. Parallel edges are modelled by a
/// multiplicity annotation on an otherwise simple adjacency structure.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  int order() const { return static_cast<int>(adj_.size()); }
  /// Number of edges counted with multiplicity.
  std::size_t size() const;
  /// Number of distinct adjacent pairs.
  std::size_t distinct_edge_count() const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Distinct adjacent pairs in lexicographic order.
  std::vector<VertexPair> edges() const;

  bool is_multigraph() const { return !multiplicity_.empty(); }
  int multiplicity(Vertex u, Vertex v) const;
  const std::map<VertexPair, int>& multiplicities() const { return multiplicity_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;
  void set_labels(std::vector<std::string> labels);

  /// Edge labels keyed by (pair, parallel index).
  const std::map<std::pair<VertexPair, int>, std::string>& edge_labels() const { return edge_labels_; }
  void set_edge_label(VertexPair e, int parallel_index, std::string text);

  /// Adds an edge; in simple mode a repeated pair is an error, in multigraph
  /// mode it raises the multiplicity.
  void add_edge(Vertex u, Vertex v, EdgeMode mode = EdgeMode::simple);

  bool operator==(const Graph& other) const;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::map<VertexPair, int> multiplicity_;
  std::map<std::pair<VertexPair, int>, std::string> edge_labels_;
};

/// Builds a graph on n vertices. Throws InvalidInput on out-of-range
/// endpoints, self-loops, or (simple mode) repeated pairs.
Graph make_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges,
                 EdgeMode mode = EdgeMode::simple);

/// The same graph with every parallel class collapsed to a single edge.
Graph underlying_simple(const Graph& g);

Graph complement(const Graph& g);
/// Vertices are the edges of g in edges() order.
Graph line_graph(const Graph& g);
/// Joins vertices at distance exactly k. Throws PreconditionFailed when k
/// exceeds the diameter.
Graph distance_power(const Graph& g, int k);
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
/// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Breadth-first distances from source; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);
bool is_connected(const Graph& g);
/// Component index per vertex, numbered in order of least vertex.
std::vector<int> connected_components(const Graph& g);
int component_count(const Graph& g);
std::optional<int> regular_degree(const Graph& g);

int diameter(const Graph& g);
/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
bool is_bipartite(const Graph& g);

enum class Tristate { no, yes, unresolved };

struct HamiltonResult {
  Tristate status = Tristate::unresolved;
  std::vector<Vertex> cycle;  // populated when status == yes
  std::uint64_t nodes = 0;    // search nodes expanded
};

/// Backtracking Hamiltonian-cycle search. Gives up with `unresolved` when
/// the time budget elapses.
HamiltonResult hamiltonian_cycle(const Graph& g, std::chrono::milliseconds budget);

struct GraphMetrics {
  int diameter = 0;
  int girth = 0;  // 0 for forests
  bool bipartite = false;
  Tristate hamiltonian = Tristate::unresolved;
};

/// Throws PreconditionFailed on a disconnected graph.
GraphMetrics graph_metrics(const Graph& g, std::chrono::milliseconds hamilton_budget);

/// All s-cliques as sorted vertex lists, in lexicographic order.
std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, int s);
int clique_number(const Graph& g);

inline constexpr int kChromaticLimit = 64;
/// Exact chromatic number by DSATUR branch and bound. Throws Unsupported
/// above kChromaticLimit vertices.
int chromatic_number(const Graph& g);
/// A proper colouring with chromatic_number(g) colours.
std::vector<int> optimal_coloring(const Graph& g);
bool is_proper_coloring(const Graph& g, std::span<const int> colors);

bool is_planar(const Graph& g);

}  // namespace cdt
