#include "cdt/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <numeric>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "cdt/error.hpp"

namespace cdt {

std::size_t Graph::distinct_edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.size();
  return total / 2;
}

std::size_t Graph::size() const {
  std::size_t total = distinct_edge_count();
  for (const auto& [pair, m] : multiplicity_) total += static_cast<std::size_t>(m - 1);
  return total;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw InvalidInput("vertex " + std::to_string(v) + " out of range [0, " +
                       std::to_string(order()) + ")");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& row = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(distinct_edge_count());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

int Graph::multiplicity(Vertex u, Vertex v) const {
  if (!adjacent(u, v)) return 0;
  auto it = multiplicity_.find(VertexPair(u, v));
  return it == multiplicity_.end() ? 1 : it->second;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_[static_cast<std::size_t>(v)];
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != order())
    throw InvalidInput("label count does not match vertex count");
  labels_ = std::move(labels);
}

void Graph::set_edge_label(VertexPair e, int parallel_index, std::string text) {
  if (parallel_index < 0 || parallel_index >= multiplicity(e.u, e.v))
    throw InvalidInput("edge label refers to a missing edge");
  edge_labels_[{e, parallel_index}] = std::move(text);
}

void Graph::add_edge(Vertex u, Vertex v, EdgeMode mode) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v)) {
    if (mode == EdgeMode::simple)
      throw InvalidInput("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    auto [it, inserted] = multiplicity_.try_emplace(VertexPair(u, v), 1);
    ++it->second;
    return;
  }
  auto insert_sorted = [](std::vector<Vertex>& row, Vertex x) {
    row.insert(std::upper_bound(row.begin(), row.end(), x), x);
  };
  insert_sorted(adj_[static_cast<std::size_t>(u)], v);
  insert_sorted(adj_[static_cast<std::size_t>(v)], u);
}

bool Graph::operator==(const Graph& other) const {
  if (adj_ != other.adj_) return false;
  for (const auto& e : edges())
    if (multiplicity(e.u, e.v) != other.multiplicity(e.u, e.v)) return false;
  return true;
}

Graph make_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, EdgeMode mode) {
  if (n < 0) throw InvalidInput("negative vertex count");
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v, mode);
  return g;
}

Graph underlying_simple(const Graph& g) {
  Graph out(g.order());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  if (g.has_labels()) out.set_labels(g.labels());
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

Graph line_graph(const Graph& g) {
  const auto es = g.edges();
  Graph out(static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto& a = es[i];
      const auto& b = es[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return out;
}

Graph distance_power(const Graph& g, int k) {
  if (k < 1) throw PreconditionFailed("power exponent must be positive");
  if (!is_connected(g)) throw PreconditionFailed("distance power needs a connected graph");
  if (k > diameter(g))
    throw PreconditionFailed("power exponent " + std::to_string(k) + " exceeds the diameter");
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto dist = distances_from(g, u);
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (dist[static_cast<std::size_t>(v)] == k) out.add_edge(u, v);
  }
  if (g.has_labels()) out.set_labels(g.labels());
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Graph out(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      for (int m = g.multiplicity(vertices[i], vertices[j]); m > 0; --m)
        out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), EdgeMode::multigraph);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidInput("permutation size mismatch");
  Graph out(g.order());
  for (const auto& e : g.edges())
    for (int m = g.multiplicity(e.u, e.v); m > 0; --m)
      out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)],
                   EdgeMode::multigraph);
  return out;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u))
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

std::vector<int> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const auto dist = distances_from(g, s);
    for (Vertex v = 0; v < g.order(); ++v)
      if (dist[static_cast<std::size_t>(v)] >= 0) comp[static_cast<std::size_t>(v)] = next;
    ++next;
  }
  return comp;
}

int component_count(const Graph& g) {
  const auto comp = connected_components(g);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw PreconditionFailed("diameter of a disconnected graph");
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto dist = distances_from(g, s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

std::optional<int> girth(const Graph& g) {
  // Parallel edges form 2-cycles.
  if (g.is_multigraph()) return 2;
  std::optional<int> best;
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        auto& sv = side[static_cast<std::size_t>(v)];
        if (sv < 0) {
          sv = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (sv == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const Graph& g, std::chrono::milliseconds budget)
      : g_(g),
        n_(g.order()),
        deadline_(std::chrono::steady_clock::now() + budget),
        visited_(static_cast<std::size_t>(n_), false),
        avail_(static_cast<std::size_t>(n_), 0) {}

  HamiltonResult run() {
    HamiltonResult result;
    if (n_ < 3 || !is_connected(g_)) {
      result.status = Tristate::no;
      return result;
    }
    for (Vertex v = 0; v < n_; ++v) avail_[static_cast<std::size_t>(v)] = g_.degree(v);
    visited_[0] = true;
    path_.push_back(0);
    const bool found = extend(0);
    result.nodes = nodes_;
    if (found) {
      result.status = Tristate::yes;
      result.cycle = path_;
    } else {
      result.status = timed_out_ ? Tristate::unresolved : Tristate::no;
    }
    return result;
  }

 private:
  bool extend(Vertex end) {
    if (++nodes_ % 4096 == 0 && std::chrono::steady_clock::now() > deadline_) timed_out_ = true;
    if (timed_out_) return false;
    if (static_cast<int>(path_.size()) == n_) return g_.adjacent(end, 0);
    if (!remaining_connected(end)) return false;

    std::vector<Vertex> next;
    for (Vertex w : g_.neighbors(end))
      if (!visited_[static_cast<std::size_t>(w)]) next.push_back(w);
    // Fewest onward options first.
    std::stable_sort(next.begin(), next.end(), [&](Vertex a, Vertex b) {
      return avail_[static_cast<std::size_t>(a)] < avail_[static_cast<std::size_t>(b)];
    });
    for (Vertex w : next) {
      // Moving the end from `end` to w retires `end` as an endpoint.
      bool ok = true;
      std::vector<Vertex> touched;
      if (end != 0) {
        for (Vertex x : g_.neighbors(end)) {
          if (x == w || visited_[static_cast<std::size_t>(x)]) continue;
          touched.push_back(x);
          if (--avail_[static_cast<std::size_t>(x)] < 2) ok = false;
        }
      }
      if (ok) {
        visited_[static_cast<std::size_t>(w)] = true;
        path_.push_back(w);
        if (extend(w)) return true;
        path_.pop_back();
        visited_[static_cast<std::size_t>(w)] = false;
      }
      for (Vertex x : touched) ++avail_[static_cast<std::size_t>(x)];
      if (timed_out_) return false;
    }
    return false;
  }

  // Unvisited vertices must stay reachable from the path end, and the start
  // must remain reachable for the closing edge.
  bool remaining_connected(Vertex end) {
    seen_.assign(static_cast<std::size_t>(n_), false);
    std::vector<Vertex> stack{end};
    seen_[static_cast<std::size_t>(end)] = true;
    int reached = 0;
    bool start_reached = false;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g_.neighbors(u)) {
        if (v == 0 && u != end) start_reached = true;
        if (visited_[static_cast<std::size_t>(v)] || seen_[static_cast<std::size_t>(v)]) continue;
        seen_[static_cast<std::size_t>(v)] = true;
        ++reached;
        stack.push_back(v);
      }
    }
    const int unvisited = n_ - static_cast<int>(path_.size());
    return reached == unvisited && (start_reached || unvisited == 0);
  }

  const Graph& g_;
  int n_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<bool> visited_;
  std::vector<bool> seen_;
  std::vector<int> avail_;
  std::vector<Vertex> path_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

HamiltonResult hamiltonian_cycle(const Graph& g, std::chrono::milliseconds budget) {
  return HamiltonSearch(g, budget).run();
}

GraphMetrics graph_metrics(const Graph& g, std::chrono::milliseconds hamilton_budget) {
  if (!is_connected(g)) throw PreconditionFailed("graph_metrics requires a connected graph");
  GraphMetrics m;
  m.diameter = diameter(g);
  m.girth = girth(g).value_or(0);
  m.bipartite = is_bipartite(g);
  m.hamiltonian = hamiltonian_cycle(g, hamilton_budget).status;
  return m;
}

namespace {

void extend_cliques(const Graph& g, std::vector<Vertex>& current, std::vector<Vertex> candidates,
                    int s, std::vector<std::vector<Vertex>>& out) {
  if (static_cast<int>(current.size()) == s) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (static_cast<int>(current.size() + candidates.size() - i) < s) return;
    const Vertex v = candidates[i];
    std::vector<Vertex> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    current.push_back(v);
    extend_cliques(g, current, std::move(next), s, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, int s) {
  std::vector<std::vector<Vertex>> out;
  if (s < 1) return out;
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<Vertex> current;
  extend_cliques(g, current, std::move(all), s, out);
  return out;
}

int clique_number(const Graph& g) {
  int s = g.order() > 0 ? 1 : 0;
  while (!cliques_of_size(g, s + 1).empty()) ++s;
  return s;
}

namespace {

using Mask = std::uint64_t;

class Dsatur {
 public:
  explicit Dsatur(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(n_), 0) {
    for (const auto& e : g.edges()) {
      adj_[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
      adj_[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
    }
  }

  std::vector<int> solve(int lower_bound) {
    colors_.assign(static_cast<std::size_t>(n_), -1);
    best_ = greedy();
    best_count_ = count(best_);
    lower_ = lower_bound;
    if (best_count_ > lower_) search(0, 0);
    return best_;
  }

 private:
  static int count(const std::vector<int>& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  Mask neighbor_colors(int v) const {
    Mask used = 0;
    for (Mask m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (colors_[static_cast<std::size_t>(w)] >= 0) used |= Mask{1} << colors_[static_cast<std::size_t>(w)];
    }
    return used;
  }

  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < n_; ++v) {
      if (colors_[static_cast<std::size_t>(v)] >= 0) continue;
      const int sat = std::popcount(neighbor_colors(v));
      int deg = 0;
      for (Mask m = adj_[static_cast<std::size_t>(v)]; m; m &= m - 1)
        if (colors_[static_cast<std::size_t>(std::countr_zero(m))] < 0) ++deg;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  std::vector<int> greedy() {
    for (int step = 0; step < n_; ++step) {
      const int v = pick();
      const Mask used = neighbor_colors(v);
      colors_[static_cast<std::size_t>(v)] = std::countr_one(used);
    }
    auto out = colors_;
    colors_.assign(static_cast<std::size_t>(n_), -1);
    return out;
  }

  void search(int colored, int used) {
    if (best_count_ <= lower_) return;
    if (colored == n_) {
      if (used < best_count_) {
        best_ = colors_;
        best_count_ = used;
      }
      return;
    }
    const int v = pick();
    const Mask forbidden = neighbor_colors(v);
    const int limit = std::min(used + 1, best_count_ - 1);
    for (int c = 0; c < limit; ++c) {
      if (forbidden & (Mask{1} << c)) continue;
      colors_[static_cast<std::size_t>(v)] = c;
      search(colored + 1, std::max(used, c + 1));
      colors_[static_cast<std::size_t>(v)] = -1;
      if (best_count_ <= lower_) return;
    }
  }

  int n_;
  std::vector<Mask> adj_;
  std::vector<int> colors_;
  std::vector<int> best_;
  int best_count_ = 0;
  int lower_ = 0;
};

}  // namespace

std::vector<int> optimal_coloring(const Graph& g) {
  if (g.order() > kChromaticLimit)
    throw Unsupported("chromatic number limited to " + std::to_string(kChromaticLimit) + " vertices");
  if (g.order() == 0) return {};
  return Dsatur(g).solve(clique_number(g));
}

int chromatic_number(const Graph& g) {
  const auto c = optimal_coloring(g);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (const auto& e : g.edges())
    if (colors[static_cast<std::size_t>(e.u)] == colors[static_cast<std::size_t>(e.v)]) return false;
  return true;
}

bool is_planar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int index = 0;
  for (const auto& e : g.edges()) {
    auto [edge, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    boost::put(boost::edge_index, bg, edge, index++);
  }
  return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace cdt
