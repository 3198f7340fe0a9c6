#include "cdt/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "cdt/error.hpp"

namespace cdt {

CanonicalCycle CanonicalCycle::from(std::span<const Vertex> traversal) {
  CanonicalCycle c;
  const std::size_t n = traversal.size();
  if (n == 0) return c;
  const auto start = static_cast<std::size_t>(std::min_element(traversal.begin(), traversal.end()) - traversal.begin());
  const Vertex next = traversal[(start + 1) % n];
  const Vertex prev = traversal[(start + n - 1) % n];
  c.vertices_.reserve(n);
  if (n < 3 || next <= prev) {
    for (std::size_t i = 0; i < n; ++i) c.vertices_.push_back(traversal[(start + i) % n]);
  } else {
    for (std::size_t i = 0; i < n; ++i) c.vertices_.push_back(traversal[(start + n - i) % n]);
  }
  return c;
}

std::vector<Vertex> CanonicalCycle::reversed() const {
  std::vector<Vertex> out;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(vertices_[(n - i) % n]);
  return out;
}

int CanonicalCycle::direction_of(std::span<const Vertex> path) const {
  const std::size_t n = vertices_.size();
  if (path.empty() || path.size() > n) return 0;
  const auto it = std::find(vertices_.begin(), vertices_.end(), path.front());
  if (it == vertices_.end()) return 0;
  const auto pos = static_cast<std::size_t>(it - vertices_.begin());
  if (path.size() == 1) return 1;
  for (int dir : {1, -1}) {
    bool ok = true;
    for (std::size_t i = 1; i < path.size() && ok; ++i) {
      const std::size_t idx = dir > 0 ? (pos + i) % n : (pos + n * i - i) % n;
      ok = vertices_[idx] == path[i];
    }
    if (ok) return dir;
  }
  return 0;
}

bool CanonicalCycle::contains_vertex(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

CanonicalPath CanonicalPath::from(std::span<const Vertex> walk) {
  CanonicalPath p;
  p.vertices_.assign(walk.begin(), walk.end());
  if (!p.vertices_.empty() && p.vertices_.front() > p.vertices_.back())
    std::reverse(p.vertices_.begin(), p.vertices_.end());
  return p;
}

namespace {

std::string join(const std::vector<Vertex>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

std::string to_string(const CanonicalCycle& c) { return join(c.vertices()); }
std::string to_string(const CanonicalPath& p) { return join(p.vertices()); }

bool is_path_of(const Graph& g, std::span<const Vertex> walk) {
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (walk[i] < 0 || walk[i] >= g.order() || !seen.insert(walk[i]).second) return false;
    if (i > 0 && !g.adjacent(walk[i - 1], walk[i])) return false;
  }
  return !walk.empty();
}

bool is_cycle_of(const Graph& g, std::span<const Vertex> traversal) {
  return traversal.size() >= 3 && is_path_of(g, traversal) && g.adjacent(traversal.back(), traversal.front());
}

namespace {

// Cycles whose least vertex is `root`, each reported once in canonical form.
void cycles_from_root(const Graph& g, Vertex root, int length, std::vector<CanonicalCycle>& out) {
  // Distances to root inside the subgraph of vertices >= root bound how
  // soon the walk can close.
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n, -1);
  dist[static_cast<std::size_t>(root)] = 0;
  std::deque<Vertex> queue{root};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.neighbors(u))
      if (v > root && dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  std::vector<Vertex> path{root};
  std::vector<bool> on_path(n, false);
  on_path[static_cast<std::size_t>(root)] = true;
  auto dfs = [&](auto&& self) -> void {
    const Vertex last = path.back();
    const int have = static_cast<int>(path.size());
    if (have == length) {
      if (g.adjacent(last, root) && path[1] < path.back()) {
        CanonicalCycle c = CanonicalCycle::from(path);
        out.push_back(std::move(c));
      }
      return;
    }
    for (Vertex w : g.neighbors(last)) {
      const auto wi = static_cast<std::size_t>(w);
      if (w <= root || on_path[wi] || dist[wi] < 0) continue;
      // After adding w there are length - have - 1 vertices to add, then the
      // closing edge.
      if (dist[wi] > length - have) continue;
      on_path[wi] = true;
      path.push_back(w);
      self(self);
      path.pop_back();
      on_path[wi] = false;
    }
  };
  if (length >= 3) dfs(dfs);
}

void paths_from(const Graph& g, Vertex start, int m, std::vector<CanonicalPath>& out) {
  std::vector<Vertex> walk{start};
  std::vector<bool> on(static_cast<std::size_t>(g.order()), false);
  on[static_cast<std::size_t>(start)] = true;
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == m) {
      if (walk.front() < walk.back()) out.push_back(CanonicalPath::from(walk));
      return;
    }
    for (Vertex w : g.neighbors(walk.back())) {
      if (on[static_cast<std::size_t>(w)]) continue;
      on[static_cast<std::size_t>(w)] = true;
      walk.push_back(w);
      self(self);
      walk.pop_back();
      on[static_cast<std::size_t>(w)] = false;
    }
  };
  dfs(dfs);
}

void subpaths_of(const CanonicalCycle& c, int m, std::vector<CanonicalPath>& out) {
  const std::size_t n = c.length();
  std::vector<Vertex> seg(static_cast<std::size_t>(m));
  for (std::size_t p = 0; p < n; ++p) {
    for (int i = 0; i < m; ++i) seg[static_cast<std::size_t>(i)] = c[p + static_cast<std::size_t>(i)];
    out.push_back(CanonicalPath::from(seg));
  }
}

template <typename T>
std::vector<T> flatten_sorted(std::vector<std::vector<T>>& parts) {
  std::vector<T> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<CanonicalCycle> cycles_of_length_serial(const Graph& g, int length) {
  std::vector<CanonicalCycle> out;
  for (Vertex r = 0; r < g.order(); ++r) cycles_from_root(g, r, length, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalCycle> cycles_of_length(const Graph& g, int length) {
  std::vector<std::vector<CanonicalCycle>> per_root(static_cast<std::size_t>(g.order()));
#pragma omp parallel for schedule(dynamic)
  for (Vertex r = 0; r < g.order(); ++r) cycles_from_root(g, r, length, per_root[static_cast<std::size_t>(r)]);
  return flatten_sorted(per_root);
}

std::vector<CanonicalCycle> girth_cycles(const Graph& g) {
  const auto gi = girth(g);
  return gi ? cycles_of_length(g, *gi) : std::vector<CanonicalCycle>{};
}

std::vector<CanonicalCycle> girth_cycles_serial(const Graph& g) {
  const auto gi = girth(g);
  return gi ? cycles_of_length_serial(g, *gi) : std::vector<CanonicalCycle>{};
}

std::vector<CanonicalPath> paths_of_order_serial(const Graph& g, int m) {
  if (m < 2) throw InvalidInput("path order must be at least 2");
  std::vector<CanonicalPath> out;
  for (Vertex s = 0; s < g.order(); ++s) paths_from(g, s, m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CanonicalPath> paths_of_order(const Graph& g, int m) {
  if (m < 2) throw InvalidInput("path order must be at least 2");
  std::vector<std::vector<CanonicalPath>> per_start(static_cast<std::size_t>(g.order()));
#pragma omp parallel for schedule(dynamic)
  for (Vertex s = 0; s < g.order(); ++s) paths_from(g, s, m, per_start[static_cast<std::size_t>(s)]);
  return flatten_sorted(per_start);
}

PathIncidence path_incidence_serial(std::span<const CanonicalCycle> cycles, int m) {
  PathIncidence out;
  std::vector<CanonicalPath> subs;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    subs.clear();
    subpaths_of(cycles[i], m, subs);
    for (auto& p : subs) out[std::move(p)].push_back(static_cast<int>(i));
  }
  return out;
}

PathIncidence path_incidence(std::span<const CanonicalCycle> cycles, int m) {
  std::vector<std::vector<CanonicalPath>> per_cycle(cycles.size());
  const auto count = static_cast<std::ptrdiff_t>(cycles.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    subpaths_of(cycles[static_cast<std::size_t>(i)], m, per_cycle[static_cast<std::size_t>(i)]);
  // Merge in cycle order so every index list stays ascending.
  PathIncidence out;
  for (std::size_t i = 0; i < per_cycle.size(); ++i)
    for (auto& p : per_cycle[i]) out[std::move(p)].push_back(static_cast<int>(i));
  return out;
}

std::vector<CanonicalCycle> cycles_through_path(const Graph& g, std::span<const CanonicalCycle> cycles,
                                                const CanonicalPath& path) {
  if (!is_path_of(g, path.vertices())) throw InvalidInput("not a path of the graph: " + to_string(path));
  std::vector<CanonicalCycle> out;
  for (const auto& c : cycles)
    if (c.direction_of(path.vertices()) != 0) out.push_back(c);
  return out;
}

std::vector<int> SfUhReport::mu() const {
  std::vector<int> out;
  for (const auto& l : levels) out.push_back(l.constant ? l.min_multiplicity : -1);
  return out;
}

bool SfUhReport::holds() const {
  if (!mu0_is_two) return false;
  for (const auto& l : levels)
    if (!l.constant || !l.pairwise_exact) return false;
  return true;
}

namespace {

std::set<VertexPair> edge_set(const CanonicalCycle& c) {
  std::set<VertexPair> out;
  for (std::size_t i = 0; i < c.length(); ++i) out.emplace(c[i], c[i + 1]);
  return out;
}

}  // namespace

SfUhReport check_sf_uh(const Graph& g, int girth_value, int k) {
  SfUhReport report;
  report.girth = girth_value;
  report.k = k;
  const auto cycles = cycles_of_length(g, girth_value);
  report.cycle_count = cycles.size();
  std::vector<std::set<VertexPair>> cycle_edges;
  for (const auto& c : cycles) cycle_edges.push_back(edge_set(c));

  report.fits_power_i = report.fits_power_i_plus_1 = true;
  for (int i = 0; i <= k - 2; ++i) {
    FasteningLevel level;
    level.i = i;
    level.path_order = k - i;
    const auto paths = paths_of_order(g, level.path_order);
    const auto incidence = path_incidence(cycles, level.path_order);
    level.paths = paths.size();
    level.min_multiplicity = std::numeric_limits<int>::max();
    level.max_multiplicity = 0;
    level.pairwise_exact = true;
    for (const auto& p : paths) {
      const auto it = incidence.find(p);
      const std::vector<int> empty;
      const auto& through = it == incidence.end() ? empty : it->second;
      const int mult = static_cast<int>(through.size());
      level.min_multiplicity = std::min(level.min_multiplicity, mult);
      level.max_multiplicity = std::max(level.max_multiplicity, mult);

      std::set<Vertex> pv(p.vertices().begin(), p.vertices().end());
      std::set<VertexPair> pe;
      for (std::size_t j = 0; j + 1 < p.order(); ++j) pe.emplace(p.vertices()[j], p.vertices()[j + 1]);
      for (std::size_t a = 0; a < through.size() && level.pairwise_exact; ++a)
        for (std::size_t b = a + 1; b < through.size() && level.pairwise_exact; ++b) {
          const auto& ca = cycles[static_cast<std::size_t>(through[a])].vertices();
          const auto& cb = cycles[static_cast<std::size_t>(through[b])].vertices();
          std::set<Vertex> shared;
          for (Vertex v : ca)
            if (std::find(cb.begin(), cb.end(), v) != cb.end()) shared.insert(v);
          std::set<VertexPair> shared_edges;
          for (const auto& e : cycle_edges[static_cast<std::size_t>(through[a])])
            if (cycle_edges[static_cast<std::size_t>(through[b])].contains(e)) shared_edges.insert(e);
          level.pairwise_exact = shared == pv && shared_edges == pe;
        }
    }
    if (paths.empty()) level.min_multiplicity = 0;
    level.constant = level.min_multiplicity == level.max_multiplicity;
    const int mu = level.min_multiplicity;
    report.fits_power_i = report.fits_power_i && level.constant && mu == (1 << i);
    report.fits_power_i_plus_1 = report.fits_power_i_plus_1 && level.constant && mu == (2 << i);
    report.levels.push_back(level);
  }
  report.mu0_is_two = !report.levels.empty() && report.levels.front().constant &&
                      report.levels.front().min_multiplicity == 2;
  return report;
}

CyclePathUhReport check_cycle_path_uh_report(const Graph& g, const GroupDescription& aut, int k) {
  CyclePathUhReport r;
  const auto cycles = girth_cycles(g);
  if (cycles.empty()) return r;
  const auto& c0 = cycles.front();
  const auto orb = set_orbit(aut.generators, c0.vertices());
  r.cycles_transitive = orb.size() == cycles.size();

  const std::size_t len = c0.length();
  std::vector<std::pair<Vertex, Vertex>> rotation, reflection;
  for (std::size_t i = 0; i < len; ++i) {
    rotation.emplace_back(c0[i], c0[i + 1]);
    reflection.emplace_back(c0[i], c0[len - i]);
  }
  r.cycle_dihedral = extend_to_automorphism(g, rotation).has_value() &&
                     extend_to_automorphism(g, reflection).has_value();

  const auto paths = paths_of_order(g, k);
  if (!paths.empty()) {
    const auto& p0 = paths.front().vertices();
    std::set<CanonicalPath> reached;
    for (const auto& t : tuple_orbit(aut.generators, p0)) reached.insert(CanonicalPath::from(t));
    r.paths_transitive = reached.size() == paths.size();
    std::vector<std::pair<Vertex, Vertex>> flip;
    for (std::size_t i = 0; i < p0.size(); ++i) flip.emplace_back(p0[i], p0[p0.size() - 1 - i]);
    r.path_flip = extend_to_automorphism(g, flip).has_value();
  }
  return r;
}

bool check_cycle_path_uh(const Graph& g, const GroupDescription& aut) {
  const auto degree = regular_degree(g);
  const int k = degree && *degree >= 3 ? arc_transitivity(g, aut) : 2;
  return check_cycle_path_uh_report(g, aut, k).holds();
}

}  // namespace cdt
