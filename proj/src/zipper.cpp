#include "cdt/zipper.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cdt/cycles.hpp"
#include "cdt/error.hpp"

namespace cdt {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::size_t dart_index(const Dart& d) { return 2 * static_cast<std::size_t>(d.edge) + (d.forward ? 0 : 1); }
Dart reverse(const Dart& d) { return {d.edge, !d.forward}; }

int tail_of(std::span<const std::pair<int, int>> ends, const Dart& d) {
  const auto& e = ends[static_cast<std::size_t>(d.edge)];
  return d.forward ? e.first : e.second;
}
int head_of(std::span<const std::pair<int, int>> ends, const Dart& d) {
  const auto& e = ends[static_cast<std::size_t>(d.edge)];
  return d.forward ? e.second : e.first;
}

void check_closed(std::span<const std::pair<int, int>> ends, const FaceSet& faces) {
  for (const auto& f : faces.faces) {
    if (f.empty()) throw InvalidInput("empty face");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].edge < 0 || static_cast<std::size_t>(f[i].edge) >= ends.size()) throw InvalidInput("face names an unknown edge");
      if (head_of(ends, f[i]) != tail_of(ends, f[(i + 1) % f.size()])) throw InvalidInput("face is not a closed walk");
    }
  }
}

// Face permutation on darts: phi[d] is the dart after d in its face.
std::vector<int> face_permutation(std::size_t edge_count, const FaceSet& faces) {
  std::vector<int> phi(2 * edge_count, -1);
  for (const auto& f : faces.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto& slot = phi[dart_index(f[i])];
      if (slot >= 0) throw PreconditionFailed("a dart is used by two faces");
      slot = static_cast<int>(dart_index(f[(i + 1) % f.size()]));
    }
  return phi;
}

Dart dart_at(int index) { return {index / 2, index % 2 == 0}; }

}  // namespace

MarkedCyclePower cycle_power(std::span<const Vertex> oriented, int k, int source) {
  if (k != 2 && k != 3) throw Unsupported("cycle powers are implemented for k = 2 and k = 3 only");
  const int g = static_cast<int>(oriented.size());
  if (g < 3) throw InvalidInput("a cycle needs at least three vertices");
  MarkedCyclePower p;
  p.source = source;
  p.cycle.assign(oriented.begin(), oriented.end());
  p.k = k;
  const int step = k - 1;
  for (int i = 0; i < g; ++i)
    p.arcs.push_back({i, (i + step) % g, k == 3 ? oriented[static_cast<std::size_t>((i + 1) % g)] : -1});
  std::vector<bool> seen(static_cast<std::size_t>(g), false);
  for (int s = 0; s < g; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> orbit;
    for (int i = s; !seen[static_cast<std::size_t>(i)]; i = (i + step) % g) {
      seen[static_cast<std::size_t>(i)] = true;
      orbit.push_back(i);
    }
    p.orbits.push_back(std::move(orbit));
  }
  return p;
}

std::vector<std::pair<int, int>> MarkedGraph::edge_ends() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

Graph MarkedGraph::graph() const {
  Graph h(order());
  std::map<VertexPair, int> seen;
  for (const auto& e : edges) {
    if (e.u == e.v) throw PreconditionFailed("zipped graph has a loop");
    h.add_edge(e.u, e.v, EdgeMode::multigraph);
  }
  for (const auto& e : edges) {
    const VertexPair key{std::min(e.u, e.v), std::max(e.u, e.v)};
    const int index = seen[key]++;
    if (e.label >= 0)
      h.set_edge_label(key, index,
                       source_labels.empty() ? std::to_string(e.label) : source_labels[static_cast<std::size_t>(e.label)]);
  }
  if (!source_labels.empty()) {
    std::vector<std::string> names;
    for (Vertex x : underlying) names.push_back(source_labels[static_cast<std::size_t>(x)]);
    h.set_labels(std::move(names));
  }
  return h;
}

MarkedGraph zip(const Graph& g, const OrientedCycleSet& oac, int k, const ZipOptions& options) {
  if (k != 2 && k != 3) throw Unsupported("zipping is implemented for k = 2 and k = 3 only");
  const auto traversals = oac.traversals();
  std::vector<MarkedCyclePower> powers;
  std::vector<std::size_t> first_occurrence;
  std::size_t total = 0;
  for (std::size_t i = 0; i < traversals.size(); ++i) {
    if (!is_cycle_of(g, traversals[i])) throw InvalidInput("oriented set lists a non-cycle");
    powers.push_back(cycle_power(traversals[i], k, static_cast<int>(i)));
    first_occurrence.push_back(total);
    total += traversals[i].size();
  }
  auto occ_id = [&](int cycle, int pos) { return first_occurrence[static_cast<std::size_t>(cycle)] + static_cast<std::size_t>(pos); };
  auto vertex_at = [&](int cycle, int pos) { return traversals[static_cast<std::size_t>(cycle)][static_cast<std::size_t>(pos)]; };

  // Arcs keyed by the path of G they stand for.
  struct ArcRef {
    int cycle;
    int tail;
    int head;
    bool forward;  // tail is the path's first vertex
  };
  std::map<CanonicalPath, std::vector<ArcRef>> by_path;
  for (const auto& p : powers) {
    const int len = static_cast<int>(p.cycle.size());
    for (const auto& a : p.arcs) {
      std::vector<Vertex> walk;
      for (int j = 0; j < k; ++j) walk.push_back(p.cycle[static_cast<std::size_t>((a.tail + j) % len)]);
      auto path = CanonicalPath::from(walk);
      const bool forward = path.vertices().front() == walk.front();
      by_path[std::move(path)].push_back({p.source, a.tail, a.head, forward});
    }
  }

  MarkedGraph y;
  y.k = k;
  UnionFind uf(total);
  for (const auto& [path, arcs] : by_path) {
    if (arcs.size() != 2)
      throw PreconditionFailed("arc over " + to_string(path) + " has " + std::to_string(arcs.size() - 1) +
                               " partners; expected exactly one");
    const auto& a = arcs[0];
    const auto& b = arcs[1];
    if (a.forward == b.forward) {
      if (options.require_opposite)
        throw InvalidInput("arcs over " + to_string(path) + " run the same way; the orientation is not an assignment");
      ++y.same_direction_pairs;
    }
    // Zip endpoint to endpoint over the same vertex of G.
    const std::size_t a_first = occ_id(a.cycle, a.forward ? a.tail : a.head);
    const std::size_t a_last = occ_id(a.cycle, a.forward ? a.head : a.tail);
    const std::size_t b_first = occ_id(b.cycle, b.forward ? b.tail : b.head);
    const std::size_t b_last = occ_id(b.cycle, b.forward ? b.head : b.tail);
    uf.unite(a_first, b_first);
    uf.unite(a_last, b_last);
  }
  if (options.merge_by_vertex) {
    std::map<Vertex, std::size_t> first_seen;
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (int p = 0; p < static_cast<int>(powers[c].cycle.size()); ++p) {
        const auto [it, fresh] = first_seen.emplace(vertex_at(static_cast<int>(c), p), occ_id(static_cast<int>(c), p));
        if (!fresh) uf.unite(it->second, occ_id(static_cast<int>(c), p));
      }
  }

  // Vertices numbered by least occurrence.
  std::vector<int> class_of(total, -1);
  std::vector<int> root_class(total, -1);
  for (std::size_t c = 0; c < powers.size(); ++c)
    for (int p = 0; p < static_cast<int>(powers[c].cycle.size()); ++p) {
      const std::size_t id = occ_id(static_cast<int>(c), p);
      const std::size_t root = uf.find(id);
      if (root_class[root] < 0) {
        root_class[root] = y.order();
        y.underlying.push_back(vertex_at(static_cast<int>(c), p));
        y.classes.emplace_back();
      }
      const int cls = root_class[root];
      if (y.underlying[static_cast<std::size_t>(cls)] != vertex_at(static_cast<int>(c), p))
        throw InvalidInput("zipping merged occurrences of different vertices");
      class_of[id] = cls;
      y.classes[static_cast<std::size_t>(cls)].push_back({static_cast<int>(c), p});
    }

  // Edge per path; remember which edge each arc became.
  std::map<std::pair<int, int>, Dart> arc_dart;  // (cycle, tail position) -> dart
  for (const auto& [path, arcs] : by_path) {
    const auto& a = arcs[0];
    const auto& b = arcs[1];
    MarkedEdge e;
    e.u = class_of[occ_id(a.cycle, a.forward ? a.tail : a.head)];
    e.v = class_of[occ_id(a.cycle, a.forward ? a.head : a.tail)];
    e.label = k == 3 ? path.vertices()[1] : -1;
    e.path = path.vertices();
    e.arc_a = {a.cycle, a.tail};
    e.arc_b = {b.cycle, b.tail};
    const int id = static_cast<int>(y.edges.size());
    arc_dart[{a.cycle, a.tail}] = {id, a.forward};
    arc_dart[{b.cycle, b.tail}] = {id, b.forward};
    y.edges.push_back(std::move(e));
  }
  for (const auto& p : powers)
    for (const auto& orbit : p.orbits) {
      std::vector<Dart> face;
      for (int pos : orbit) face.push_back(arc_dart.at({p.source, pos}));
      y.faces.faces.push_back(std::move(face));
      y.face_source.push_back(p.source);
    }
  if (g.has_labels()) y.source_labels = g.labels();
  return y;
}

Graph kappa2_reference(const Graph& g, int k, int girth_value) {
  if (girth_value != 2 * (k - 1)) throw PreconditionFailed("the multiplicity formula needs g == 2(k-1)");
  const auto cg = build_constraint_graph(g, cycles_of_length(g, girth_value), k);
  if (!solve_oa(cg).balanced()) throw PreconditionFailed("graph has no orientation assignment");
  const auto power = distance_power(g, k - 1);
  Graph out(g.order());
  for (const auto& e : power.edges())
    for (int i = 0; i < girth_value - 1; ++i) out.add_edge(e.u, e.v, EdgeMode::multigraph);
  if (g.has_labels()) out.set_labels(g.labels());
  return out;
}

std::optional<Graph> on_underlying_vertices(const MarkedGraph& y, int source_order) {
  std::vector<int> seen(static_cast<std::size_t>(source_order), 0);
  for (Vertex x : y.underlying) ++seen[static_cast<std::size_t>(x)];
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return std::nullopt;
  Graph out(source_order);
  for (const auto& e : y.edges)
    out.add_edge(y.underlying[static_cast<std::size_t>(e.u)], y.underlying[static_cast<std::size_t>(e.v)],
                 EdgeMode::multigraph);
  if (!y.source_labels.empty()) out.set_labels(y.source_labels);
  return out;
}

EmbeddingReport verify_polygonal_embedding(int vertex_count, std::span<const std::pair<int, int>> ends,
                                           const FaceSet& faces) {
  check_closed(ends, faces);
  std::vector<int> forward(ends.size(), 0), backward(ends.size(), 0);
  for (const auto& f : faces.faces)
    for (const auto& d : f) ++(d.forward ? forward : backward)[static_cast<std::size_t>(d.edge)];
  EmbeddingReport r;
  r.orientable = true;
  for (std::size_t e = 0; e < ends.size(); ++e) {
    if (forward[e] + backward[e] != 2)
      throw PreconditionFailed("edge " + std::to_string(e) + " lies on " + std::to_string(forward[e] + backward[e]) +
                               " face sides; expected 2");
    if (forward[e] != 1) r.orientable = false;
  }

  // Link of each vertex: nodes are edge ends at the vertex, joined by the
  // corners of the faces.
  std::vector<std::vector<std::pair<int, int>>> link(static_cast<std::size_t>(vertex_count));
  for (const auto& f : faces.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& in = f[i];
      const auto& out = f[(i + 1) % f.size()];
      const int v = head_of(ends, in);
      // Edge end = 2*edge + (0 at the first endpoint, 1 at the second).
      const int in_end = 2 * in.edge + (in.forward ? 1 : 0);
      const int out_end = 2 * out.edge + (out.forward ? 0 : 1);
      link[static_cast<std::size_t>(v)].emplace_back(in_end, out_end);
    }
  for (int v = 0; v < vertex_count; ++v) {
    const auto& corners = link[static_cast<std::size_t>(v)];
    if (corners.empty()) throw PreconditionFailed("vertex " + std::to_string(v) + " lies on no face");
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : corners) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (const auto& [node, nbrs] : adj)
      if (nbrs.size() != 2) throw PreconditionFailed("vertex " + std::to_string(v) + " has a non-surface link");
    std::set<int> reached{adj.begin()->first};
    std::vector<int> stack{adj.begin()->first};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (reached.insert(y).second) stack.push_back(y);
    }
    if (reached.size() != adj.size())
      throw PreconditionFailed("vertex " + std::to_string(v) + " has a disconnected link (pinched surface)");
  }

  r.vertices = vertex_count;
  r.edges = static_cast<int>(ends.size());
  r.faces = static_cast<int>(faces.size());
  r.euler_characteristic = r.vertices - r.edges + r.faces;
  if (r.orientable) {
    if ((2 - r.euler_characteristic) % 2 != 0) throw PreconditionFailed("odd Euler defect for an orientable surface");
    r.genus = (2 - r.euler_characteristic) / 2;
  } else {
    r.genus = 2 - r.euler_characteristic;
  }
  return r;
}

EmbeddingReport verify_polygonal_embedding(const MarkedGraph& y, const FaceSet& faces) {
  const auto ends = y.edge_ends();
  return verify_polygonal_embedding(y.order(), ends, faces);
}

EmbeddingReport verify_polygonal_embedding(const Graph& g, const FaceSet& faces) {
  std::vector<std::pair<int, int>> ends;
  for (const auto& e : g.edges()) ends.emplace_back(e.u, e.v);
  return verify_polygonal_embedding(g.order(), ends, faces);
}

FaceSet faces_from_cycles(const Graph& g, std::span<const std::vector<Vertex>> cycles) {
  const auto edges = g.edges();
  FaceSet out;
  for (const auto& c : cycles) {
    std::vector<Dart> face;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex a = c[i];
      const Vertex b = c[(i + 1) % c.size()];
      const VertexPair key{std::min(a, b), std::max(a, b)};
      const auto it = std::lower_bound(edges.begin(), edges.end(), key);
      if (it == edges.end() || *it != key) throw InvalidInput("face walk uses a non-edge");
      face.push_back({static_cast<int>(it - edges.begin()), a < b});
    }
    out.faces.push_back(std::move(face));
  }
  return out;
}

FaceSet faces_from_triangles(const MarkedGraph& y, std::span<const std::vector<int>> triangles) {
  std::map<std::pair<int, int>, std::vector<int>> edge_of;
  for (std::size_t i = 0; i < y.edges.size(); ++i) {
    const auto& e = y.edges[i];
    edge_of[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(static_cast<int>(i));
  }
  FaceSet out;
  for (const auto& t : triangles) {
    if (t.size() != 3) throw InvalidInput("triangle needs three vertices");
    std::vector<Dart> face;
    for (std::size_t i = 0; i < 3; ++i) {
      const int a = t[i];
      const int b = t[(i + 1) % 3];
      const auto it = edge_of.find({std::min(a, b), std::max(a, b)});
      if (it == edge_of.end()) throw InvalidInput("triangle side is not an edge");
      if (it->second.size() != 1) throw InvalidInput("triangle side is a parallel class");
      const int id = it->second.front();
      face.push_back({id, y.edges[static_cast<std::size_t>(id)].u == a});
    }
    out.faces.push_back(std::move(face));
  }
  return out;
}

std::optional<FaceSet> orient_faces(std::span<const std::pair<int, int>> ends, const FaceSet& faces) {
  check_closed(ends, faces);
  // Faces meeting along an edge, with whether they currently agree on it.
  std::vector<std::vector<std::pair<std::size_t, bool>>> sides(ends.size());  // (face, forward)
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const auto& d : faces.faces[f]) sides[static_cast<std::size_t>(d.edge)].emplace_back(f, d.forward);
  for (const auto& side : sides)
    if (side.size() == 2 && side[0] == side[1]) return std::nullopt;  // one face, same way twice
  std::vector<int> flip(faces.size(), -1);
  for (std::size_t s = 0; s < faces.size(); ++s) {
    if (flip[s] >= 0) continue;
    flip[s] = 0;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      for (const auto& d : faces.faces[f]) {
        const auto& side = sides[static_cast<std::size_t>(d.edge)];
        for (const auto& [other, fwd] : side) {
          if (other == f && fwd == d.forward) continue;
          // After flips the two traversals must disagree.
          const int want = flip[f] ^ static_cast<int>(fwd == d.forward);
          if (other == f) {
            if (want != flip[f]) return std::nullopt;
            continue;
          }
          if (flip[other] < 0) {
            flip[other] = want;
            stack.push_back(other);
          } else if (flip[other] != want) {
            return std::nullopt;
          }
        }
      }
    }
  }
  FaceSet out;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    auto face = faces.faces[f];
    if (flip[f] == 1) {
      std::reverse(face.begin(), face.end());
      for (auto& d : face) d = reverse(d);
    }
    out.faces.push_back(std::move(face));
  }
  return out;
}

std::vector<std::vector<Dart>> petrie_walks(std::span<const std::pair<int, int>> ends, const FaceSet& faces) {
  check_closed(ends, faces);
  const auto phi = face_permutation(ends.size(), faces);
  if (std::find(phi.begin(), phi.end(), -1) != phi.end()) throw PreconditionFailed("some dart lies on no face");
  std::vector<int> phi_inv(phi.size());
  for (std::size_t d = 0; d < phi.size(); ++d) phi_inv[static_cast<std::size_t>(phi[d])] = static_cast<int>(d);
  auto theta = [](int d) { return d ^ 1; };

  // Alternate: next = phi(d), then next = theta(phi^-1(theta(d))).
  std::vector<std::vector<bool>> used(2, std::vector<bool>(phi.size(), false));
  std::set<std::vector<int>> seen_edge_cycles;
  std::vector<std::vector<Dart>> out;
  for (int parity = 0; parity < 2; ++parity)
    for (int start = 0; start < static_cast<int>(phi.size()); ++start) {
      if (used[static_cast<std::size_t>(parity)][static_cast<std::size_t>(start)]) continue;
      std::vector<int> walk;
      int d = start;
      int p = parity;
      while (!used[static_cast<std::size_t>(p)][static_cast<std::size_t>(d)]) {
        used[static_cast<std::size_t>(p)][static_cast<std::size_t>(d)] = true;
        walk.push_back(d);
        d = p == 0 ? phi[static_cast<std::size_t>(d)] : theta(phi_inv[static_cast<std::size_t>(theta(d))]);
        p ^= 1;
      }
      // The same polygon is also met backwards; keep one copy.
      std::vector<int> edges;
      for (int x : walk) edges.push_back(x / 2);
      std::vector<int> best = edges;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < edges.size(); ++r) {
          std::rotate(edges.begin(), edges.begin() + 1, edges.end());
          best = std::min(best, edges);
        }
        std::reverse(edges.begin(), edges.end());
      }
      if (!seen_edge_cycles.insert(best).second) continue;
      std::vector<Dart> darts;
      for (int x : walk) darts.push_back(dart_at(x));
      out.push_back(std::move(darts));
    }
  return out;
}

std::vector<MarkedGraph> connected_parts(const MarkedGraph& y) {
  UnionFind uf(static_cast<std::size_t>(y.order()));
  for (const auto& e : y.edges) uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v));
  std::map<std::size_t, int> part_of_root;
  std::vector<int> part(static_cast<std::size_t>(y.order()));
  std::vector<int> local(static_cast<std::size_t>(y.order()));
  std::vector<MarkedGraph> parts;
  for (int v = 0; v < y.order(); ++v) {
    const auto root = uf.find(static_cast<std::size_t>(v));
    auto [it, fresh] = part_of_root.try_emplace(root, static_cast<int>(parts.size()));
    if (fresh) {
      parts.emplace_back();
      parts.back().k = y.k;
      parts.back().source_labels = y.source_labels;
      parts.back().same_direction_pairs = y.same_direction_pairs;
    }
    auto& p = parts[static_cast<std::size_t>(it->second)];
    part[static_cast<std::size_t>(v)] = it->second;
    local[static_cast<std::size_t>(v)] = p.order();
    p.underlying.push_back(y.underlying[static_cast<std::size_t>(v)]);
    p.classes.push_back(y.classes[static_cast<std::size_t>(v)]);
  }
  std::vector<int> local_edge(y.edges.size());
  for (std::size_t i = 0; i < y.edges.size(); ++i) {
    auto e = y.edges[i];
    auto& p = parts[static_cast<std::size_t>(part[static_cast<std::size_t>(e.u)])];
    e.u = local[static_cast<std::size_t>(e.u)];
    e.v = local[static_cast<std::size_t>(e.v)];
    local_edge[i] = static_cast<int>(p.edges.size());
    p.edges.push_back(std::move(e));
  }
  for (std::size_t f = 0; f < y.faces.size(); ++f) {
    const auto& face = y.faces.faces[f];
    const auto& first = y.edges[static_cast<std::size_t>(face.front().edge)];
    auto& p = parts[static_cast<std::size_t>(part[static_cast<std::size_t>(first.u)])];
    std::vector<Dart> renamed;
    for (const auto& d : face) renamed.push_back({local_edge[static_cast<std::size_t>(d.edge)], d.forward});
    p.faces.faces.push_back(std::move(renamed));
    p.face_source.push_back(y.face_source[f]);
  }
  return parts;
}

}  // namespace cdt
