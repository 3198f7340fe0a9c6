#include "cdt/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cdt/error.hpp"

namespace cdt {

namespace {

bool shares_at_most_one(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.size() <= 1;
}

bool disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.distinct_edge_count() == n * (n - 1) / 2;
}

// Every vertex subset of size s inducing a graph isomorphic to tmpl.
std::vector<std::vector<Vertex>> induced_copies(const Graph& g, const Graph& tmpl) {
  const int s = tmpl.order();
  if (is_complete(tmpl) && s >= 3) return cliques_of_size(g, s);
  if (is_complete(tmpl) && s == 2) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& e : g.edges()) out.push_back({e.u, e.v});
    return out;
  }
  double combos = 1;
  for (int i = 0; i < s; ++i) combos = combos * (g.order() - i) / (i + 1);
  if (combos > 2e6) throw Unsupported("induced copy census too large for brute force");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> pick;
  std::function<void(Vertex)> rec = [&](Vertex from) {
    if (static_cast<int>(pick.size()) == s) {
      if (are_isomorphic(induced_subgraph(g, pick), tmpl)) out.push_back(pick);
      return;
    }
    for (Vertex v = from; v < g.order(); ++v) {
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

// Groups members into classes of pairwise disjoint sets; empty if the
// disjointness relation is not an equivalence with classes of equal size.
std::vector<std::vector<int>> parallel_classes(const CopyFamily& fam) {
  const std::size_t m = fam.size();
  std::vector<int> cls(m, -1);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < m; ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = static_cast<int>(out.size());
    out.push_back({static_cast<int>(i)});
    for (std::size_t j = i + 1; j < m; ++j)
      if (cls[j] < 0 && disjoint(fam.members[i], fam.members[j])) {
        cls[j] = cls[i];
        out.back().push_back(static_cast<int>(j));
      }
  }
  for (const auto& c : out) {
    if (c.size() != out.front().size()) return {};
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (!disjoint(fam.members[static_cast<std::size_t>(c[a])], fam.members[static_cast<std::size_t>(c[b])]))
          return {};
  }
  // Members in different classes must meet.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (cls[i] != cls[j] && disjoint(fam.members[i], fam.members[j])) return {};
  return out;
}

constexpr std::array<std::array<int, 3>, 7> kFanoLines = {{
    {0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2},
}};

bool is_line(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  for (auto l : kFanoLines) {
    std::sort(l.begin(), l.end());
    if (l == t) return true;
  }
  return false;
}

// Third point on the line through distinct a and b.
int third_point(int a, int b) {
  for (const auto& l : kFanoLines) {
    const bool has_a = std::find(l.begin(), l.end(), a) != l.end();
    const bool has_b = std::find(l.begin(), l.end(), b) != l.end();
    if (has_a && has_b)
      for (int p : l)
        if (p != a && p != b) return p;
  }
  return -1;
}

}  // namespace

CopyFamily make_family(std::string name, std::vector<std::vector<Vertex>> members) {
  for (auto& m : members) std::sort(m.begin(), m.end());
  std::sort(members.begin(), members.end());
  return {std::move(name), std::move(members)};
}

PappusTriangles classify_pappus_triangles(const MarkedGraph& y) {
  std::vector<std::vector<Vertex>> zipped;
  std::vector<std::set<int>> face_edges;
  for (const auto& f : y.faces.faces) {
    if (f.size() != 3) throw PreconditionFailed("zipped faces must be triangles");
    std::vector<Vertex> t;
    std::set<int> es;
    for (const auto& d : f) {
      const auto& e = y.edges[static_cast<std::size_t>(d.edge)];
      t.push_back(d.forward ? e.u : e.v);
      es.insert(d.edge);
    }
    std::sort(t.begin(), t.end());
    zipped.push_back(t);
    face_edges.push_back(std::move(es));
  }
  const std::size_t m = zipped.size();
  std::vector<int> color(m, -1);
  for (std::size_t s = 0; s < m; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t b = 0; b < m; ++b) {
        if (b == a) continue;
        const bool share = std::any_of(face_edges[a].begin(), face_edges[a].end(),
                                       [&](int e) { return face_edges[b].contains(e); });
        if (!share) continue;
        if (color[b] < 0) {
          color[b] = 1 - color[a];
          queue.push_back(b);
        } else if (color[b] == color[a]) {
          throw PreconditionFailed("zipped triangles are not 2-colourable by shared edges");
        }
      }
    }
  }
  // H1 holds the least zipped triangle.
  const auto least = std::min_element(zipped.begin(), zipped.end()) - zipped.begin();
  const int h1_color = color[static_cast<std::size_t>(least)];
  std::vector<std::vector<Vertex>> h1, h2;
  for (std::size_t i = 0; i < m; ++i) (color[i] == h1_color ? h1 : h2).push_back(zipped[i]);

  const auto simple = underlying_simple(y.graph());
  const std::set<std::vector<Vertex>> zipped_set(zipped.begin(), zipped.end());
  std::vector<std::vector<Vertex>> h0;
  for (const auto& t : cliques_of_size(simple, 3))
    if (!zipped_set.contains(t)) h0.push_back(t);

  PappusTriangles out;
  out.h0 = make_family("H0", std::move(h0));
  out.h1 = make_family("H1", std::move(h1));
  out.h2 = make_family("H2", std::move(h2));
  if (out.h0.size() != 9 || out.h1.size() != 9 || out.h2.size() != 9)
    throw PreconditionFailed("expected three families of 9 triangles, found " + std::to_string(out.h0.size()) + ", " +
                             std::to_string(out.h1.size()) + ", " + std::to_string(out.h2.size()));

  std::map<std::pair<int, int>, std::set<Vertex>> labels;
  for (const auto& e : y.edges) labels[{std::min(e.u, e.v), std::max(e.u, e.v)}].insert(e.label);
  out.h0_common_label = std::all_of(out.h0.members.begin(), out.h0.members.end(), [&](const auto& t) {
    const auto& a = labels[{t[0], t[1]}];
    const auto& b = labels[{t[1], t[2]}];
    const auto& c = labels[{t[0], t[2]}];
    return a.size() == 1 && a == b && b == c;
  });
  out.parallel_classes = {parallel_classes(out.h0), parallel_classes(out.h1), parallel_classes(out.h2)};
  return out;
}

IncidenceConfiguration configuration_from_family(int point_count, const CopyFamily& family,
                                                 std::vector<std::string> point_names) {
  return IncidenceConfiguration::make(point_count, family.members, std::move(point_names));
}

bool FastenedReport::holds() const {
  return !families.empty() &&
         std::all_of(families.begin(), families.end(), [](const FamilyConditions& f) { return f.holds(); });
}

FastenedReport check_k2_fastened(const Graph& g, const std::vector<CopyFamily>& families) {
  return check_k2_fastened(g, automorphism_group(g), families);
}

FastenedReport check_k2_fastened(const Graph& g, const GroupDescription& aut, const std::vector<CopyFamily>& families) {
  if (families.empty()) throw PreconditionFailed("no copy families given");
  const auto edges = g.edges();
  std::vector<Graph> templates;
  for (const auto& fam : families)
    templates.push_back(fam.members.empty() ? Graph() : induced_subgraph(g, fam.members.front()));

  FastenedReport report;
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    const auto& fam = families[fi];
    const auto& tmpl = templates[fi];
    FamilyConditions c;
    c.name = fam.name;
    c.copies = fam.size();
    if (fam.members.empty()) {
      report.families.push_back(std::move(c));
      continue;
    }

    // (b) and (e): induced copies, each edge of g in exactly one.
    bool induced = true;
    std::vector<int> cover(edges.size(), 0);
    for (const auto& member : fam.members) {
      if (!are_isomorphic(induced_subgraph(g, member), tmpl)) induced = false;
      for (std::size_t i = 0; i < member.size(); ++i)
        for (std::size_t j = i + 1; j < member.size(); ++j) {
          const VertexPair key{member[i], member[j]};
          const auto it = std::lower_bound(edges.begin(), edges.end(), key);
          if (it != edges.end() && *it == key) ++cover[static_cast<std::size_t>(it - edges.begin())];
        }
    }
    c.edge_unique = std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; });
    c.decomposes = induced && c.edge_unique;

    // (c)
    std::vector<int> per_vertex(static_cast<std::size_t>(g.order()), 0);
    for (const auto& member : fam.members)
      for (Vertex v : member) ++per_vertex[static_cast<std::size_t>(v)];
    if (std::adjacent_find(per_vertex.begin(), per_vertex.end(), std::not_equal_to<>()) == per_vertex.end())
      c.copies_per_vertex = per_vertex.front();
    bool pairwise = true;
    for (std::size_t i = 0; i < fam.size() && pairwise; ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j)
        if (!shares_at_most_one(fam.members[i], fam.members[j])) {
          pairwise = false;
          break;
        }
    c.meets_in_vertices = c.copies_per_vertex.has_value() && pairwise;

    // (a): one orbit, and the stabiliser of a member induces Aut(template).
    const auto orbit = set_orbit(aut.generators, fam.members.front());
    const std::set<std::vector<Vertex>> orbit_set(orbit.begin(), orbit.end());
    bool transitive = std::all_of(fam.members.begin(), fam.members.end(),
                                  [&](const auto& m) { return orbit_set.contains(m); });
    bool full_stabiliser = true;
    const auto& first = fam.members.front();
    for (const auto& gen : automorphism_group(tmpl).generators) {
      std::vector<std::pair<Vertex, Vertex>> prescribed;
      for (std::size_t i = 0; i < first.size(); ++i)
        prescribed.emplace_back(first[i], first[static_cast<std::size_t>(gen[i])]);
      if (!extend_to_automorphism(g, prescribed)) {
        full_stabiliser = false;
        break;
      }
    }
    c.uniform = transitive && full_stabiliser;

    // (d): induced copies not inside a larger member of another family are
    // exactly the members of the families sharing this template.
    std::set<std::vector<Vertex>> expected;
    for (std::size_t fj = 0; fj < families.size(); ++fj)
      if (templates[fj].order() == tmpl.order() && are_isomorphic(templates[fj], tmpl))
        expected.insert(families[fj].members.begin(), families[fj].members.end());
    std::set<std::vector<Vertex>> found;
    for (const auto& copy : induced_copies(g, tmpl)) {
      bool inside_larger = false;
      for (std::size_t fj = 0; fj < families.size() && !inside_larger; ++fj) {
        if (fj == fi || templates[fj].order() <= tmpl.order()) continue;
        for (const auto& big : families[fj].members)
          if (std::includes(big.begin(), big.end(), copy.begin(), copy.end())) {
            inside_larger = true;
            break;
          }
      }
      if (!inside_larger) found.insert(copy);
    }
    c.census = found == expected;
    report.families.push_back(std::move(c));
  }
  return report;
}

bool LknReport::holds() const {
  if (conditions.families.size() != 2 || !conditions.holds()) return false;
  const auto& s = conditions.families[0];
  const auto& t = conditions.families[1];
  return static_cast<int>(s.copies) == n && static_cast<int>(t.copies) == n * (n - 1) * (n - 2) / 6 &&
         s.copies_per_vertex == 2 && t.copies_per_vertex == n - 2;
}

LknReport check_lkn_theorem(int n) {
  if (n < 4 || n > 8) throw InvalidInput("check_lkn_theorem supports 4 <= n <= 8");
  Graph kn(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) kn.add_edge(a, b);
  LknReport r;
  r.n = n;
  r.line_graph = line_graph(kn);
  const auto pairs = kn.edges();
  auto index_of = [&](int a, int b) {
    const VertexPair key{std::min(a, b), std::max(a, b)};
    return static_cast<Vertex>(std::lower_bound(pairs.begin(), pairs.end(), key) - pairs.begin());
  };
  std::vector<std::vector<Vertex>> stars, triangles;
  for (int a = 0; a < n; ++a) {
    std::vector<Vertex> star;
    for (int b = 0; b < n; ++b)
      if (b != a) star.push_back(index_of(a, b));
    stars.push_back(std::move(star));
  }
  // The edges ab, bc, ca of each triangle of K_n: three colours a, b, c.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) triangles.push_back({index_of(a, b), index_of(b, c), index_of(a, c)});
  r.stars = make_family("K" + std::to_string(n - 1), std::move(stars));
  r.triangles = make_family("K3", std::move(triangles));
  r.conditions = check_k2_fastened(r.line_graph, {r.stars, r.triangles});
  return r;
}

Graph dual_cycle_graph(const MarkedGraph& y, const FaceSet& faces) {
  std::vector<std::vector<int>> faces_on_edge(y.edges.size());
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const auto& d : faces.faces[f]) faces_on_edge[static_cast<std::size_t>(d.edge)].push_back(static_cast<int>(f));
  std::set<std::pair<int, int>> adj;
  for (auto& list : faces_on_edge) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) adj.emplace(list[i], list[j]);
  }
  Graph out(static_cast<int>(faces.size()));
  for (const auto& [a, b] : adj) out.add_edge(a, b);
  return out;
}

bool check_fano_coloring(const Graph& g, const FanoColoring& colors) {
  const auto edges = g.edges();
  if (colors.vertex.size() != static_cast<std::size_t>(g.order()) || colors.edge.size() != edges.size()) return false;
  auto valid = [](int c) { return c >= 1 && c <= 7; };
  if (!std::all_of(colors.vertex.begin(), colors.vertex.end(), valid) ||
      !std::all_of(colors.edge.begin(), colors.edge.end(), valid))
    return false;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int ce = colors.edge[i] - 1;
    incident[static_cast<std::size_t>(edges[i].u)].push_back(ce);
    incident[static_cast<std::size_t>(edges[i].v)].push_back(ce);
    if (!is_line(colors.vertex[static_cast<std::size_t>(edges[i].u)] - 1, ce,
                 colors.vertex[static_cast<std::size_t>(edges[i].v)] - 1))
      return false;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& in = incident[static_cast<std::size_t>(v)];
    if (in.size() != 3 || !is_line(in[0], in[1], in[2])) return false;
    const int cv = colors.vertex[static_cast<std::size_t>(v)] - 1;
    std::vector<int> rest;
    for (int p = 0; p < 7; ++p)
      if (p != cv && std::find(in.begin(), in.end(), p) == in.end()) rest.push_back(p);
    if (rest.size() != 3 || is_line(rest[0], rest[1], rest[2])) return false;
  }
  return true;
}

std::optional<FanoColoring> find_fano_coloring(const Graph& g) {
  if (regular_degree(g) != 3) return std::nullopt;
  const int n = g.order();
  // Edge colours are forced by the end colours, so search vertex colours in
  // breadth-first order and test a vertex once its closed neighbourhood is
  // coloured.
  std::vector<Vertex> order;
  std::vector<bool> queued(static_cast<std::size_t>(n), false);
  for (Vertex s = 0; s < n; ++s) {
    if (queued[static_cast<std::size_t>(s)]) continue;
    std::deque<Vertex> q{s};
    queued[static_cast<std::size_t>(s)] = true;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop_front();
      order.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!queued[static_cast<std::size_t>(w)]) {
          queued[static_cast<std::size_t>(w)] = true;
          q.push_back(w);
        }
    }
  }
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  auto vertex_ok = [&](Vertex v) {
    const int cv = color[static_cast<std::size_t>(v)];
    if (cv < 0) return true;
    std::vector<int> ec;
    for (Vertex w : g.neighbors(v)) {
      const int cw = color[static_cast<std::size_t>(w)];
      if (cw < 0) return true;
      ec.push_back(third_point(cv, cw));
    }
    return is_line(ec[0], ec[1], ec[2]);
  };
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) return true;
    const Vertex v = order[i];
    for (int c = 0; c < 7; ++c) {
      if (i == 0 && c != 0) break;  // collineations act transitively on points
      bool ok = true;
      for (Vertex w : g.neighbors(v))
        if (color[static_cast<std::size_t>(w)] == c) ok = false;
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      ok = vertex_ok(v);
      for (Vertex w : g.neighbors(v))
        if (ok && !vertex_ok(w)) ok = false;
      if (ok && rec(i + 1)) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  FanoColoring out;
  for (int c : color) out.vertex.push_back(c + 1);
  for (const auto& e : g.edges())
    out.edge.push_back(third_point(color[static_cast<std::size_t>(e.u)], color[static_cast<std::size_t>(e.v)]) + 1);
  if (!check_fano_coloring(g, out)) return std::nullopt;
  return out;
}

std::vector<std::array<int, 7>> fano_collineations() {
  std::array<int, 7> perm;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::array<int, 7>> out;
  do {
    if (std::all_of(kFanoLines.begin(), kFanoLines.end(),
                    [&](const auto& l) { return is_line(perm[static_cast<std::size_t>(l[0])], perm[static_cast<std::size_t>(l[1])], perm[static_cast<std::size_t>(l[2])]); }))
      out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FanoColoring apply_collineation(const FanoColoring& colors, const std::array<int, 7>& perm) {
  FanoColoring out = colors;
  for (auto& c : out.vertex) c = perm[static_cast<std::size_t>(c - 1)] + 1;
  for (auto& c : out.edge) c = perm[static_cast<std::size_t>(c - 1)] + 1;
  return out;
}

bool KleinReport::holds() const {
  return vertices == 56 && edges == 84 && faces == 24 && cubic && connected && girth == 7 && embedding.orientable &&
         embedding.genus == 3 && automorphisms == 336 && !petrie_lengths.empty() &&
         std::all_of(petrie_lengths.begin(), petrie_lengths.end(), [](int l) { return l == 8; });
}

KleinReport verify_klein_identification(const MarkedGraph& y) {
  KleinReport r;
  r.vertices = y.order();
  r.edges = static_cast<int>(y.edges.size());
  r.faces = static_cast<int>(y.faces.size());
  const auto g = underlying_simple(y.graph());
  r.cubic = regular_degree(g) == 3 && g.distinct_edge_count() == y.edges.size();
  r.connected = is_connected(g);
  r.girth = girth(g).value_or(0);
  r.embedding = verify_polygonal_embedding(y, y.faces);
  r.automorphisms = automorphism_group(g).order;
  const auto ends = y.edge_ends();
  for (const auto& walk : petrie_walks(ends, y.faces)) r.petrie_lengths.push_back(static_cast<int>(walk.size()));
  std::sort(r.petrie_lengths.begin(), r.petrie_lengths.end());
  return r;
}

}  // namespace cdt
