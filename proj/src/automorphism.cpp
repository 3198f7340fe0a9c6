#include "cdt/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cdt/error.hpp"

namespace cdt {

namespace {

using Coloring = std::vector<int>;

/// Joint individualisation-refinement search for colour-preserving
/// isomorphisms between two graphs. Colours are renumbered from a shared
/// signature table so that cell i of one side corresponds to cell i of the
/// other.
class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b, std::span<const int> colors_a, std::span<const int> colors_b)
      : a_(a), b_(b) {
    init_a_ = initial(a, colors_a);
    init_b_ = initial(b, colors_b);
  }

  /// Refined colouring of both sides after individualising each prescribed
  /// pair in turn; nullopt when the sides become incompatible.
  std::optional<std::pair<Coloring, Coloring>> prepare(
      std::span<const std::pair<Vertex, Vertex>> prescribed) const {
    if (a_.order() != b_.order()) return std::nullopt;
    Coloring ca = init_a_, cb = init_b_;
    if (!refine(ca, cb)) return std::nullopt;
    for (const auto& [x, y] : prescribed) {
      if (x < 0 || y < 0 || x >= a_.order() || y >= b_.order()) return std::nullopt;
      if (ca[static_cast<std::size_t>(x)] != cb[static_cast<std::size_t>(y)]) return std::nullopt;
      individualize(ca, cb, x, y);
      if (!refine(ca, cb)) return std::nullopt;
    }
    return std::make_pair(std::move(ca), std::move(cb));
  }

  std::optional<Permutation> search(std::span<const std::pair<Vertex, Vertex>> prescribed) const {
    auto start = prepare(prescribed);
    if (!start) return std::nullopt;
    Permutation out;
    if (descend(std::move(start->first), std::move(start->second), out)) return out;
    return std::nullopt;
  }

  /// Least-indexed smallest non-singleton cell, or -1 when discrete.
  static int target_cell(const Coloring& c) {
    std::map<int, int> sizes;
    for (int x : c) ++sizes[x];
    int best = -1, best_size = 0;
    for (const auto& [color, size] : sizes)
      if (size > 1 && (best < 0 || size < best_size)) {
        best = color;
        best_size = size;
      }
    return best;
  }

  static void individualize(Coloring& ca, Coloring& cb, Vertex x, Vertex y) {
    const int fresh = std::max(*std::max_element(ca.begin(), ca.end()),
                               *std::max_element(cb.begin(), cb.end())) + 1;
    ca[static_cast<std::size_t>(x)] = fresh;
    cb[static_cast<std::size_t>(y)] = fresh;
  }

 private:
  static Coloring initial(const Graph& g, std::span<const int> colors) {
    if (colors.empty()) return Coloring(static_cast<std::size_t>(g.order()), 0);
    if (static_cast<int>(colors.size()) != g.order()) throw InvalidInput("colour vector size mismatch");
    return Coloring(colors.begin(), colors.end());
  }

  static std::vector<int> signature(const Graph& g, const Coloring& c, Vertex v) {
    std::vector<int> sig{c[static_cast<std::size_t>(v)]};
    std::vector<std::pair<int, int>> nb;
    for (Vertex w : g.neighbors(v)) nb.emplace_back(c[static_cast<std::size_t>(w)], g.multiplicity(v, w));
    std::sort(nb.begin(), nb.end());
    for (const auto& [col, mult] : nb) {
      sig.push_back(col);
      sig.push_back(mult);
    }
    return sig;
  }

  bool refine(Coloring& ca, Coloring& cb) const {
    std::size_t classes = 0;
    while (true) {
      std::vector<std::vector<int>> sa, sb;
      std::map<std::vector<int>, int> table;
      for (Vertex v = 0; v < a_.order(); ++v) table[sa.emplace_back(signature(a_, ca, v))] = 0;
      for (Vertex v = 0; v < b_.order(); ++v) table[sb.emplace_back(signature(b_, cb, v))] = 0;
      int next = 0;
      for (auto& [sig, id] : table) id = next++;
      std::vector<int> count_a(table.size(), 0), count_b(table.size(), 0);
      for (std::size_t v = 0; v < sa.size(); ++v) ++count_a[static_cast<std::size_t>(ca[v] = table[sa[v]])];
      for (std::size_t v = 0; v < sb.size(); ++v) ++count_b[static_cast<std::size_t>(cb[v] = table[sb[v]])];
      if (count_a != count_b) return false;
      if (table.size() == classes) return true;
      classes = table.size();
    }
  }

  bool descend(Coloring ca, Coloring cb, Permutation& out) const {
    const int cell = target_cell(ca);
    if (cell < 0) {
      std::vector<Vertex> by_color_b(ca.size());
      for (std::size_t v = 0; v < cb.size(); ++v) by_color_b[static_cast<std::size_t>(cb[v])] = static_cast<Vertex>(v);
      Permutation map(ca.size());
      for (std::size_t v = 0; v < ca.size(); ++v) map[v] = by_color_b[static_cast<std::size_t>(ca[v])];
      if (!is_isomorphism(a_, b_, map)) return false;
      out = std::move(map);
      return true;
    }
    Vertex x = -1;
    for (std::size_t v = 0; v < ca.size(); ++v)
      if (ca[v] == cell) {
        x = static_cast<Vertex>(v);
        break;
      }
    for (std::size_t y = 0; y < cb.size(); ++y) {
      if (cb[y] != cell) continue;
      Coloring na = ca, nb = cb;
      individualize(na, nb, x, static_cast<Vertex>(y));
      if (refine(na, nb) && descend(std::move(na), std::move(nb), out)) return true;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  Coloring init_a_;
  Coloring init_b_;
};

}  // namespace

bool is_isomorphism(const Graph& a, const Graph& b, std::span<const Vertex> mapping) {
  if (a.order() != b.order() || static_cast<int>(mapping.size()) != a.order()) return false;
  std::vector<bool> hit(mapping.size(), false);
  for (Vertex v : mapping) {
    if (v < 0 || v >= b.order() || hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  if (a.size() != b.size() || a.distinct_edge_count() != b.distinct_edge_count()) return false;
  for (const auto& e : a.edges())
    if (b.multiplicity(mapping[static_cast<std::size_t>(e.u)], mapping[static_cast<std::size_t>(e.v)]) !=
        a.multiplicity(e.u, e.v))
      return false;
  return true;
}

bool is_automorphism(const Graph& g, std::span<const Vertex> perm) { return is_isomorphism(g, g, perm); }

std::optional<IsoMapping> find_isomorphism(const Graph& a, const Graph& b, std::span<const int> colors_a,
                                           std::span<const int> colors_b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (colors_a.empty() != colors_b.empty()) throw InvalidInput("colourings must be given for both graphs");
  Matcher m(a, b, colors_a, colors_b);
  auto perm = m.search({});
  if (!perm) return std::nullopt;
  if (!colors_a.empty())
    for (std::size_t v = 0; v < perm->size(); ++v)
      if (colors_a[v] != colors_b[static_cast<std::size_t>((*perm)[v])]) return std::nullopt;
  return IsoMapping{std::move(*perm)};
}

std::optional<IsoMapping> are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b); }

std::optional<Permutation> extend_to_automorphism(const Graph& g,
                                                  std::span<const std::pair<Vertex, Vertex>> prescribed,
                                                  std::span<const int> colors) {
  Matcher m(g, g, colors, colors);
  return m.search(prescribed);
}

Permutation compose(std::span<const Vertex> first, std::span<const Vertex> then) {
  Permutation out(first.size());
  for (std::size_t v = 0; v < first.size(); ++v) out[v] = then[static_cast<std::size_t>(first[v])];
  return out;
}

Permutation inverse(std::span<const Vertex> perm) {
  Permutation out(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) out[static_cast<std::size_t>(perm[v])] = static_cast<Vertex>(v);
  return out;
}

std::vector<Vertex> orbit(std::span<const Permutation> gens, Vertex point) {
  std::set<Vertex> seen{point};
  std::deque<Vertex> queue{point};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const auto& p : gens) {
      const Vertex y = p[static_cast<std::size_t>(x)];
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Vertex>> tuple_orbit(std::span<const Permutation> gens, const std::vector<Vertex>& tuple) {
  std::set<std::vector<Vertex>> seen{tuple};
  std::deque<std::vector<Vertex>> queue{tuple};
  while (!queue.empty()) {
    const auto t = queue.front();
    queue.pop_front();
    for (const auto& p : gens) {
      std::vector<Vertex> image(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = p[static_cast<std::size_t>(t[i])];
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Vertex>> set_orbit(std::span<const Permutation> gens, std::vector<Vertex> set) {
  std::sort(set.begin(), set.end());
  std::set<std::vector<Vertex>> seen{set};
  std::deque<std::vector<Vertex>> queue{set};
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop_front();
    for (const auto& p : gens) {
      std::vector<Vertex> image(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) image[i] = p[static_cast<std::size_t>(s[i])];
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return {seen.begin(), seen.end()};
}

GroupDescription automorphism_group(const Graph& g, std::span<const int> colors) {
  GroupDescription out;
  if (g.order() == 0) return out;
  Matcher m(g, g, colors, colors);
  std::vector<std::pair<Vertex, Vertex>> prefix;
  while (true) {
    auto current = m.prepare(prefix);
    const int cell = Matcher::target_cell(current->first);
    if (cell < 0) break;
    std::vector<Vertex> candidates;
    for (std::size_t v = 0; v < current->first.size(); ++v)
      if (current->first[v] == cell) candidates.push_back(static_cast<Vertex>(v));
    const Vertex b = candidates.front();

    // Generators found at this level fix the prefix pointwise, so the orbit
    // they generate lies inside the stabiliser orbit of b.
    std::vector<Permutation> level;
    std::set<Vertex> reached{b};
    for (Vertex c : candidates) {
      if (reached.contains(c)) continue;
      auto pairs = prefix;
      pairs.emplace_back(b, c);
      if (auto perm = m.search(pairs)) {
        level.push_back(*perm);
        out.generators.push_back(std::move(*perm));
        const auto orb = orbit(level, b);
        reached.insert(orb.begin(), orb.end());
      }
    }
    out.base.push_back(b);
    out.orbit_lengths.push_back(reached.size());
    out.order *= reached.size();
    prefix.emplace_back(b, b);
  }
  return out;
}

std::vector<std::vector<Vertex>> s_arcs(const Graph& g, int s) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> walk;
  auto grow = [&](auto&& self) -> void {
    if (static_cast<int>(walk.size()) == s + 1) {
      out.push_back(walk);
      return;
    }
    const Vertex last = walk.back();
    for (Vertex w : g.neighbors(last)) {
      if (walk.size() >= 2 && w == walk[walk.size() - 2]) continue;
      walk.push_back(w);
      self(self);
      walk.pop_back();
    }
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    walk.assign(1, v);
    grow(grow);
  }
  return out;
}

int arc_transitivity(const Graph& g, const GroupDescription& aut) {
  const auto degree = regular_degree(g);
  if (!degree || *degree < 3 || !is_connected(g))
    throw PreconditionFailed("arc transitivity is defined here for connected regular graphs of degree >= 3");
  if (static_cast<int>(orbit(aut.generators, 0).size()) != g.order())
    throw PreconditionFailed("automorphism group is not vertex-transitive");
  int s = 0;
  while (true) {
    const auto arcs = s_arcs(g, s + 1);
    if (arcs.size() > aut.order) break;
    if (tuple_orbit(aut.generators, arcs.front()).size() != arcs.size()) break;
    ++s;
  }
  return s;
}

}  // namespace cdt
