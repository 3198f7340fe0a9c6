#include "cdt/oac.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cdt/automorphism.hpp"
#include "cdt/error.hpp"

namespace cdt {

std::vector<Vertex> OrientedCycleSet::traversal(std::size_t i) const {
  return reversed[i] ? cycles[i].reversed() : cycles[i].vertices();
}

std::vector<std::vector<Vertex>> OrientedCycleSet::traversals() const {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) out.push_back(traversal(i));
  return out;
}

OrientedCycleSet OrientedCycleSet::from_traversals(std::span<const std::vector<Vertex>> traversals) {
  std::vector<std::pair<CanonicalCycle, bool>> items;
  for (const auto& t : traversals) {
    auto c = CanonicalCycle::from(t);
    // Same direction as canonical iff t[i] -> t[i+1] is a forward step.
    const bool forward = t.size() < 3 || c.direction_of(std::span<const Vertex>(t).first(2)) > 0;
    items.emplace_back(std::move(c), !forward);
  }
  std::sort(items.begin(), items.end());
  OrientedCycleSet out;
  for (auto& [c, rev] : items) {
    if (!out.cycles.empty() && out.cycles.back() == c)
      throw InvalidInput("cycle listed twice: " + to_string(c));
    out.cycles.push_back(std::move(c));
    out.reversed.push_back(rev);
  }
  return out;
}

ConstraintGraph build_constraint_graph(const Graph& g, std::span<const CanonicalCycle> cycles, int k) {
  ConstraintGraph cg;
  cg.cycles.assign(cycles.begin(), cycles.end());
  cg.k = k;
  if (cycles.empty()) return cg;
  if (k < 2 || k >= static_cast<int>(cycles.front().length()))
    throw InvalidInput("path order " + std::to_string(k) + " outside 2 <= k < girth");
  const auto incidence = path_incidence(cycles, k);
  for (const auto& p : paths_of_order(g, k)) {
    const auto it = incidence.find(p);
    const std::size_t count = it == incidence.end() ? 0 : it->second.size();
    // A path on the boundary of the cycle family constrains nothing.
    if (count < 2) continue;
    if (count > 2)
      throw PreconditionFailed("path " + to_string(p) + " lies in " + std::to_string(count) +
                               " cycles; expected at most 2");
    ConstraintEdge e;
    e.a = it->second[0];
    e.b = it->second[1];
    e.path = p;
    const int da = cg.cycles[static_cast<std::size_t>(e.a)].direction_of(p.vertices());
    const int db = cg.cycles[static_cast<std::size_t>(e.b)].direction_of(p.vertices());
    // Canonical traversals agreeing on the path force exactly one flip.
    e.parity = da == db;
    cg.edges.push_back(std::move(e));
  }
  return cg;
}

std::vector<int> constraint_component_ids(const ConstraintGraph& cg) {
  const std::size_t n = cg.cycles.size();
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : cg.edges) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (comp[static_cast<std::size_t>(v)] < 0) {
          comp[static_cast<std::size_t>(v)] = next;
          queue.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

int constraint_components(const ConstraintGraph& cg) {
  const auto comp = constraint_component_ids(cg);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

OaSolution solve_oa(const ConstraintGraph& cg) {
  const std::size_t n = cg.cycles.size();
  std::vector<std::vector<int>> incident(n);  // edge indices
  for (std::size_t i = 0; i < cg.edges.size(); ++i) {
    incident[static_cast<std::size_t>(cg.edges[i].a)].push_back(static_cast<int>(i));
    incident[static_cast<std::size_t>(cg.edges[i].b)].push_back(static_cast<int>(i));
  }
  std::vector<int> bit(n, -1), parent_edge(n, -1), parent(n, -1);
  int components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (bit[root] >= 0) continue;
    ++components;
    bit[root] = 0;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int ei : incident[static_cast<std::size_t>(u)]) {
        const auto& e = cg.edges[static_cast<std::size_t>(ei)];
        const int v = e.a == u ? e.b : e.a;
        if (bit[static_cast<std::size_t>(v)] >= 0) continue;
        bit[static_cast<std::size_t>(v)] = bit[static_cast<std::size_t>(u)] ^ static_cast<int>(e.parity);
        parent[static_cast<std::size_t>(v)] = u;
        parent_edge[static_cast<std::size_t>(v)] = ei;
        queue.push_back(v);
      }
    }
  }

  OaSolution out;
  out.components = components;
  for (const auto& e : cg.edges) {
    if ((bit[static_cast<std::size_t>(e.a)] ^ bit[static_cast<std::size_t>(e.b)]) == static_cast<int>(e.parity))
      continue;
    auto up = [&](int x) {
      std::vector<int> chain{x};
      while (parent[static_cast<std::size_t>(chain.back())] >= 0) chain.push_back(parent[static_cast<std::size_t>(chain.back())]);
      return chain;
    };
    auto chain_a = up(e.a);
    auto chain_b = up(e.b);
    const std::set<int> ancestors_a(chain_a.begin(), chain_a.end());
    std::size_t cut = 0;
    while (!ancestors_a.contains(chain_b[cut])) ++cut;
    const int lca = chain_b[cut];
    chain_b.resize(cut);  // b .. child of lca on b's side
    chain_a.resize(static_cast<std::size_t>(std::find(chain_a.begin(), chain_a.end(), lca) - chain_a.begin()) + 1);

    ObstructionCertificate cert;
    std::vector<int> nodes(chain_a.rbegin(), chain_a.rend());  // lca .. a
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
      cert.paths.push_back(cg.edges[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(nodes[i + 1])])].path);
    cert.paths.push_back(e.path);
    for (int node : chain_b) {
      nodes.push_back(node);
      cert.paths.push_back(cg.edges[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(node)])].path);
    }
    for (int node : nodes) cert.cycles.push_back(cg.cycles[static_cast<std::size_t>(node)]);
    out.result = std::move(cert);
    return out;
  }

  OrientedCycleSet oac;
  oac.cycles = cg.cycles;
  for (int b : bit) oac.reversed.push_back(b == 1);
  out.result = std::move(oac);
  return out;
}

bool certificate_is_odd(const ObstructionCertificate& cert) {
  const std::size_t m = cert.cycles.size();
  if (m < 2 || cert.paths.size() != m) throw InvalidInput("certificate must alternate cycles and paths");
  int parity = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& p = cert.paths[i].vertices();
    const int d1 = cert.cycles[i].direction_of(p);
    const int d2 = cert.cycles[(i + 1) % m].direction_of(p);
    if (d1 == 0 || d2 == 0)
      throw InvalidInput("certificate path " + to_string(cert.paths[i]) + " is not shared by its neighbouring cycles");
    parity ^= static_cast<int>(d1 == d2);
  }
  return parity == 1;
}

bool validate_oac(const Graph& g, const OrientedCycleSet& oac, int k) {
  if (oac.reversed.size() != oac.cycles.size()) throw InvalidInput("orientation vector size mismatch");
  const auto expected = girth_cycles(g);
  for (const auto& c : oac.cycles)
    if (!std::binary_search(expected.begin(), expected.end(), c))
      throw InvalidInput("oriented set contains a non-girth cycle " + to_string(c));
  if (oac.cycles != expected) throw InvalidInput("oriented set does not cover every girth cycle exactly once");

  std::vector<std::vector<Vertex>> walks = oac.traversals();
  std::vector<CanonicalCycle> as_cycles;
  for (const auto& w : walks) as_cycles.push_back(CanonicalCycle::from(w));
  const auto incidence = path_incidence(as_cycles, k);
  for (const auto& p : paths_of_order(g, k)) {
    const auto it = incidence.find(p);
    if (it == incidence.end() || it->second.size() != 2) return false;
    // Direction of each oriented traversal along p.
    int dirs[2];
    for (int j = 0; j < 2; ++j) {
      const auto idx = static_cast<std::size_t>(it->second[static_cast<std::size_t>(j)]);
      const int canon = oac.cycles[idx].direction_of(p.vertices());
      dirs[j] = oac.reversed[idx] ? -canon : canon;
    }
    if (dirs[0] == dirs[1]) return false;
  }
  return true;
}

bool equal_up_to_component_flips(const ConstraintGraph& cg, const OrientedCycleSet& reference,
                                 const OrientedCycleSet& other) {
  if (reference.cycles != cg.cycles || other.cycles != cg.cycles) return false;
  const auto comp = constraint_component_ids(cg);
  std::vector<int> flip(static_cast<std::size_t>(constraint_components(cg)), -1);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    const int diff = static_cast<int>(reference.reversed[i] != other.reversed[i]);
    auto& f = flip[static_cast<std::size_t>(comp[i])];
    if (f < 0) f = diff;
    if (f != diff) return false;
  }
  return true;
}

OrientedCycleSet flip_component(const ConstraintGraph& cg, const OrientedCycleSet& oac, int component) {
  const auto comp = constraint_component_ids(cg);
  OrientedCycleSet out = oac;
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (comp[i] == component) out.reversed[i] = !out.reversed[i];
  return out;
}

int classify_kappa(const Graph& g, int girth_value, int k) {
  const auto cycles = cycles_of_length(g, girth_value);
  const auto cg = build_constraint_graph(g, cycles, k);
  if (!solve_oa(cg).balanced()) return 0;
  if (is_planar(g)) return 1;
  if (girth_value == 2 * (k - 1)) return 2;
  if (girth_value > 2 * (k - 1)) return 3;
  throw PreconditionFailed("girth below 2(k-1) is outside the classifier's range");
}

int classify_kappa(const Graph& g) {
  const auto gi = girth(g);
  if (!gi) throw PreconditionFailed("classify_kappa needs a graph with cycles");
  const auto aut = automorphism_group(g);
  return classify_kappa(g, *gi, arc_transitivity(g, aut));
}

}  // namespace cdt
