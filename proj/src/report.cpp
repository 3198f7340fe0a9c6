#include "cdt/report.hpp"

#include <algorithm>
#include <sstream>

#include "cdt/error.hpp"

namespace cdt {

namespace {

std::string name_of(const Graph& g, Vertex v) { return g.has_labels() ? g.label(v) : std::to_string(v); }

Json walk_json(const Graph& g, const std::vector<Vertex>& walk) {
  Json out = Json::array();
  for (Vertex v : walk) out.push_back(name_of(g, v));
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (g.has_labels()) j["labels"] = g.labels();
  if (g.is_multigraph()) {
    Json mult = Json::array();
    for (const auto& [pair, m] : g.multiplicities())
      if (m > 1) mult.push_back({pair.u, pair.v, m});
    j["multiplicity"] = std::move(mult);
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw InvalidInput("negative vertex count");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("multiplicity"))
      for (const auto& m : j.at("multiplicity")) {
        if (!m.is_array() || m.size() != 3) throw InvalidInput("multiplicity entries are [u, v, m]");
        const int u = m[0].get<int>(), v = m[1].get<int>(), count = m[2].get<int>();
        if (!g.adjacent(u, v)) throw InvalidInput("multiplicity given for a non-edge");
        for (int i = 1; i < count; ++i) g.add_edge(u, v, EdgeMode::multigraph);
      }
    if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
    return g;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("graph JSON: ") + ex.what());
  }
}

Json oac_to_json(const OrientedCycleSet& oac, const Graph& g) {
  Json cycles = Json::array();
  Json named = Json::array();
  for (std::size_t i = 0; i < oac.size(); ++i) {
    const auto t = oac.traversal(i);
    cycles.push_back(t);
    if (g.has_labels()) named.push_back(walk_json(g, t));
  }
  Json j;
  j["cycles"] = std::move(cycles);
  if (g.has_labels()) j["named"] = std::move(named);
  return j;
}

OrientedCycleSet oac_from_json(const Json& j) {
  try {
    std::vector<std::vector<Vertex>> walks;
    for (const auto& c : j.at("cycles")) walks.push_back(c.get<std::vector<Vertex>>());
    return OrientedCycleSet::from_traversals(walks);
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("OAC JSON: ") + ex.what());
  }
}

Json certificate_to_json(const ObstructionCertificate& cert, const Graph& g) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < cert.cycles.size(); ++i) {
    Json step;
    step["cycle"] = walk_json(g, cert.cycles[i].vertices());
    step["path"] = walk_json(g, cert.paths[i].vertices());
    steps.push_back(std::move(step));
  }
  Json j;
  j["walk"] = std::move(steps);
  j["odd"] = certificate_is_odd(cert);
  return j;
}

Json marked_graph_to_json(const MarkedGraph& y) {
  Json j = graph_to_json(y.graph());
  j["k"] = y.k;
  j["underlying"] = y.underlying;
  Json edges = Json::array();
  for (const auto& e : y.edges) {
    Json je;
    je["ends"] = {e.u, e.v};
    je["label"] = e.label;
    je["path"] = e.path;
    je["arcs"] = {{e.arc_a.cycle, e.arc_a.position}, {e.arc_b.cycle, e.arc_b.position}};
    edges.push_back(std::move(je));
  }
  j["marked_edges"] = std::move(edges);
  Json faces = Json::array();
  for (std::size_t f = 0; f < y.faces.size(); ++f) {
    Json darts = Json::array();
    for (const auto& d : y.faces.faces[f]) darts.push_back(d.forward ? d.edge : ~d.edge);
    faces.push_back({{"source", y.face_source[f]}, {"darts", std::move(darts)}});
  }
  j["faces"] = std::move(faces);
  j["components"] = component_count(y.graph());
  if (y.same_direction_pairs > 0) j["same_direction_pairs"] = y.same_direction_pairs;
  return j;
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(name) << "\" {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (g.has_labels()) out << " [label=\"" << dot_escape(g.label(v)) << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges()) {
    const int m = g.multiplicity(e.u, e.v);
    for (int i = 0; i < m; ++i) {
      out << "  " << e.u << " -- " << e.v;
      const auto it = g.edge_labels().find({e, i});
      if (it != g.edge_labels().end()) out << " [label=\"" << dot_escape(it->second) << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

bool RunReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass || c.skipped; });
}

Json RunReport::to_json() const {
  auto sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  std::size_t failed = 0;
  Json list = Json::array();
  for (const auto& c : sorted) {
    Json jc;
    jc["id"] = c.id;
    jc["expected"] = c.expected;
    jc["measured"] = c.measured;
    jc["pass"] = c.pass;
    if (c.skipped) jc["skipped"] = true;
    if (!c.note.empty()) jc["note"] = c.note;
    list.push_back(std::move(jc));
    if (!c.pass && !c.skipped) ++failed;
  }
  j["summary"] = {{"checks", sorted.size()}, {"failed", failed}};
  j["checks"] = std::move(list);
  return j;
}

}  // namespace cdt
