#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cdt/graph.hpp"
#include "cdt/oac.hpp"
#include "cdt/zipper.hpp"

namespace cdt {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// {"n", "edges", "labels"?, "multiplicity"?}; multiplicity lists
/// [u, v, m] for pairs with m > 1.
Json graph_to_json(const Graph& g);
/// Throws InvalidInput on a malformed document.
Graph graph_from_json(const Json& j);

/// {"cycles": [[...oriented traversal...], ...]}, names resolved through the
/// graph's labels when present.
Json oac_to_json(const OrientedCycleSet& oac, const Graph& g);
OrientedCycleSet oac_from_json(const Json& j);
Json certificate_to_json(const ObstructionCertificate& cert, const Graph& g);
Json marked_graph_to_json(const MarkedGraph& y);

/// Layout-free DOT; edge labels when the graph carries them.
std::string graph_to_dot(const Graph& g, const std::string& name);

struct CheckRecord {
  std::string id;     // e.g. "catalog.coxeter.a"; see docs/claims.md
  Json expected;
  Json measured;
  bool pass = false;
  bool skipped = false;  // not measured; ignored by passed()
  std::string note;
};

struct RunReport {
  std::string command;
  std::vector<CheckRecord> checks;

  bool passed() const;
  /// Checks sorted by id. No timing, so repeated runs are byte-identical.
  Json to_json() const;
};

}  // namespace cdt
