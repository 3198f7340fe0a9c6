#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdt/configuration.hpp"
#include "cdt/graph.hpp"
#include "cdt/labels.hpp"
#include "cdt/oac.hpp"

namespace cdt {

enum class CatalogGraph {
  k4,
  k33,
  q3,
  petersen,
  heawood,
  pappus,
  dodecahedral,
  desargues,
  coxeter,
  tutte,
  foster,
  biggs_smith,
};

/// Table order.
const std::array<CatalogGraph, 12>& catalog_graphs();
std::string_view catalog_id(CatalogGraph which);      // "k33", "biggs-smith"
std::string_view catalog_title(CatalogGraph which);   // "Thomsen graph K3,3"
/// Accepts ids, case-insensitively, with '_' or '-' separators.
CatalogGraph parse_catalog_graph(std::string_view text);

struct CatalogEntry {
  CatalogGraph graph = CatalogGraph::k4;
  int n = 0;
  int d = 0;
  int g = 0;
  int k = 0;
  int eta = 0;
  std::uint64_t a = 0;
  bool b = false;
  bool h = false;
  int kappa = 0;
};

CatalogEntry expected_row(CatalogGraph which);

struct BuiltGraph {
  Graph graph;  // vertex labels set from the scheme
  LabeledVertexScheme scheme;
};

BuiltGraph build(CatalogGraph which);

struct ColumnCheck {
  std::string column;
  std::int64_t expected = 0;
  std::optional<std::int64_t> measured;
  bool pass = false;
  bool skipped = false;  // not measured; does not count as a failure
  std::string note;
};

struct RowReport {
  CatalogGraph graph = CatalogGraph::k4;
  std::vector<ColumnCheck> columns;
  /// No column failed.
  bool passed() const;
  const ColumnCheck* column(std::string_view name) const;
};

struct VerifyOptions {
  bool automorphisms = true;  // also gates the k column
  bool kappa = true;
  std::chrono::milliseconds hamilton_budget{0};  // 0 skips the h column
};

RowReport verify_row(CatalogGraph which, const VerifyOptions& options = {});
/// Checks an arbitrary graph against a row, e.g. a damaged copy.
RowReport verify_row(const Graph& g, const CatalogEntry& expected, const VerifyOptions& options = {});

struct FixtureCycle {
  std::string name;
  std::vector<Vertex> traversal;  // as listed
  bool reverse = false;           // named by a `reverse` directive
  std::vector<Vertex> oriented() const;
};

/// A fixture file in the notation of the source listings. See
/// data/fixtures/README for the format.
struct Fixture {
  CatalogGraph graph = CatalogGraph::k4;
  int k = 0;
  LabeledVertexScheme scheme;
  std::vector<FixtureCycle> cycles;
  std::vector<std::string> walk_cycles;         // closed: front() == back()
  std::vector<std::vector<Vertex>> walk_paths;  // between consecutive cycles
};

Fixture parse_fixture(std::string_view text);

/// Raw text of an embedded fixture file ("k4.oac", "biggs_smith.edges").
std::string_view fixture_text(std::string_view file);

bool has_fixture_oac(CatalogGraph which);
Fixture fixture(CatalogGraph which);  // OAC or obstruction file
/// The listed oriented cycles, with `reverse` corrections applied unless
/// `verbatim`. Throws InvalidInput for graphs without a listing.
OrientedCycleSet fixture_oac(CatalogGraph which, bool verbatim = false);
/// The listed closed walk for graphs shipping one (Petersen, Heawood).
ObstructionCertificate fixture_obstruction(CatalogGraph which);

/// Lines 124, 235, 346, 457, 561, 672, 713 on points named 1..7
/// (point p has index p-1).
IncidenceConfiguration fano_plane();

}  // namespace cdt
