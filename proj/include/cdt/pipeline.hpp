#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "cdt/catalog.hpp"
#include "cdt/report.hpp"

namespace cdt {

struct PipelineOptions {
  /// Budget per Hamiltonian-cycle search; the CLI raises it under --slow.
  std::chrono::milliseconds hamilton_budget{10000};
};

/// Table row: catalog.<id>.<column>.
std::vector<CheckRecord> catalog_checks(CatalogGraph which, const PipelineOptions& options);
/// Orientation assignment, listings and certificates: oac.<id>.*.
std::vector<CheckRecord> oac_checks(CatalogGraph which);
/// Multiplicity census of girth cycles through short paths: cycles.<id>.census.
std::vector<CheckRecord> census_checks(CatalogGraph which);
/// Zip outcome for the graphs with a listing: zip.<id>.*.
std::vector<CheckRecord> zip_checks(CatalogGraph which);

std::vector<CheckRecord> pappus_checks();
std::vector<CheckRecord> desargues_checks();
std::vector<CheckRecord> coxeter_checks();
std::vector<CheckRecord> lkn_checks(int n);

/// Every check for one graph, including its analysis suite.
std::vector<CheckRecord> graph_checks(CatalogGraph which, const PipelineOptions& options);

/// All graphs (or one), plus L(K_n) for n = 4..8 when `only` is empty.
RunReport verify_all(const PipelineOptions& options, std::optional<CatalogGraph> only, std::string command);

}  // namespace cdt
