#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cdt/analysis.hpp"
#include "cdt/catalog.hpp"
#include "cdt/cycles.hpp"
#include "cdt/error.hpp"
#include "cdt/oac.hpp"
#include "cdt/pipeline.hpp"
#include "cdt/report.hpp"
#include "cdt/zipper.hpp"

using namespace cdt;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Exit code carried out of a subcommand.
struct Exit {
  int code;
};

void log(const std::string& msg) { std::cerr << "cdt: " << msg << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  log("wrote " + path);
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

// A catalog name, or a path to a graph JSON file.
Graph load_graph(const std::string& source) {
  if (std::filesystem::exists(source)) return graph_from_json(parse_json(read_file(source), source));
  return build(parse_catalog_graph(source)).graph;
}

void emit(const Json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

void emit_dot(const Graph& g, const std::string& name, const std::string& out_path) {
  const auto dot = graph_to_dot(g, name);
  if (out_path.empty())
    std::cout << dot;
  else
    write_file(std::filesystem::path(out_path).replace_extension(".dot").string(), dot);
}

int finish(const RunReport& report) {
  std::cout << report.to_json().dump(2) << "\n";
  std::size_t failed = 0;
  for (const auto& c : report.checks)
    if (!c.pass && !c.skipped) {
      ++failed;
      log("FAIL " + c.id + (c.note.empty() ? "" : " (" + c.note + ")"));
    }
  log(std::to_string(report.checks.size()) + " checks, " + std::to_string(failed) + " failed");
  return failed == 0 ? 0 : kExitFail;
}

OaSolution solve_for(const Graph& g, int k) {
  const auto gi = girth(g);
  if (!gi) throw PreconditionFailed("graph has no cycles");
  return solve_oa(build_constraint_graph(g, cycles_of_length(g, *gi), k));
}

int arc_k(const Graph& g) { return arc_transitivity(g, automorphism_group(g)); }

}  // namespace

int main(int argc, char** argv) {
  if (const char* threads = std::getenv("CDT_THREADS")) {
    const int n = std::atoi(threads);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Orientation assignments, zipping and UH checks for the cubic distance-transitive graphs"};
  app.require_subcommand(1);
  int code = 0;

  // catalog
  auto* catalog = app.add_subcommand("catalog", "The twelve catalog graphs");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "Table rows")->callback([&] {
    Json rows = Json::array();
    for (auto w : catalog_graphs()) {
      const auto r = expected_row(w);
      rows.push_back({{"id", catalog_id(w)}, {"title", catalog_title(w)}, {"n", r.n}, {"d", r.d}, {"g", r.g},
                      {"k", r.k}, {"eta", r.eta}, {"a", r.a}, {"b", r.b}, {"h", r.h}, {"kappa", r.kappa}});
    }
    std::cout << rows.dump(2) << "\n";
  });
  std::string build_name, out_path;
  bool dot = false;
  auto* cbuild = catalog->add_subcommand("build", "Graph JSON for one catalog graph");
  cbuild->add_option("name", build_name)->required();
  cbuild->add_option("--out", out_path, "Write JSON here instead of stdout");
  cbuild->add_flag("--dot", dot, "Also write DOT");
  cbuild->callback([&] {
    const auto g = build(parse_catalog_graph(build_name)).graph;
    emit(graph_to_json(g), out_path);
    if (dot) emit_dot(g, build_name, out_path);
  });
  std::string verify_name;
  bool slow = false;
  auto* cverify = catalog->add_subcommand("verify", "Recompute one table row");
  cverify->add_option("name", verify_name)->required();
  cverify->add_flag("--slow", slow, "Long Hamiltonian-cycle budget");
  cverify->callback([&] {
    PipelineOptions opts;
    if (slow) opts.hamilton_budget = std::chrono::minutes(10);
    RunReport r;
    r.command = "catalog verify " + verify_name;
    r.checks = catalog_checks(parse_catalog_graph(verify_name), opts);
    code = finish(r);
  });

  // cycles
  auto* cycles = app.add_subcommand("cycles", "Cycle enumeration");
  cycles->require_subcommand(1);
  std::string cycles_graph;
  bool girth_only = false;
  int length = 0;
  auto* cenum = cycles->add_subcommand("enum", "Canonical cycles of one length");
  cenum->add_option("graph", cycles_graph, "Catalog name or graph JSON")->required();
  cenum->add_flag("--girth-only", girth_only, "Shortest cycles only (default)");
  cenum->add_option("--length", length, "Cycle length");
  cenum->callback([&] {
    const auto g = load_graph(cycles_graph);
    if (girth_only && length > 0) throw CLI::ValidationError("--girth-only and --length are exclusive");
    const int len = length > 0 ? length : girth(g).value_or(0);
    Json list = Json::array();
    const auto found = len > 0 ? cycles_of_length(g, len) : std::vector<CanonicalCycle>{};
    for (const auto& c : found) list.push_back(c.vertices());
    std::cout << Json{{"length", len}, {"count", found.size()}, {"cycles", list}}.dump(2) << "\n";
  });

  // oac
  auto* oac = app.add_subcommand("oac", "Orientation assignments");
  oac->require_subcommand(1);
  std::string oac_graph;
  int oac_k = 0;
  auto* osolve = oac->add_subcommand("solve", "Solve for an assignment or an obstruction walk");
  osolve->add_option("graph", oac_graph, "Catalog name or graph JSON")->required();
  osolve->add_option("--k", oac_k, "Path order; default: arc-transitivity");
  osolve->callback([&] {
    const auto g = load_graph(oac_graph);
    const int k = oac_k > 0 ? oac_k : arc_k(g);
    const auto sol = solve_for(g, k);
    Json j{{"k", k}, {"balanced", sol.balanced()}, {"components", sol.components}};
    if (sol.balanced()) {
      j["oac"] = oac_to_json(sol.oac(), g);
      j["solutions"] = "2^" + std::to_string(sol.components);
    } else {
      j["certificate"] = certificate_to_json(sol.certificate(), g);
    }
    std::cout << j.dump(2) << "\n";
    log(sol.balanced() ? "balanced" : "unbalanced");
    code = sol.balanced() ? 0 : kExitFail;
  });

  // zip
  auto* zipc = app.add_subcommand("zip", "Zip the (k-1)-powers of an oriented cycle set");
  std::string zip_graph, zip_oac;
  int zip_k = 0;
  bool merge = false, relaxed = false;
  zipc->add_option("graph", zip_graph, "Catalog name or graph JSON")->required();
  zipc->add_option("--oac", zip_oac, "OAC JSON; default: solve");
  zipc->add_option("--k", zip_k, "Path order; default: arc-transitivity");
  zipc->add_option("--out", out_path, "Write JSON here instead of stdout");
  zipc->add_flag("--dot", dot, "Also write DOT");
  zipc->add_flag("--merge-by-vertex", merge, "Identify all occurrences of a vertex");
  zipc->add_flag("--allow-same-direction", relaxed, "Zip arc pairs that run the same way");
  zipc->callback([&] {
    const auto g = load_graph(zip_graph);
    const int k = zip_k > 0 ? zip_k : arc_k(g);
    OrientedCycleSet set;
    if (!zip_oac.empty()) {
      set = oac_from_json(parse_json(read_file(zip_oac), zip_oac));
    } else {
      const auto sol = solve_for(g, k);
      if (!sol.balanced()) {
        std::cout << Json{{"error", "no orientation assignment"}, {"certificate", certificate_to_json(sol.certificate(), g)}}.dump(2)
                  << "\n";
        throw Exit{kExitFail};
      }
      set = sol.oac();
    }
    ZipOptions opts;
    opts.merge_by_vertex = merge;
    opts.require_opposite = !relaxed;
    const auto y = zip(g, set, k, opts);
    emit(marked_graph_to_json(y), out_path);
    if (dot) emit_dot(y.graph(), zip_graph, out_path);
  });

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Downstream identifications");
  std::string topic;
  int lkn_n = 5;
  analyze->add_option("topic", topic)->required()->check(CLI::IsMember({"pappus", "desargues", "coxeter", "lkn"}));
  analyze->add_option("--n", lkn_n, "n for lkn")->check(CLI::Range(4, 8));
  analyze->callback([&] {
    RunReport r;
    r.command = "analyze " + topic + (topic == "lkn" ? " --n " + std::to_string(lkn_n) : "");
    if (topic == "pappus") r.checks = pappus_checks();
    if (topic == "desargues") r.checks = desargues_checks();
    if (topic == "coxeter") r.checks = coxeter_checks();
    if (topic == "lkn") r.checks = lkn_checks(lkn_n);
    code = finish(r);
  });

  // verify-all
  auto* vall = app.add_subcommand("verify-all", "Every check");
  std::string only;
  vall->add_option("--only", only, "One catalog graph");
  vall->add_flag("--slow", slow, "Long Hamiltonian-cycle budget");
  vall->callback([&] {
    PipelineOptions opts;
    if (slow) opts.hamilton_budget = std::chrono::minutes(10);
    std::optional<CatalogGraph> which;
    if (!only.empty()) which = parse_catalog_graph(only);
    std::string command = "verify-all";
    if (which) command += " --only " + std::string(catalog_id(*which));
    if (slow) command += " --slow";
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = verify_all(opts, which, command);
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log("elapsed " + std::to_string(secs) + " s");
    code = finish(r);
  });

  // export
  auto* exp = app.add_subcommand("export", "Write one stage's output");
  std::string exp_name, stage;
  exp->add_option("name", exp_name)->required();
  exp->add_option("stage", stage)->required()->check(CLI::IsMember({"graph", "oac", "zip", "dual"}));
  exp->add_option("--out", out_path, "Write JSON here instead of stdout");
  exp->add_flag("--dot", dot, "Also write DOT");
  exp->callback([&] {
    const auto which = parse_catalog_graph(exp_name);
    const auto g = build(which).graph;
    const int k = expected_row(which).k;
    if (stage == "graph") {
      emit(graph_to_json(g), out_path);
      if (dot) emit_dot(g, exp_name, out_path);
      return;
    }
    const auto sol = solve_for(g, k);
    if (!sol.balanced()) {
      std::cout << Json{{"error", "no orientation assignment"}, {"stage", stage},
                        {"certificate", certificate_to_json(sol.certificate(), g)}}.dump(2)
                << "\n";
      log(std::string(catalog_id(which)) + " has no orientation assignment");
      throw Exit{kExitFail};
    }
    // Listings are preferred to the solver's choice where shipped.
    const auto set = has_fixture_oac(which) ? fixture_oac(which) : sol.oac();
    if (stage == "oac") {
      emit(oac_to_json(set, g), out_path);
      return;
    }
    const auto y = zip(g, set, k);
    if (stage == "zip") {
      emit(marked_graph_to_json(y), out_path);
      if (dot) emit_dot(y.graph(), exp_name, out_path);
      return;
    }
    const auto d = dual_cycle_graph(y, y.faces);
    emit(graph_to_json(d), out_path);
    if (dot) emit_dot(d, exp_name + "-dual", out_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Exit& e) {
    return e.code;
  } catch (const InvalidInput& e) {
    log(std::string("invalid input: ") + e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    log(std::string("error: ") + e.what());
    return kExitFail;
  }
  return code;
}
