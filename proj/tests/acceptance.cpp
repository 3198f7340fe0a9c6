// One line per acceptance criterion. A criterion prints FAIL when any of its
// sub-checks fails; the process exits 0 only when the failing sub-checks are
// exactly the documented ones in kKnownFailures (see README).
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cdt/automorphism.hpp"
#include "cdt/catalog.hpp"
#include "cdt/cycles.hpp"
#include "cdt/oac.hpp"
#include "cdt/pipeline.hpp"
#include "cdt/zipper.hpp"

using namespace cdt;
using Clock = std::chrono::steady_clock;

namespace {

// Runtime ceilings, seconds.
constexpr double kTableSeconds = 10.0;
constexpr double kCycleSeconds = 60.0;
constexpr double kAutSecondsEach = 600.0;
constexpr double kZipSeconds = 30.0;
constexpr std::chrono::milliseconds kHamiltonBudget{600000};
constexpr int kRelabelSeeds = 100;

// Measured values that disagree with the stated ones; each is analysed in
// the README.
const std::set<std::string> kKnownFailures = {
    "catalog.pappus.kappa",     "catalog.biggs-smith.kappa", "oac.pappus.balanced",
    "oac.biggs-smith.balanced", "oac.pappus.listing-valid",  "zip.desargues.components",
    "zip.k33.reference",        "analysis.coxeter.dual",
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Sub {
  std::string id;
  bool pass;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  std::vector<Sub> subs;
};

bool ends_with(const std::string& s, const std::string& tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

bool starts_with(const std::string& s, const std::string& head) { return s.rfind(head, 0) == 0; }

void take(Criterion& c, const RunReport& report, const std::function<bool(const std::string&)>& want) {
  for (const auto& r : report.checks)
    if (want(r.id))
      c.subs.push_back({r.id, r.pass && !r.skipped,
                        "expected " + r.expected.dump() + ", measured " + r.measured.dump()});
}

void timed(Criterion& c, const std::string& id, double elapsed, double limit) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.2f s (limit %.0f s)", elapsed, limit);
  c.subs.push_back({id, elapsed < limit, buf});
}

std::vector<Vertex> shuffled(int n, std::uint32_t seed) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

int main() {
  PipelineOptions options;
  options.hamilton_budget = kHamiltonBudget;
  const auto report = verify_all(options, std::nullopt, "acceptance");
  const auto& graphs = catalog_graphs();

  std::vector<Criterion> crit;

  {
    Criterion c{1, "table columns n, d, g, b", {}};
    take(c, report, [](const std::string& id) {
      return starts_with(id, "catalog.") &&
             (ends_with(id, ".n") || ends_with(id, ".d") || ends_with(id, ".g") || ends_with(id, ".b"));
    });
    const auto t = Clock::now();
    for (auto w : graphs) {
      const auto g = build(w).graph;
      (void)diameter(g);
      (void)girth(g);
      (void)is_bipartite(g);
    }
    timed(c, "time.table", seconds_since(t), kTableSeconds);
    crit.push_back(std::move(c));
  }

  {
    Criterion c{2, "girth-cycle counts", {}};
    take(c, report, [](const std::string& id) { return starts_with(id, "catalog.") && ends_with(id, ".eta"); });
    const auto t = Clock::now();
    for (auto w : graphs) {
      const auto row = expected_row(w);
      const auto eta = static_cast<int>(girth_cycles(build(w).graph).size());
      const int formula = (1 << (row.k - 2)) * 3 * row.n / row.g;
      c.subs.push_back({"formula." + std::string(catalog_id(w)), eta == formula,
                        std::to_string(eta) + " vs 2^(k-2)*3n/g = " + std::to_string(formula)});
    }
    timed(c, "time.cycles", seconds_since(t), kCycleSeconds);
    crit.push_back(std::move(c));
  }

  {
    Criterion c{3, "arc-transitivity k", {}};
    take(c, report, [](const std::string& id) { return starts_with(id, "catalog.") && ends_with(id, ".k"); });
    crit.push_back(std::move(c));
  }

  {
    Criterion c{4, "automorphism group orders", {}};
    take(c, report, [](const std::string& id) { return starts_with(id, "catalog.") && ends_with(id, ".a"); });
    for (auto w : graphs) {
      const auto g = build(w).graph;
      const auto t = Clock::now();
      (void)automorphism_group(g);
      timed(c, "time.aut." + std::string(catalog_id(w)), seconds_since(t), kAutSecondsEach);
    }
    crit.push_back(std::move(c));
  }

  {
    Criterion c{5, "kappa, obstruction walks, listed orientations", {}};
    take(c, report, [](const std::string& id) {
      return (starts_with(id, "catalog.") && ends_with(id, ".kappa")) || starts_with(id, "oac.");
    });
    crit.push_back(std::move(c));
  }

  {
    Criterion c{6, "zipping", {}};
    take(c, report, [](const std::string& id) {
      return (starts_with(id, "zip.") && !ends_with(id, ".sphere")) || id == "analysis.pappus.isomorphic" ||
             id == "analysis.desargues.isomorphic";
    });
    const auto t = Clock::now();
    for (auto w : graphs) (void)zip_checks(w);
    timed(c, "time.zip", seconds_since(t), kZipSeconds);
    crit.push_back(std::move(c));
  }

  {
    Criterion c{7, "embeddings", {}};
    take(c, report, [](const std::string& id) {
      return ends_with(id, ".sphere") || starts_with(id, "analysis.coxeter.") ||
             (starts_with(id, "analysis.pappus.") && id.find(".torus-") != std::string::npos);
    });
    crit.push_back(std::move(c));
  }

  {
    Criterion c{8, "configurations", {}};
    take(c, report, [](const std::string& id) {
      return (starts_with(id, "analysis.pappus.") || starts_with(id, "analysis.desargues.")) &&
             (id.find(".configuration") != std::string::npos || ends_with(id, ".triangles") ||
              ends_with(id, ".fastened") || ends_with(id, ".k3-labels"));
    });
    crit.push_back(std::move(c));
  }

  {
    Criterion c{9, "line graphs of complete graphs", {}};
    take(c, report, [](const std::string& id) { return starts_with(id, "analysis.lkn."); });
    crit.push_back(std::move(c));
  }

  {
    Criterion c{10, "property suites", {}};
    take(c, report, [](const std::string& id) { return starts_with(id, "cycles."); });

    // Relabelling invariance.
    const auto cox = build(CatalogGraph::coxeter).graph;
    const auto aut = automorphism_group(cox).order;
    int stable = 0;
    for (int seed = 0; seed < kRelabelSeeds; ++seed) {
      const auto h = relabel(cox, shuffled(cox.order(), static_cast<std::uint32_t>(seed)));
      const auto cyc = girth_cycles(h);
      if (girth(h) == 7 && diameter(h) == 4 && cyc.size() == 24 &&
          solve_oa(build_constraint_graph(h, cyc, 3)).balanced() && automorphism_group(h).order == aut)
        ++stable;
    }
    c.subs.push_back({"relabel", stable == kRelabelSeeds,
                      std::to_string(stable) + "/" + std::to_string(kRelabelSeeds) + " seeds invariant"});

    // Canonical forms are fixed points.
    bool idem = true;
    for (auto w : graphs) {
      const auto g = build(w).graph;
      for (const auto& cyc : girth_cycles(g))
        idem = idem && CanonicalCycle::from(cyc.reversed()) == cyc && CanonicalCycle::from(cyc.vertices()) == cyc;
    }
    c.subs.push_back({"canonical", idem, "girth cycles of all graphs"});

    // Reversing every cycle gives an isomorphic zip of the same genus.
    bool equivariant = true;
    for (auto w : {CatalogGraph::k4, CatalogGraph::q3, CatalogGraph::dodecahedral, CatalogGraph::coxeter}) {
      const auto g = build(w).graph;
      const int k = expected_row(w).k;
      const auto cg = build_constraint_graph(g, girth_cycles(g), k);
      auto oac = solve_oa(cg).oac();
      const auto y = zip(g, oac, k);
      for (int comp = 0; comp < constraint_components(cg); ++comp) oac = flip_component(cg, oac, comp);
      const auto z = zip(g, oac, k);
      equivariant = equivariant && are_isomorphic(underlying_simple(y.graph()), underlying_simple(z.graph())) &&
                    verify_polygonal_embedding(y, y.faces).genus == verify_polygonal_embedding(z, z.faces).genus;
    }
    c.subs.push_back({"flip", equivariant, "K4, Q3, dodecahedral, Coxeter"});

    // Valid assignments number 2^components (exhaustive where feasible).
    bool counts = true;
    std::string detail;
    for (auto w : {CatalogGraph::k4, CatalogGraph::k33, CatalogGraph::q3, CatalogGraph::dodecahedral}) {
      const auto g = build(w).graph;
      const int k = expected_row(w).k;
      const auto cycles = girth_cycles(g);
      const auto cg = build_constraint_graph(g, cycles, k);
      int valid = 0;
      for (std::uint32_t mask = 0; mask < (1u << cycles.size()); ++mask) {
        OrientedCycleSet s{cycles, {}};
        for (std::size_t i = 0; i < cycles.size(); ++i) s.reversed.push_back(((mask >> i) & 1u) != 0);
        valid += validate_oac(g, s, k) ? 1 : 0;
      }
      counts = counts && valid == (1 << constraint_components(cg));
      detail += std::string(catalog_id(w)) + " " + std::to_string(valid) + " ";
    }
    c.subs.push_back({"solution-count", counts, detail});
    crit.push_back(std::move(c));
  }

  {
    Criterion c{11, "Hamiltonicity", {}};
    take(c, report, [](const std::string& id) { return starts_with(id, "catalog.") && ends_with(id, ".h"); });
    crit.push_back(std::move(c));
  }

  std::set<std::string> failing;
  for (const auto& c : crit) {
    std::vector<const Sub*> bad;
    for (const auto& s : c.subs)
      if (!s.pass) bad.push_back(&s);
    std::printf("criterion %2d  %s  %s (%zu sub-checks", c.number, bad.empty() ? "PASS" : "FAIL", c.title.c_str(),
                c.subs.size());
    if (!bad.empty()) std::printf(", %zu failing", bad.size());
    std::printf(")\n");
    for (const auto* s : bad) {
      std::printf("    %s: %s\n", s->id.c_str(), s->detail.c_str());
      failing.insert(s->id);
    }
  }

  std::vector<std::string> unexpected, resolved;
  std::set_difference(failing.begin(), failing.end(), kKnownFailures.begin(), kKnownFailures.end(),
                      std::back_inserter(unexpected));
  std::set_difference(kKnownFailures.begin(), kKnownFailures.end(), failing.begin(), failing.end(),
                      std::back_inserter(resolved));
  for (const auto& id : unexpected) std::printf("unexpected failure: %s\n", id.c_str());
  for (const auto& id : resolved) std::printf("known failure now passes, update the list: %s\n", id.c_str());
  std::printf("%zu failing sub-checks, all documented: %s\n", failing.size(),
              unexpected.empty() && resolved.empty() ? "yes" : "no");
  return unexpected.empty() && resolved.empty() ? 0 : 1;
}
