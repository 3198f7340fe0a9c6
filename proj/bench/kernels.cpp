// Serial reference against the OpenMP kernel, per graph. Thread count comes
// from OMP_NUM_THREADS.
#include <benchmark/benchmark.h>

#include "cdt/catalog.hpp"
#include "cdt/cycles.hpp"

using namespace cdt;

namespace {

const Graph& graph_for(int index) {
  static const auto graphs = [] {
    std::vector<Graph> out;
    for (auto w : catalog_graphs()) out.push_back(build(w).graph);
    return out;
  }();
  return graphs[static_cast<std::size_t>(index)];
}

void label(benchmark::State& state) { state.SetLabel(std::string(catalog_id(catalog_graphs()[static_cast<std::size_t>(state.range(0))]))); }

template <bool Parallel>
void cycles(benchmark::State& state) {
  const auto& g = graph_for(static_cast<int>(state.range(0)));
  const int len = *girth(g);
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? cycles_of_length(g, len) : cycles_of_length_serial(g, len));
  label(state);
}

template <bool Parallel>
void paths(benchmark::State& state) {
  const auto& g = graph_for(static_cast<int>(state.range(0)));
  const int m = expected_row(catalog_graphs()[static_cast<std::size_t>(state.range(0))]).k;
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? paths_of_order(g, m) : paths_of_order_serial(g, m));
  label(state);
}

template <bool Parallel>
void incidence(benchmark::State& state) {
  const auto& g = graph_for(static_cast<int>(state.range(0)));
  const int m = expected_row(catalog_graphs()[static_cast<std::size_t>(state.range(0))]).k;
  const auto c = girth_cycles(g);
  for (auto _ : state) benchmark::DoNotOptimize(Parallel ? path_incidence(c, m) : path_incidence_serial(c, m));
  label(state);
}

// Coxeter, Tutte, Foster, Biggs-Smith.
void args(benchmark::internal::Benchmark* b) {
  for (int i : {8, 9, 10, 11}) b->Arg(i);
}

}  // namespace

BENCHMARK(cycles<false>)->Name("cycles/serial")->Apply(args);
BENCHMARK(cycles<true>)->Name("cycles/parallel")->Apply(args);
BENCHMARK(paths<false>)->Name("paths/serial")->Apply(args);
BENCHMARK(paths<true>)->Name("paths/parallel")->Apply(args);
BENCHMARK(incidence<false>)->Name("incidence/serial")->Apply(args);
BENCHMARK(incidence<true>)->Name("incidence/parallel")->Apply(args);

BENCHMARK_MAIN();
