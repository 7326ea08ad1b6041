#include <benchmark/benchmark.h>

#include "equicolor/dynamics.hpp"
#include "equicolor/generators.hpp"

using namespace equicolor;

namespace {

struct Instance {
  Graph g;
  PartialColoring f;
};

// A skewed proper coloring: greedy with the first colors preferred, so the
// scans have real work before they find a move.
Instance skewed(int n, int d) {
  Graph g = random_regular(n, d, 1);
  return {g, greedy_extend_full(g, d + 1, PartialColoring(n, d + 1))};
}

void scan_patterns(benchmark::State& state, ScanMode mode) {
  auto inst = skewed(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(collect_pattern_candidates(inst.g, inst.f, mode));
}

void scan_connected(benchmark::State& state, ScanMode mode) {
  auto inst = skewed(static_cast<int>(state.range(0)), 3);
  // Balanced start: no admissible move exists, so the scan covers every domain.
  auto r = equitable_k_coloring(inst.g, 4, inst.f);
  for (auto _ : state) benchmark::DoNotOptimize(scan_connected_moves(inst.g, r.coloring, 3, mode));
}

void driver(benchmark::State& state, ScanMode mode) {
  auto inst = skewed(static_cast<int>(state.range(0)), 4);
  DriverConfig config;
  config.scan = mode;
  for (auto _ : state) benchmark::DoNotOptimize(equitable_k_coloring(inst.g, 5, inst.f, config));
}

}  // namespace

BENCHMARK_CAPTURE(scan_patterns, serial, ScanMode::Serial)->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(scan_patterns, parallel, ScanMode::Parallel)->Arg(1000)->Arg(10000);
BENCHMARK_CAPTURE(scan_connected, serial, ScanMode::Serial)->Arg(200)->Arg(1000);
BENCHMARK_CAPTURE(scan_connected, parallel, ScanMode::Parallel)->Arg(200)->Arg(1000);
BENCHMARK_CAPTURE(driver, serial, ScanMode::Serial)->Arg(500)->Arg(2000);
BENCHMARK_CAPTURE(driver, parallel, ScanMode::Parallel)->Arg(500)->Arg(2000);

BENCHMARK_MAIN();
