#include <benchmark/benchmark.h>

#include "knothodge/canonical.hpp"
#include "knothodge/genfun.hpp"
#include "knothodge/hodge.hpp"
#include "knothodge/homology.hpp"

using namespace knothodge;

static void BM_Assemble(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(assemble(Parity::odd, order));
}
BENCHMARK(BM_Assemble)->Arg(8)->Arg(16)->Arg(23)->Unit(benchmark::kMillisecond);

static void BM_HomotopyTable(benchmark::State& state) {
  const USeries f = assemble(Parity::even, 23);
  for (auto _ : state) benchmark::DoNotOptimize(homotopy_from_homology(f, Parity::even, 23));
}
BENCHMARK(BM_HomotopyTable)->Unit(benchmark::kMillisecond);

static void BM_CanonicalForm(benchmark::State& state) {
  const HalfEdgeGraph g = HalfEdgeGraph::parse("i=2 v=6 | 0>2 1>3 2>4 2>5 3>6 3>7 4>5 4>6 5>7 6>7");
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm);

static void BM_BuildComplex(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_complex(1, j, Parity::odd));
}
BENCHMARK(BM_BuildComplex)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
