// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "starb/catalog.hpp"
#include "starb/search.hpp"

using namespace starb;

namespace {

const CompatibilityGraph& compat(std::int64_t s, std::int64_t mu_sq) {
  static std::map<std::pair<std::int64_t, std::int64_t>, CompatibilityGraph> cache;
  auto& g = cache[{s, mu_sq}];
  if (g.size() == 0) g = build_compatibility_graph(enumerate_columns(s, mu_sq));
  return g;
}

void clique(benchmark::State& state, bool parallel) {
  const auto& g = compat(state.range(0), state.range(1));
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto r = parallel ? max_clique_parallel(g, {0, 0, 0}) : max_clique_serial(g);
    nodes = r.nodes;
    benchmark::DoNotOptimize(r.size);
  }
  state.counters["vertices"] = static_cast<double>(g.size());
  state.counters["nodes"] = static_cast<double>(nodes);
}

void BM_CliqueSerial(benchmark::State& state) { clique(state, false); }
void BM_CliqueParallel(benchmark::State& state) { clique(state, true); }

void oracle(benchmark::State& state) {
  OracleOptions opts;
  opts.threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max_order(state.range(0), state.range(1), opts).n);
}

SignedGraph random_graph(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0, 1);
  SignedGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng) < 0.5) g.set_edge(u, v, coin(rng) < 0.5 ? 1 : -1);
  return g;
}

void canonical(benchmark::State& state, const SignedGraph& g) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(switching_canonical_form(g, threads).code);
}

void BM_CanonicalHadamard8(benchmark::State& state) {
  static const std::vector<std::int64_t> eight{8};
  static const auto g = build_named("srg_hadamard", eight);
  canonical(state, g);
}

void BM_CanonicalBR(benchmark::State& state) {
  static const auto g = build_named("BR_signed");
  canonical(state, g);
}

void BM_CanonicalRandom16(benchmark::State& state) {
  static const auto g = random_graph(16, 7);
  canonical(state, g);
}

}  // namespace

BENCHMARK(BM_CliqueSerial)->Args({8, 4})->Args({10, 3})->Args({9, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CliqueParallel)->Args({8, 4})->Args({10, 3})->Args({9, 6})->Unit(benchmark::kMillisecond);
// Third argument: 1 = serial kernel, 0 = OpenMP.
BENCHMARK(oracle)->Name("BM_Oracle")->Args({12, 6, 1})->Args({12, 6, 0})->Args({11, 5, 1})->Args({11, 5, 0})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalHadamard8)->Arg(1)->Arg(0)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CanonicalBR)->Arg(1)->Arg(0)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CanonicalRandom16)->Arg(1)->Arg(0)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
