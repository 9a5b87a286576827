#include <benchmark/benchmark.h>

#include <random>

#include "permorb/fusion_table.hpp"
#include "permorb/orbifold.hpp"
#include "permorb/smith.hpp"
#include "permorb/verify.hpp"

namespace {

using namespace permorb;

IntMatrix cartan_a(std::size_t n) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = 2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
  }
  return g;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> dist(-20, 20);
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_FusionTable(benchmark::State& state) {
  const Orbifold o(GramLattice::validate(cartan_a(static_cast<std::size_t>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(FusionTable(o, TableOptions{64, 1}));
  state.SetLabel("l=" + std::to_string(o.discriminant_order()));
}
BENCHMARK(BM_FusionTable)->Arg(1)->Arg(3)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const Orbifold o(GramLattice::validate(cartan_a(static_cast<std::size_t>(state.range(0)))));
  VerifyOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_orbifold(o, opts));
  state.SetLabel("l=" + std::to_string(o.discriminant_order()));
}
BENCHMARK(BM_Verify)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
