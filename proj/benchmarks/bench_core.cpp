#include <benchmark/benchmark.h>

#include "dgexcess/analysis.hpp"
#include "dgexcess/generators.hpp"
#include "dgexcess/linalg.hpp"
#include "dgexcess/orthopoly.hpp"
#include "dgexcess/report.hpp"
#include "dgexcess/verify.hpp"

namespace dg = dgexcess;

static void BM_KrylovHypercube(benchmark::State& state) {
  const dg::Digraph g = dg::hypercube(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    dg::PowerCache cache(g);
    benchmark::DoNotOptimize(dg::krylov_gram_elimination(cache));
  }
  state.SetLabel(std::to_string(g.order()) + " vertices");
}
BENCHMARK(BM_KrylovHypercube)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_SpectrumPaley(benchmark::State& state) {
  const dg::Digraph g = dg::paley_tournament(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dg::spectrum(g));
}
BENCHMARK(BM_SpectrumPaley)->Arg(7)->Arg(19)->Arg(43)->Arg(59)->Unit(benchmark::kMillisecond);

static void BM_SpectrumCycle(benchmark::State& state) {
  const dg::Digraph g = dg::directed_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dg::spectrum(g));
}
BENCHMARK(BM_SpectrumCycle)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_FullReport(benchmark::State& state) {
  const dg::Digraph g = state.range(0) == 0 ? dg::petersen() : dg::kneser_odd_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(dg::full_report(g));
  state.SetLabel(state.range(0) == 0 ? "petersen" : "kneser_odd_graph(4)");
}
BENCHMARK(BM_FullReport)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_WeightedExcessPath(benchmark::State& state) {
  const dg::Digraph g = dg::path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    dg::Analysis a(g);
    benchmark::DoNotOptimize(a.weighted_excess());
  }
}
BENCHMARK(BM_WeightedExcessPath)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_EnumerateStronglyConnected(benchmark::State& state) {
  dg::EnumerationOptions opts;
  opts.filter = dg::EnumFilter::strongly_connected;
  for (auto _ : state) benchmark::DoNotOptimize(dg::enumerate_masks(static_cast<std::size_t>(state.range(0)), opts));
}
BENCHMARK(BM_EnumerateStronglyConnected)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_VerifyOrderFour(benchmark::State& state) {
  dg::VerifyOptions opts;
  opts.max_n = 4;
  opts.include_families = false;
  opts.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dg::run_verification(opts));
}
BENCHMARK(BM_VerifyOrderFour)->Arg(1)->Arg(4)->Unit(benchmark::kSecond)->Iterations(1)->UseRealTime();

BENCHMARK_MAIN();
