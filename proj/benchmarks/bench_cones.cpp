#include <benchmark/benchmark.h>

#include "orderspace/cone_engine.hpp"

using namespace orderspace;

namespace {
  std::vector<Seed<KleinElement>> klein_seeds(Klein const& k) {
    return parse_seeds(k, {"bb", "a", "aBB"});
  }
}

static void BM_KleinBall(benchmark::State& state) {
  Klein const k;
  for (auto _ : state) {
    Ball<Klein> b(k, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_KleinBall)->DenseRange(4, 8, 2);

static void BM_KleinClosure(benchmark::State& state) {
  Klein const k;
  Ball<Klein> const ball(k, static_cast<std::size_t>(state.range(0)));
  BallArithmetic<Klein> const arith(k, ball);
  auto const p = klein_seeds(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sgr_closure(arith, p).size());
  }
}
BENCHMARK(BM_KleinClosure)->DenseRange(4, 8, 2);

static void BM_KleinWitnessSearch(benchmark::State& state) {
  Klein const k;
  Ball<Klein> const ball(k, 4);
  BallArithmetic<Klein> const arith(k, ball);
  auto const p = klein_seeds(k);
  auto const hint = greedy_extend(arith, p).positive;
  for (auto _ : state) {
    auto const w = find_nonextend_witness(
        arith, p, WitnessOptions{static_cast<std::size_t>(state.range(0))}, {hint});
    benchmark::DoNotOptimize(w.stats.subsets);
  }
}
BENCHMARK(BM_KleinWitnessSearch)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_KleinAdjudicate(benchmark::State& state) {
  Klein const k;
  auto const p = klein_seeds(k);
  auto const cones = candidate_cones(k);
  for (auto _ : state) {
    auto const a = adjudicate(k, p, cones, AdjudicationOptions{4, 6, 2});
    benchmark::DoNotOptimize(a.verdict);
  }
}
BENCHMARK(BM_KleinAdjudicate)->Unit(benchmark::kMillisecond);

static void BM_HeisenbergSampled(benchmark::State& state) {
  Heisenberg const h;
  Ball<Heisenberg> const ball(h, 4);
  auto const order = induce_conj_order(h, lex_biorder(h));
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_conj_order_sampled(order, ball, 10'000, 0).premises);
  }
}
BENCHMARK(BM_HeisenbergSampled)->Unit(benchmark::kMillisecond);
