#include <benchmark/benchmark.h>

#include "orderspace/cantor_codec.hpp"
#include "orderspace/magma.hpp"
#include "orderspace/order_engine.hpp"

using namespace orderspace;

static void BM_EnumerateTrivial(benchmark::State& state) {
  auto const q = trivial_quandle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::uint64_t n = 0;
    enumerate(q.magma(), Side::right, {}, [&](OrderRelation const&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateTrivial)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_EnumerateThreads(benchmark::State& state) {
  auto const q = trivial_quandle(8);
  EnumerateOptions opts{std::nullopt, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_orders(q.magma(), Side::right, {}, opts).count);
  }
}
BENCHMARK(BM_EnumerateThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_RefuteConj(benchmark::State& state) {
  // Conj(S_4): no orders, found by propagation
  auto const q = conj_quandle(symmetric_group(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_orders(q.magma(), Side::right).count);
  }
}
BENCHMARK(BM_RefuteConj);

static void BM_DecodeAll(benchmark::State& state) {
  auto const q = trivial_quandle(4);
  auto const len = 12u;
  for (auto _ : state) {
    std::size_t ok = 0;
    for (std::uint32_t v = 0; v < (1u << len); ++v) {
      std::string bits(len, '0');
      for (std::size_t i = 0; i < len; ++i) {
        bits[i] = (v >> i) & 1 ? '1' : '0';
      }
      ok += std::holds_alternative<OrderRelation>(
          decode(ChiVector(4, bits), q.magma(), Side::right));
    }
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_DecodeAll)->Unit(benchmark::kMillisecond);
