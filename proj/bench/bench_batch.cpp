#include <benchmark/benchmark.h>

#include <random>

#include "polycomp/batch.hpp"
#include "polycomp/ringdesc.hpp"

using namespace polycomp;

namespace {

// Random pairs of Z + X*Q[X] elements: degree <= 2, numerators in [-6, 6],
// denominators in {1, 2, 3}, integer constant term.
std::vector<ElementPair> make_pairs(std::size_t n) {
  const PairRef p = make_pair_ref(KTag::integers(), FieldDesc::rationals());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-6, 6);
  std::uniform_int_distribution<std::int64_t> den(1, 3);
  auto element = [&] {
    for (;;) {
      Poly f({QuadElement(num(rng)), QuadElement(Rational(Integer(num(rng)), Integer(den(rng)))),
              QuadElement(Rational(Integer(num(rng)), Integer(den(rng))))});
      if (!f.is_zero()) return CompositeElement(p, std::move(f));
    }
  };
  std::vector<ElementPair> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(element(), element());
  return out;
}

void BM_GcdBatchSerial(benchmark::State& state) {
  const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gcd_batch_serial(pairs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GcdBatchParallel(benchmark::State& state) {
  const auto pairs = make_pairs(static_cast<std::size_t>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(gcd_batch_parallel(pairs, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_GcdBatchSerial)->Arg(1 << 10)->Arg(1 << 14)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GcdBatchParallel)
    ->ArgsProduct({{1 << 10, 1 << 14}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
