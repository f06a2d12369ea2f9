#include <benchmark/benchmark.h>

#include "projd/diophantine.hpp"
#include "projd/fgab.hpp"
#include "projd/ringspec.hpp"
#include "projd/separation.hpp"

namespace {

using namespace projd;

ring::RingSpec five_var() {
  const fgab::FgAbGroup g(2);
  auto deg = [&](long a, long b) { return g.element({fgab::Integer(a), fgab::Integer(b)}, {}); };
  return ring::RingSpec(g, {{"x", deg(1, 0)}, {"y", deg(1, 0)}, {"z", deg(1, 1)},
                            {"v", deg(0, 1)}, {"w", deg(0, 1)}});
}

void BM_SmithNormalForm(benchmark::State &state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  fgab::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = static_cast<long>((i * 7 + j * 13 + i * j) % 11) - 5;
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fgab::smith_normal_form(m));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_HilbertBasis(benchmark::State &state) {
  const auto spec = five_var();
  const diophantine::ConstrainedSemigroup s{spec.size(), spec.kernel(),
                                            {true, true, false, true, true}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(diophantine::hilbert_basis(s));
  }
}
BENCHMARK(BM_HilbertBasis);

void BM_IrrelevantGenerators(benchmark::State &state) {
  const auto spec = five_var();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ring::irrelevant_generators(spec));
  }
}
BENCHMARK(BM_IrrelevantGenerators);

void BM_WeakPairs(benchmark::State &state) {
  const auto spec = five_var();
  for (auto _ : state) {
    benchmark::DoNotOptimize(separation::weak_pairs(spec));
  }
}
BENCHMARK(BM_WeakPairs);

} // namespace

BENCHMARK_MAIN();
