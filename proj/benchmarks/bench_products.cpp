#include <benchmark/benchmark.h>

#include "lpa/little_group.hpp"
#include "lpa/products.hpp"
#include "lpa/sampling.hpp"

using namespace lpa;

namespace {

Multivector dense_random(Sampler& sampler, Signature sig) {
  Multivector x(sig);
  for (std::uint32_t m = 0; m < (1U << sig.dimension()); ++m) x.set(Blade{m}, sampler.uniform(-1, 1));
  return x;
}

void BM_GeometricProduct(benchmark::State& state) {
  const Signature sig{1, static_cast<int>(state.range(0)), 0};
  Sampler sampler(1);
  const Multivector a = dense_random(sampler, sig), b = dense_random(sampler, sig);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GeometricProduct)->DenseRange(2, 6);

void BM_TranslationSandwich(benchmark::State& state) {
  const Signature sig{1, static_cast<int>(state.range(0)), 0};
  const Algebra alg = make_algebra(sig);
  Sampler sampler(2);
  const LittleAlgebra la = construct_little_algebra(alg, sampler.lightlike(alg));
  const Rotor lambda = translation_rotor(la, 1, Multivector::scalar(sig, 0.7));
  const Multivector s = sampler.spatial_in_frame(la);
  for (auto _ : state) benchmark::DoNotOptimize(sandwich(lambda, s));
}
BENCHMARK(BM_TranslationSandwich)->DenseRange(2, 6);

void BM_CayleyTable(benchmark::State& state) {
  const Signature sig{1, static_cast<int>(state.range(0)), 0};
  const Algebra alg = make_algebra(sig);
  Sampler sampler(3);
  const LittleAlgebra la = construct_little_algebra(alg, sampler.lightlike(alg));
  for (auto _ : state) benchmark::DoNotOptimize(cayley_table(la));
}
BENCHMARK(BM_CayleyTable)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
