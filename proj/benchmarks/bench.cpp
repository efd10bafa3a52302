#include <benchmark/benchmark.h>

#include <random>

#include "hexforge/factor.hpp"
#include "hexforge/frobenius.hpp"
#include "hexforge/hexlines.hpp"
#include "hexforge/smooth.hpp"
#include "hexforge/weyl.hpp"

namespace {

using namespace hexforge;

Rationals Q;

QPoly random_monic(std::mt19937_64& rng, int deg, long height) {
  std::uniform_int_distribution<long> d(-height, height);
  std::vector<mpq_class> c(static_cast<std::size_t>(deg) + 1);
  for (int i = 0; i < deg; ++i) c[static_cast<std::size_t>(i)] = d(rng);
  c[static_cast<std::size_t>(deg)] = 1;
  return poly_from(Q, std::move(c));
}

void BM_resultant_deg12(benchmark::State& state) {
  std::mt19937_64 rng(1);
  QPoly f = random_monic(rng, 12, 1000), g = random_monic(rng, 12, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(resultant(Q, f, g));
}
BENCHMARK(BM_resultant_deg12);

void BM_factor_deg12(benchmark::State& state) {
  std::mt19937_64 rng(2);
  QPoly f = mul(Q, random_monic(rng, 5, 40), mul(Q, random_monic(rng, 4, 40), random_monic(rng, 3, 40)));
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_Q(f));
}
BENCHMARK(BM_factor_deg12);

void BM_quartic_construction(benchmark::State& state) {
  SexticInput<Rationals> in{poly_from(Q, {mpq_class(25), mpq_class(-150), mpq_class(335),
                                          mpq_class(-340), mpq_class(152), mpq_class(-24),
                                          mpq_class(1)}),
                            mpq_class(5)};
  for (auto _ : state) benchmark::DoNotOptimize(quartic(Q, in, Sign::Plus));
}
BENCHMARK(BM_quartic_construction);

void BM_smoothness_rational(benchmark::State& state) {
  SexticInput<Rationals> in{poly_from(Q, {mpq_class(1), mpq_class(-5), mpq_class(0), mpq_class(9),
                                          mpq_class(-2), mpq_class(-3), mpq_class(1)}),
                            mpq_class(1)};
  auto qm = quartic(Q, in, Sign::Plus);
  for (auto _ : state) benchmark::DoNotOptimize(smoothness(Q, qm.Q));
}
BENCHMARK(BM_smoothness_rational);

void BM_weyl_e7_bsgs(benchmark::State& state) {
  auto e7 = weyl_action(2);
  for (auto _ : state) {
    PermGroup we7(56, e7.gens);
    benchmark::DoNotOptimize(we7.order());
  }
}
BENCHMARK(BM_weyl_e7_bsgs);

void BM_hexad_report(benchmark::State& state) {
  SexticInput<Rationals> in{poly_from(Q, {mpq_class(1), mpq_class(-5), mpq_class(0), mpq_class(9),
                                          mpq_class(-2), mpq_class(-3), mpq_class(1)}),
                            mpq_class(1)};
  for (auto _ : state) benchmark::DoNotOptimize(hexad_report(in, Sign::Plus));
}
BENCHMARK(BM_hexad_report);

void BM_ddf_sampling(benchmark::State& state) {
  QPoly F = poly_from(Q, {mpq_class(25), mpq_class(-150), mpq_class(335), mpq_class(-340),
                          mpq_class(152), mpq_class(-24), mpq_class(1)});
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_sample(F, 200));
}
BENCHMARK(BM_ddf_sampling);

}  // namespace

BENCHMARK_MAIN();
