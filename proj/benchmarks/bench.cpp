#include "bispec/adcond/adcond.hpp"
#include "bispec/darboux/darboux.hpp"
#include "bispec/exact/nullspace.hpp"
#include "bispec/families/catalog.hpp"
#include "bispec/families/hermite.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bispec;

DiffOp theta_of(const XPoly& p) { return DiffOp::multiplication(XRat(p)); }

void BM_AdPowersHermite(benchmark::State& state) {
  const auto p = exceptional_hermite(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(0)) + 2;
  for (auto _ : state) benchmark::DoNotOptimize(ad_powers(p.L, theta_of(p.theta), n));
}
BENCHMARK(BM_AdPowersHermite)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_VerifyHermite(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto p = exceptional_hermite(k);
  const auto w = hermite_new_weights(k);
  for (auto _ : state) benchmark::DoNotOptimize(verify_condition(p.L, theta_of(p.theta), w).holds);
}
BENCHMARK(BM_VerifyHermite)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_NullspaceRational(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ScalarMatrix m(static_cast<std::size_t>(n - 1), ScalarRow(static_cast<std::size_t>(n)));
  for (int i = 0; i < n - 1; ++i) {
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Scalar(Rat((i + 1) * (j + 2) % 7 + i - j, j + 1));
  }
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m, static_cast<std::size_t>(n)).basis.size());
}
BENCHMARK(BM_NullspaceRational)->RangeMultiplier(2)->Range(4, 32);

void BM_SolveThetaHermite(benchmark::State& state) {
  const auto p = exceptional_hermite(1);
  const auto w = hermite_new_weights(1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_theta(p.L, w, static_cast<int>(state.range(0))).basis.size());
}
BENCHMARK(BM_SolveThetaHermite)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_LaguerreChain(benchmark::State& state) {
  const DiffOp& L0 = laguerre_catalog(0).scalar().L;
  const auto seeds = laguerre_chain_seeds();
  for (auto _ : state) benchmark::DoNotOptimize(darboux_chain(L0, seeds).size());
}
BENCHMARK(BM_LaguerreChain)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
