#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "asdn/diffusion.hpp"
#include "asdn/harness.hpp"
#include "asdn/presets.hpp"
#include "asdn/sampling.hpp"

namespace {

void BM_PhiPrime(benchmark::State& state) {
  double alpha = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(asdn::phi_prime(alpha, 4.0));
    alpha = alpha > 4.0 ? -4.0 : alpha + 1e-3;
  }
}
BENCHMARK(BM_PhiPrime);

void BM_AdaptCombine(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 eng(1);
  std::normal_distribution<double> g;
  std::vector<double> u(order);
  for (auto& x : u) x = g(eng);
  asdn::NodeEstimator est(order, 1, {});
  const std::vector<double> c{1.0};
  for (auto _ : state) {
    const double e = asdn::compute_error(est, u, 0.5);
    asdn::adapt(est, u, e, true);
    const std::vector<asdn::VecView> views{asdn::VecView(est.psi)};
    asdn::combine(est, views, c);
    benchmark::DoNotOptimize(est.w.data());
  }
}
BENCHMARK(BM_AdaptCombine)->Arg(10)->Arg(50)->Arg(200);

void BM_NetworkRound(benchmark::State& state) {
  asdn::RunConfig cfg = asdn::default_config();
  cfg.policy.kind = static_cast<asdn::PolicyKind>(state.range(0));
  const asdn::Scenario sc = asdn::prepare(cfg);
  asdn::Simulator sim(sc, cfg, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sim.step());
  state.SetLabel(asdn::to_string(cfg.policy.kind));
}
BENCHMARK(BM_NetworkRound)
    ->Arg(static_cast<int>(asdn::PolicyKind::full))
    ->Arg(static_cast<int>(asdn::PolicyKind::as_sampling))
    ->Arg(static_cast<int>(asdn::PolicyKind::as_censoring));

}  // namespace

BENCHMARK_MAIN();
