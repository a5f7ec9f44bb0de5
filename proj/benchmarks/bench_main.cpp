#include <benchmark/benchmark.h>

#include "gegen/extrema.hpp"
#include "gegen/gengeg.hpp"
#include "gegen/jacobi.hpp"
#include "gegen/quadrature.hpp"

namespace {

void BM_JacobiValue(benchmark::State& state) {
  const gegen::JacobiParams p(0.3, 1.2);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  double t = 0.1234;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gegen::jacobi_value(p, n, t));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiValue)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_GaussJacobiRule(benchmark::State& state) {
  const gegen::JacobiParams p(-0.4, 0.7);
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto rule = gegen::gauss_jacobi_rule(p, m);
    benchmark::DoNotOptimize(rule.weights().data());
  }
}
BENCHMARK(BM_GaussJacobiRule)->RangeMultiplier(4)->Range(8, 512);

void BM_OrthonormalSupNorm(benchmark::State& state) {
  const gegen::GegenParams p(2.0, 1.0);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const gegen::OrthonormalGengeg poly(p, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gegen::sup_norm(poly, n).value);
  }
}
BENCHMARK(BM_OrthonormalSupNorm)->RangeMultiplier(4)->Range(100, 1600)->Unit(benchmark::kMillisecond);

void BM_ConnectionEval(benchmark::State& state) {
  const gegen::GegenParams p(0.7, 0.9);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gegen::connection_eval(p, n, 0.37));
  }
}
BENCHMARK(BM_ConnectionEval)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
