#include <benchmark/benchmark.h>

#include "mlpoly/gamma.hpp"
#include "mlpoly/mittag_leffler.hpp"

namespace {

void BM_MlOne(benchmark::State& state) {
    const double z = static_cast<double>(state.range(0)) / 4.0;
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::ml_one(0.7, z));
}
BENCHMARK(BM_MlOne)->Arg(-8)->Arg(1)->Arg(8)->Arg(40);

void BM_MlThreePolynomial(benchmark::State& state) {
    const double gamma = -static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::ml_three(0.5, 1.2, gamma, 0.3));
}
BENCHMARK(BM_MlThreePolynomial)->Arg(4)->Arg(16);

void BM_Wright(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::wright(0.5, 1.0, -2.0));
}
BENCHMARK(BM_Wright);

void BM_LnGamma(benchmark::State& state) {
    double x = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mlpoly::ln_gamma(x));
        x = x < 100.0 ? x + 0.37 : 0.5;
    }
}
BENCHMARK(BM_LnGamma);

}  // namespace
