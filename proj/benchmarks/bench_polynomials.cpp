#include <vector>

#include <benchmark/benchmark.h>

#include "mlpoly/fokker_planck.hpp"
#include "mlpoly/fractional_hermite.hpp"
#include "mlpoly/ml_polynomials.hpp"
#include "mlpoly/sheffer.hpp"

namespace {

void BM_FhpEval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::fhp_eval(n, 0.6, 0.8, -0.4));
}
BENCHMARK(BM_FhpEval)->Arg(4)->Arg(15)->Arg(40);

void BM_FhpCoeffs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::fhp_coeffs(n, 0.6, 1.1));
}
BENCHMARK(BM_FhpCoeffs)->Arg(4)->Arg(15);

void BM_UmbralShift(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::umbral_hermite_shift(12, 0.4, 0.3, 0.6, 0.5));
}
BENCHMARK(BM_UmbralShift);

void BM_MlpEval(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::mlp_eval(n, 0.5, 1.3, 0.7, 0.9));
}
BENCHMARK(BM_MlpEval)->Arg(4)->Arg(15);

void BM_OperationalCheck(benchmark::State& state) {
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(0.1 * i);
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::mlp_operational_check(8, 0.5, 1.0, 8, grid));
}
BENCHMARK(BM_OperationalCheck);

void BM_ResidualTfDiffusion(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::residual_tf_diffusion(10, 0.5, 1.0));
}
BENCHMARK(BM_ResidualTfDiffusion);

void BM_RaisingStep(benchmark::State& state) {
    const auto g = mlpoly::series_log_derivative(mlpoly::series_reciprocal(mlpoly::appell_A_fhp(0.5, 1.0, 12)));
    const auto p = mlpoly::fhp_coeffs(10, 0.5, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::raising_apply(p, g));
}
BENCHMARK(BM_RaisingStep);

}  // namespace
