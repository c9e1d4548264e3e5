#include <string>

#include <benchmark/benchmark.h>

#include "mlpoly/verify.hpp"

namespace {

void BM_VerifySuite(benchmark::State& state, const std::string& suite) {
    mlpoly::verify::Options opts;
    opts.parallel = false;
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::verify::run(suite, opts));
}
BENCHMARK_CAPTURE(BM_VerifySuite, fhp_identities, std::string("fhp-identities"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifySuite, mlp_gf, std::string("mlp-gf"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifySuite, caputo, std::string("caputo"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifySuite, pde_residuals, std::string("pde-residuals"))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifySuite, sheffer_ladder, std::string("sheffer-ladder"))->Unit(benchmark::kMillisecond);

void BM_VerifyAllParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(mlpoly::verify::run("all", mlpoly::verify::Options{}));
}
BENCHMARK(BM_VerifyAllParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
