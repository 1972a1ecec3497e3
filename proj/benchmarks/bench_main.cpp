#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "focklab/gram.hpp"
#include "focklab/kernel.hpp"
#include "focklab/moments.hpp"
#include "focklab/products.hpp"
#include "focklab/quadrature.hpp"
#include "focklab/slog.hpp"

using namespace focklab;

namespace {

const WeightParams kHalf{0.5};

void BM_SlogAdd(benchmark::State& state) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> d(-200.0, 200.0);
    std::vector<SignedLogReal> xs(1024);
    for (auto& x : xs) x = SignedLogReal::from_log(d(rng), (rng() & 1) ? +1 : -1);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(slog_add(xs[i & 1023], xs[(i + 1) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_SlogAdd);

void BM_LogSumExp(benchmark::State& state) {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> d(-400.0, 0.0);
    std::vector<double> terms(state.range(0));
    for (auto& t : terms) t = d(rng);
    for (auto _ : state) benchmark::DoNotOptimize(log_sum_exp(terms));
}
BENCHMARK(BM_LogSumExp)->Arg(16)->Arg(64)->Arg(256);

void BM_MomentQuadrature(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(moment_log_exact(n, kHalf, 1e-12));
}
BENCHMARK(BM_MomentQuadrature)->Arg(0)->Arg(50)->Arg(400);

void BM_KernelDiag(benchmark::State& state) {
    const auto table = MomentTable::build(200, kHalf);
    const double s = lambda_log_modulus(static_cast<int>(state.range(0)), kHalf);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_diag_log(s, kHalf, table));
}
BENCHMARK(BM_KernelDiag)->Arg(5)->Arg(40);

void BM_KernelPair(benchmark::State& state) {
    const auto table = MomentTable::build(200, kHalf);
    const LogPoint z{lambda_log_modulus(20, kHalf), 0.3};
    const LogPoint w{lambda_log_modulus(22, kHalf), -0.8};
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel_offdiag_normalized(z, w, kHalf, table));
}
BENCHMARK(BM_KernelPair);

void BM_TruncatedProductBuild(benchmark::State& state) {
    const auto seq = realize(SequenceSpec::reference(static_cast<int>(state.range(0)), kHalf));
    for (auto _ : state)
        benchmark::DoNotOptimize(TruncatedProduct::build(seq, seq.size()));
}
BENCHMARK(BM_TruncatedProductBuild)->Arg(20)->Arg(40);

void BM_GramSection(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const auto seq = realize(SequenceSpec::reference(m, kHalf));
    const auto table = MomentTable::build(200, kHalf);
    for (auto _ : state) benchmark::DoNotOptimize(build_gram(seq, m, table));
}
BENCHMARK(BM_GramSection)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
