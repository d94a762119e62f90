#include <gsum/opoly.hpp>
#include <gsum/reference.hpp>
#include <gsum/rule_core.hpp>
#include <gsum/summator.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

void BM_BuildRule(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gsum::build_rule(n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildRule)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNSquared);

void BM_EigTridiag(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto J = gsum::jacobi_matrix(gsum::recurrence_coeffs(n), n);
    for (auto _ : state)
        benchmark::DoNotOptimize(gsum::eig_tridiag(J));
}
BENCHMARK(BM_EigTridiag)->RangeMultiplier(2)->Range(8, 256);

void BM_GaussSumHardyLittlewood(benchmark::State& state)
{
    const auto rule = gsum::build_rule(static_cast<std::size_t>(state.range(0)));
    const gsum::Summand s{[](double k) { return std::sin(40 / k) / k; }, gsum::Side::positive_half, ""};
    for (auto _ : state)
        benchmark::DoNotOptimize(gsum::gauss_sum(rule, s));
}
BENCHMARK(BM_GaussSumHardyLittlewood)->Arg(8)->Arg(16)->Arg(64);

void BM_AdaptiveSumWarmCache(benchmark::State& state)
{
    gsum::RuleCache cache;
    const gsum::Summand s{[](double k) { return 1.0 / (1.0 + k * k); }, gsum::Side::two_sided_nonzero, ""};
    for (auto _ : state)
        benchmark::DoNotOptimize(gsum::adaptive_sum(s, 1e-12, 64, cache));
}
BENCHMARK(BM_AdaptiveSumWarmCache);

void BM_HardyLittlewoodOracle(benchmark::State& state)
{
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gsum::hl_oracle(x));
}
BENCHMARK(BM_HardyLittlewoodOracle)->Arg(1)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ClosedFormDenominator(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(gsum::denominator_closed_form(21, 3.0));
}
BENCHMARK(BM_ClosedFormDenominator);

} // namespace

BENCHMARK_MAIN();
