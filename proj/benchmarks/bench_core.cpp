#include <benchmark/benchmark.h>

#include "zcount/zerocount.hpp"

using zcount::Complex;

static void BM_zeta_real(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(zcount::zeta_real(1.5));
}
BENCHMARK(BM_zeta_real);

static void BM_hurwitz_zeta(benchmark::State& state) {
    const Complex s(0.5, double(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(zcount::hurwitz_zeta(s, 1.0 / 3.0));
}
BENCHMARK(BM_hurwitz_zeta)->Arg(10)->Arg(30)->Arg(100);

static void BM_log_gamma(benchmark::State& state) {
    const Complex z(0.25, 7.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(zcount::log_gamma(z));
}
BENCHMARK(BM_log_gamma);

static void BM_eval_l(benchmark::State& state) {
    const auto chars = zcount::enumerate_characters(7);
    const auto& chi = chars[1];
    const Complex s(0.5, 20.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(zcount::eval_l(s, chi));
}
BENCHMARK(BM_eval_l);

static void BM_c2(benchmark::State& state) {
    const auto P = zcount::derive_params(0.25, zcount::PRule::eta_over_7(), 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(zcount::c2(P));
}
BENCHMARK(BM_c2);

static void BM_count_zeros_zeta(benchmark::State& state) {
    const zcount::Subject s = zcount::make_quadratic_field(1);
    const zcount::Rectangle rect{2.0, double(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(zcount::count_zeros(s, rect));
}
BENCHMARK(BM_count_zeros_zeta)->Arg(15)->Arg(30);

BENCHMARK_MAIN();
