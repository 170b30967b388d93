#include <benchmark/benchmark.h>

#include <elliptic_bohr/elliptic_bohr.hpp>

using namespace ebohr;

static void BM_SolveRadius(benchmark::State& state) {
    const auto kind = state.range(0) == 0 ? RadiusKind::real_coefficients : RadiusKind::general;
    for (auto _ : state) benchmark::DoNotOptimize(solve_radius(kind, 1e-13).value);
}
BENCHMARK(BM_SolveRadius)->Arg(0)->Arg(1);

static void BM_Extract(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.5, -0.25));
    const FaberSeries s(0.2, c);
    const auto f = [&](cplx w) { return eval_series(s, w); };
    for (auto _ : state) benchmark::DoNotOptimize(extract_coefficients(f, n, 0.2)[1]);
}
BENCHMARK(BM_Extract)->Arg(16)->Arg(64)->Arg(256);

static void BM_Generate(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(generate_positive_real_part(seed++, 0.2, static_cast<int>(state.range(0)))[0]);
}
BENCHMARK(BM_Generate)->Arg(64);

static void BM_InequalityBattery(benchmark::State& state) {
    const auto s = generate_positive_real_part(1, 0.2, 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_caratheodory_basic(s).min_slack);
        benchmark::DoNotOptimize(check_section4_main(s).min_slack);
        benchmark::DoNotOptimize(check_lemma44(s).min_slack);
    }
}
BENCHMARK(BM_InequalityBattery);

static void BM_Trace(benchmark::State& state) {
    const auto fam = state.range(0) == 0 ? ExtremalFamily::phi1 : ExtremalFamily::phi2;
    for (auto _ : state) benchmark::DoNotOptimize(prop51_trace(fam, 0.2, 4, 16).steps.back().metric);
}
BENCHMARK(BM_Trace)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
