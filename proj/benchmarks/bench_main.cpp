#include <benchmark/benchmark.h>

#include "minsurf/bezier.hpp"
#include "minsurf/canonical.hpp"
#include "minsurf/chart.hpp"
#include "minsurf/geometry.hpp"
#include "minsurf/mesh.hpp"
#include "minsurf/sampling.hpp"

using namespace minsurf;

namespace {

VectorChart<double> degree_seven_chart() {
    Rng rng(7);
    const auto f = random_gaussian_poly(rng, 2);
    const auto g = random_gaussian_poly(rng, 2);
    return cast_chart<double>(real_chart(weierstrass_curve(f, g)));
}

}  // namespace

static void BM_WeierstrassChartExact(benchmark::State& state) {
    Rng rng(1);
    const auto f = random_gaussian_poly(rng, 2);
    const auto g = random_gaussian_poly(rng, 2);
    for (auto _ : state) benchmark::DoNotOptimize(real_chart(weierstrass_curve(f, g)));
}
BENCHMARK(BM_WeierstrassChartExact);

static void BM_IsothermalExact(benchmark::State& state) {
    Rng rng(2);
    const auto chart = real_chart(weierstrass_curve(random_gaussian_poly(rng, 2), random_gaussian_poly(rng, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(is_isothermal_exact(chart));
}
BENCHMARK(BM_IsothermalExact);

static void BM_FundamentalForms(benchmark::State& state) {
    const ChartJet jet(degree_seven_chart());
    double u = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fundamental_forms(jet, u, 0.3));
        u = u > 0.9 ? 0.1 : u + 1e-3;
    }
}
BENCHMARK(BM_FundamentalForms);

static void BM_CompleteHarmonicExact(benchmark::State& state) {
    Rng rng(3);
    const auto given = random_given(rng);
    for (auto _ : state) benchmark::DoNotOptimize(complete_harmonic(given));
}
BENCHMARK(BM_CompleteHarmonicExact);

static void BM_HarmonicOracle(benchmark::State& state) {
    Rng rng(4);
    const auto given = random_given(rng);
    for (auto _ : state) benchmark::DoNotOptimize(harmonic_oracle(given));
}
BENCHMARK(BM_HarmonicOracle);

static void BM_GanchevPdeDefect(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(ganchev_pde_defect(canonical_nu_0, 1.0, 0.5, 1e-3));
}
BENCHMARK(BM_GanchevPdeDefect);

static void BM_CanonicalChartEval(benchmark::State& state) {
    const auto sub = canonical_substitution(1.0, 1.0);
    const CanonicalChart chart(canonical_generator(sub), sub.branch());
    for (auto _ : state) benchmark::DoNotOptimize(chart.eval(-0.7, 1.1));
}
BENCHMARK(BM_CanonicalChartEval);

static void BM_SampleMesh(benchmark::State& state) {
    const auto chart = degree_seven_chart();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_chart([&](double u, double v) { return chart.eval(u, v); }, {}, n, n));
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SampleMesh)->Arg(65)->Arg(101);
BENCHMARK_MAIN();
