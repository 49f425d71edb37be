#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "conjlab/conjugate.hpp"
#include "conjlab/helicoid.hpp"
#include "conjlab/js_solver.hpp"

using namespace conjlab;

static void BM_half_period(benchmark::State& st) {
    const double mu = st.range(0) / 10.0;
    for (auto _ : st) benchmark::DoNotOptimize(t_mu(mu).value());
}
BENCHMARK(BM_half_period)->Arg(-30)->Arg(-6)->Arg(6)->Arg(30);

static void BM_g_mu(benchmark::State& st) {
    double x = 0.0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(g_mu(x, -3.0));
        x = x > 10.0 ? 0.0 : x + 0.37;
    }
}
BENCHMARK(BM_g_mu);

static void BM_profile(benchmark::State& st) {
    const auto grid = profile_grid(3.0, 0.9, 1e-3, 5.0);
    for (auto _ : st) benchmark::DoNotOptimize(invert_profile(3.0, grid).samples.size());
}
BENCHMARK(BM_profile)->Unit(benchmark::kMillisecond);

static void BM_js_solve(benchmark::State& st) {
    const double h = 1.0 / st.range(0);
    const std::vector<double> M{2, 4, 8, 16};
    JSOptions o;
    o.corner_grading = 2.0;
    std::size_t nodes = 0;
    for (auto _ : st) {
        const auto run = solve_jenkins_serrin(Extent{1.0}, Extent{1.0}, 2, 0.25, M, h, std::nullopt, o);
        nodes = run.domain->nodes.size();
        benchmark::DoNotOptimize(distance_d(run).value);
    }
    st.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_js_solve)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_curve(benchmark::State& st) {
    for (auto _ : st) {
        const auto c = conjugate_vertical_boundary([](double s) { return 1.0 / (1.0 + s * s); }, 0.25, {-20.0, 20.0, 0.0},
                                                   {{0.0, 0.0}, 0.0});
        benchmark::DoNotOptimize(c.samples.size());
    }
}
BENCHMARK(BM_curve)->Unit(benchmark::kMillisecond);

static void BM_crossings(benchmark::State& st) {
    // rose with many self-crossings
    std::vector<BasePoint> poly;
    const int n = static_cast<int>(st.range(0));
    for (int i = 0; i < n; ++i) {
        const double t = 2.0 * std::numbers::pi * i / n;
        const double r = 0.8 * std::cos(5.0 * t);
        poly.push_back({r * std::cos(t), r * std::sin(t)});
    }
    for (auto _ : st) benchmark::DoNotOptimize(polyline_crossings(poly, true).size());
}
BENCHMARK(BM_crossings)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
