#include <benchmark/benchmark.h>

#include "kzcbh/cbh.hpp"
#include "kzcbh/holonomy.hpp"
#include "kzcbh/mzv.hpp"
#include "kzcbh/projection.hpp"
#include "kzcbh/series.hpp"

using namespace kzcbh;

namespace {

// Dense group-like rational series: every word of every degree is hit.
Series dense_grouplike(int degree)
{
    Series sum = Series::generator(2, degree, 0) * make_rational(1, 3)
               + Series::generator(2, degree, 1) * make_rational(-2, 5);
    return exp(sum);
}

NumericSeries dense_numeric(int degree)
{
    return to_numeric(dense_grouplike(degree));
}

void BM_SeriesMultiplyRational(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    Series g = dense_grouplike(degree);
    for (auto _ : state)
        benchmark::DoNotOptimize(g * g);
    state.SetComplexityN(degree);
}
BENCHMARK(BM_SeriesMultiplyRational)->DenseRange(4, 8)->Complexity();

void BM_SeriesMultiplyNumeric(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    NumericSeries g = dense_numeric(degree);
    for (auto _ : state)
        benchmark::DoNotOptimize(g * g);
    state.SetComplexityN(degree);
}
BENCHMARK(BM_SeriesMultiplyNumeric)->DenseRange(4, 10)->Complexity();

void BM_ExpLogRoundtrip(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    Series sum = Series::generator(2, degree, 0) + Series::generator(2, degree, 1) * Rational(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(log(exp(sum)));
}
BENCHMARK(BM_ExpLogRoundtrip)->DenseRange(4, 8);

void BM_LieProjection(benchmark::State& state)
{
    const int degree = static_cast<int>(state.range(0));
    Series g = dense_grouplike(degree);
    for (auto _ : state)
        benchmark::DoNotOptimize(lie_project_p(log(g)));
}
BENCHMARK(BM_LieProjection)->DenseRange(3, 6);

void BM_CbhMap(benchmark::State& state)
{
    // feed the dense group-like series itself so every word is visited
    const int degree = static_cast<int>(state.range(0));
    Series g = dense_grouplike(degree);
    cbh_map(g); // warm the per-pattern tables; steady state is what matters
    for (auto _ : state)
        benchmark::DoNotOptimize(cbh_map(g));
}
BENCHMARK(BM_CbhMap)->DenseRange(3, 6);

void BM_MzvSeries(benchmark::State& state)
{
    Composition comp(std::vector<int>{2, 1, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(mzv_series(comp, 1e-8));
}
BENCHMARK(BM_MzvSeries);

void BM_MzvQuadrature(benchmark::State& state)
{
    AdmissibleSeq seq = AdmissibleSeq::parse("1,1,0,0");
    for (auto _ : state)
        benchmark::DoNotOptimize(mzv_quadrature(seq));
}
BENCHMARK(BM_MzvQuadrature);

void BM_OdeTransport(benchmark::State& state)
{
    ConnectionPath kz = kz_connection();
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(ode_transport(kz, 1e-3, 1.0 - 1e-3, steps, 3));
    state.SetComplexityN(steps);
}
BENCHMARK(BM_OdeTransport)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_ChenSeries(benchmark::State& state)
{
    ConnectionPath p = polynomial_path({{0.0, 1.0, -0.5}, {0.2, -0.3, 0.1}});
    SimplexIntegrator grid;
    for (auto _ : state) {
        double err = 0.0;
        benchmark::DoNotOptimize(chen_series(p, 0.0, 1.0, grid, 3, &err));
    }
}
BENCHMARK(BM_ChenSeries);

} // namespace

BENCHMARK_MAIN();
