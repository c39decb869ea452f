#include <benchmark/benchmark.h>

#include <random>

#include "darboux/closed_forms.hpp"
#include "darboux/dressing.hpp"
#include "darboux/grid_io.hpp"

using namespace darboux;

namespace {

DressingSystem make_system(int n) {
    std::vector<SpectralParam> params;
    const cplx pool[8] = {{0, 1},      {0.5, 0.8},  {-0.6, 1.3}, {0.2, 0.5},
                          {-0.9, 0.7}, {0.7, 1.15}, {-0.3, 0.9}, {0.15, 1.4}};
    for (int k = 0; k < n; ++k)
        params.push_back(SpectralParam{pool[k]});
    return DressingSystem(params);
}

void BM_RField(benchmark::State& state) {
    const DressingSystem sys = make_system(static_cast<int>(state.range(0)));
    double x = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(r_field(sys, x, 0.3));
        x += 1e-4;
    }
}

void BM_Det(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMat m(n, n);
    for (auto& e : m.entries)
        e = cplx(u(rng), u(rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(det(m));
}

void BM_OneSoliton(benchmark::State& state) {
    const SpectralParam p{cplx(0.5, 1.0)};
    double x = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(one_soliton(p, x, 0.3));
        x += 1e-4;
    }
}

void BM_TwoSoliton(benchmark::State& state) {
    const SpectralParam p1{cplx(0.5, 1.0)}, p3{cplx(-0.5, 0.8)};
    double x = -2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(two_soliton(p1, p3, x, 0.3));
        x += 1e-4;
    }
}

void BM_SampleGrid(benchmark::State& state) {
    const DressingSystem sys = make_system(2);
    const auto field = [&](double x, double t) { return r_field(sys, x, t); };
    for (auto _ : state) {
        const FieldGrid g = sample(field, GridSpec{-5, 5, -1, 1, 64, 16});
        benchmark::DoNotOptimize(g.values.data());
    }
}

} // namespace

BENCHMARK(BM_RField)->Arg(1)->Arg(2)->Arg(3)->Arg(5)->Arg(8);
BENCHMARK(BM_Det)->Arg(2)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_OneSoliton);
BENCHMARK(BM_TwoSoliton);
BENCHMARK(BM_SampleGrid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
