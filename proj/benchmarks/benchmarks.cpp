#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rootpoly/roots.hpp"
#include "rootpoly/search.hpp"
#include "rootpoly/series.hpp"

using namespace rootpoly;

namespace {

DensePoly random_poly(u64 p, std::size_t deg, u64 seed) {
    std::mt19937_64 rng(seed);
    std::vector<u64> c(deg + 1);
    for (auto& x : c) x = rng() % p;
    c[deg] = 1 + rng() % (p - 1);
    return DensePoly(p, c);
}

void BM_poly_mul(benchmark::State& state) {
    const u64 p = 10007;
    const auto deg = static_cast<std::size_t>(state.range(0));
    DensePoly a = random_poly(p, deg, 1);
    DensePoly b = random_poly(p, deg, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_poly_mul)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_interpolate(benchmark::State& state) {
    const u64 p = 10007;
    const auto m = static_cast<std::size_t>(state.range(0));
    TaskGeometry geo = TaskGeometry::build(p, 2);
    std::vector<std::pair<FieldElement, FieldElement>> pts(m);
    for (std::size_t j = 0; j < m; ++j)
        pts[j] = {FieldElement(geo.nodes[j], p), FieldElement(geo.bases[j], p)};
    for (auto _ : state) benchmark::DoNotOptimize(interpolate(pts));
}
BENCHMARK(BM_interpolate)->RangeMultiplier(4)->Range(16, 1024);

void BM_verify(benchmark::State& state) {
    const u64 p = 9973; // 5 mod 8, all (p-1)/2 squares checked per call
    DensePoly f = construct_5mod8(p);
    RootTask task(p, 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_root_poly(f, task));
    state.counters["nodes/s"] =
        benchmark::Counter(static_cast<double>(task.size()) * state.iterations(),
                           benchmark::Counter::kIsRate);
}
BENCHMARK(BM_verify);

void BM_sign_walk(benchmark::State& state) {
    const auto threads = static_cast<unsigned>(state.range(0));
    u64 vectors = 0;
    for (auto _ : state) {
        SearchReport r = min_degree_exhaustive(37, 2, threads);
        vectors = r.vectors;
        benchmark::DoNotOptimize(r);
    }
    state.counters["vectors/s"] = benchmark::Counter(
        static_cast<double>(vectors) * state.iterations(), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_sign_walk)->Arg(1)->Arg(2)->Arg(4);

void BM_binomial_series(benchmark::State& state) {
    const auto terms = static_cast<std::size_t>(state.range(0));
    std::vector<Rational> f{1, Rational(1, 2), 0, Rational(-2, 3)};
    f[1].canonicalize();
    f[3].canonicalize();
    for (auto _ : state) benchmark::DoNotOptimize(binomial_series(f, 1, 2, terms));
}
BENCHMARK(BM_binomial_series)->Arg(50)->Arg(100)->Arg(200);

} // namespace
