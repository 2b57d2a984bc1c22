#include <benchmark/benchmark.h>

#include "isotower/builtin_maps.hpp"
#include "isotower/sampling.hpp"

using namespace isotower;
using sampling::Rng;

namespace {

void BM_EigSorted(benchmark::State& state) {
    Rng rng(1);
    auto a = sampling::random_hermitian(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(opcalc::eig_sorted(a));
}
BENCHMARK(BM_EigSorted)->Arg(4)->Arg(8);

void BM_ApplyB(benchmark::State& state) {
    Rng rng(2);
    int d = static_cast<int>(state.range(0));
    auto g = sampling::random_with_singulars(rng, d + 2, d, 0.1, 3.0);
    auto f = facial::hat(sampling::random_facial_dplus2(rng), d);
    for (auto _ : state) benchmark::DoNotOptimize(opcalc::apply_B(f, g));
}
BENCHMARK(BM_ApplyB)->Arg(3)->Arg(6);

void BM_QkRkRoundtrip(benchmark::State& state) {
    Rng rng(3);
    int d0 = static_cast<int>(state.range(0));
    auto p = sampling::random_tower_point(rng, d0, d0 + 3, d0 - 1);
    for (auto _ : state) benchmark::DoNotOptimize(tower::rk_map(tower::qk_map(p)));
}
BENCHMARK(BM_QkRkRoundtrip)->Arg(3)->Arg(5);

void BM_KPolynomial(benchmark::State& state) {
    Rng rng(4);
    kresidue::AbelianGroupSpec g{{12, 5}, 1};
    auto v = sampling::random_representation(rng, g, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kresidue::k_polynomial(v));
}
BENCHMARK(BM_KPolynomial)->Arg(3)->Arg(6);

void BM_ObstructionCheck(benchmark::State& state) {
    Rng rng(5);
    kresidue::AbelianGroupSpec g{{6}, 0};
    auto v0 = sampling::random_representation(rng, g, 3);
    auto v1 = sampling::random_representation(rng, g, 6);
    for (auto _ : state) benchmark::DoNotOptimize(kresidue::obstruction_check(v0, v1));
}
BENCHMARK(BM_ObstructionCheck);

void BM_CircleDegreeCollapse(benchmark::State& state) {
    auto m = std::get<facial::CircleMap>(*facial::builtin_map("f-double-prime"));
    for (auto _ : state) benchmark::DoNotOptimize(facial::circle_degree(m));
}
BENCHMARK(BM_CircleDegreeCollapse);

void BM_SphereDegree(benchmark::State& state) {
    auto m = std::get<facial::SphereMap>(*facial::builtin_map("g-triple-prime"));
    for (auto _ : state)
        benchmark::DoNotOptimize(facial::sphere_degree(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SphereDegree)->Arg(64)->Arg(192);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
}
