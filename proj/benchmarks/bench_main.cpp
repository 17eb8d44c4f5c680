#include <benchmark/benchmark.h>

#include "coxarr/affine.h"
#include "coxarr/catalog.h"
#include "coxarr/cli/hunt.h"
#include "coxarr/random.h"
#include "coxarr/regions.h"
#include "coxarr/sphere.h"

namespace {

using namespace coxarr;

void BM_BuildComplex(benchmark::State& state, const char* name) {
    const auto a = coxeter_3d(name).arrangement;
    for (auto _ : state) benchmark::DoNotOptimize(build_complex(a));
}
BENCHMARK_CAPTURE(BM_BuildComplex, B3, "B3");
BENCHMARK_CAPTURE(BM_BuildComplex, H3, "H3");

void BM_AllRegionsIsometric(benchmark::State& state) {
    const auto c = build_complex(coxeter_3d("H3").arrangement);
    for (auto _ : state) benchmark::DoNotOptimize(all_regions_isometric(c, c.tol));
}
BENCHMARK(BM_AllRegionsIsometric);

void BM_MirrorClosure(benchmark::State& state) {
    const auto a = coxeter_3d("H3").arrangement;
    for (auto _ : state) benchmark::DoNotOptimize(is_coxeter_mirror_closure(a));
}
BENCHMARK(BM_MirrorClosure);

void BM_RankTwo(benchmark::State& state) {
    const auto a = coxeter_3d("H3").arrangement;
    for (auto _ : state) benchmark::DoNotOptimize(is_coxeter_rank_two(a));
}
BENCHMARK(BM_RankTwo);

void BM_EnumerateRegions(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    Rng rng(1);
    std::vector<VecD> normals;
    for (std::size_t i = 0; i < n; ++i) normals.push_back(random_unit_vector(dim, rng));
    const auto a = make_arrangement(dim, normals);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_regions(a));
}
BENCHMARK(BM_EnumerateRegions)->Args({3, 15})->Args({4, 8})->Args({5, 10});

void BM_HuntTrial(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    std::uint64_t trial = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cli::score_trial(dim, n, trial, Rng::derive_seed(42, trial)));
        ++trial;
    }
}
BENCHMARK(BM_HuntTrial)->Args({3, 6})->Args({4, 8});

void BM_AffineFamily(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(
            affine_family(AffineFamily::ShearedA2t, {1.0, 0.35, 0.0, 1.2}, Window::square(4.0)));
}
BENCHMARK(BM_AffineFamily);

}  // namespace

BENCHMARK_MAIN();
