#include "fixloc/character.hpp"
#include "fixloc/counting.hpp"
#include "fixloc/feasibility.hpp"
#include "fixloc/toric.hpp"
#include "fixloc/verify.hpp"

#include <benchmark/benchmark.h>

using namespace fixloc;

static void BM_CountCircle(benchmark::State& state) {
    auto fps = restrict_to_circle(generate_toric(simplex_polytope(3)), {Integer(2), Integer(1)});
    const Integer l(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_Np(fps, 1, l, CircleMode{}));
}
BENCHMARK(BM_CountCircle)->Arg(10)->Arg(100)->Arg(1000);

static void BM_CountRankThree(benchmark::State& state) {
    auto fps = generate_toric(product_polytope(simplex_polytope(2), segment_polytope(2)));
    const Integer l(state.range(0));
    PolarizedMode mode{{Integer(3), Integer(2), Integer(1)}};
    for (auto _ : state)
        benchmark::DoNotOptimize(count_Np(fps, 0, l, mode));
}
BENCHMARK(BM_CountRankThree)->Arg(10)->Arg(40);

static void BM_CharacterSimplex(benchmark::State& state) {
    auto fps = generate_toric(simplex_polytope(static_cast<unsigned>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(character_exact(fps, Convention::Negated));
}
BENCHMARK(BM_CharacterSimplex)->Arg(2)->Arg(8)->Arg(32);

static void BM_StrictFeasibility(benchmark::State& state) {
    auto fps = generate_toric(product_polytope(simplex_polytope(2), segment_polytope(2)));
    for (auto _ : state)
        benchmark::DoNotOptimize(strict_feasibility_certified(fps.all_weights()));
}
BENCHMARK(BM_StrictFeasibility);

static void BM_VerifyCancellation(benchmark::State& state) {
    auto fps = generate_toric(simplex_polytope(3));
    VerifyOptions opt;
    opt.window = state.range(0);
    PolarizedMode mode{{Integer(2), Integer(1)}};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_cancellation(fps, mode, opt));
}
BENCHMARK(BM_VerifyCancellation)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
