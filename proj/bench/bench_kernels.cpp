#include "trajsimp/datagen.hpp"
#include "trajsimp/harness.hpp"

#include <benchmark/benchmark.h>

#include <thread>

using namespace trajsimp;

namespace {

const std::vector<Trajectory>& corpus()
{
    static const std::vector<Trajectory> c = gen_mixed_corpus(400, 500, 5000, 5.0, 7);
    return c;
}

std::int64_t corpus_points()
{
    std::int64_t n = 0;
    for (const Trajectory& t : corpus())
        n += static_cast<std::int64_t>(t.size());
    return n;
}

FitConfig config_for(Algorithm a)
{
    return fit_config_for(a, 20.0, kPi / 3.0, Optimizations::all());
}

void BM_Serial(benchmark::State& state)
{
    const auto algo = static_cast<Algorithm>(state.range(0));
    const FitConfig cfg = config_for(algo);
    for (auto _ : state)
        benchmark::DoNotOptimize(compress_corpus_serial(algo, corpus(), cfg));
    state.SetItemsProcessed(state.iterations() * corpus_points());
    state.SetLabel(to_string(algo));
}

void BM_Parallel(benchmark::State& state)
{
    const auto algo = static_cast<Algorithm>(state.range(0));
    const int threads = static_cast<int>(state.range(1));
    const FitConfig cfg = config_for(algo);
    for (auto _ : state)
        benchmark::DoNotOptimize(compress_corpus_parallel(algo, corpus(), cfg, threads));
    state.SetItemsProcessed(state.iterations() * corpus_points());
    state.SetLabel(to_string(algo) + " x" + std::to_string(threads));
}

void algorithms(benchmark::internal::Benchmark* b)
{
    for (Algorithm a : {Algorithm::Dp, Algorithm::Opw, Algorithm::Fbqs, Algorithm::Operb, Algorithm::OperbA})
        b->Args({static_cast<std::int64_t>(a)});
}

void algorithms_and_threads(benchmark::internal::Benchmark* b)
{
    const int hw = std::max(1u, std::thread::hardware_concurrency());
    for (Algorithm a : {Algorithm::Dp, Algorithm::Operb, Algorithm::OperbA})
        for (int t = 1; t <= hw; t *= 2)
            b->Args({static_cast<std::int64_t>(a), t});
}

// Single long trajectory, to see per-point cost and its growth with n.
void BM_SingleTrajectory(benchmark::State& state)
{
    const auto algo = static_cast<Algorithm>(state.range(0));
    const Trajectory t = gen_random_walk(static_cast<std::size_t>(state.range(1)), 5.0, 3);
    const FitConfig cfg = fit_config_for(algo, 40.0, kPi / 3.0, Optimizations::all());
    for (auto _ : state)
        benchmark::DoNotOptimize(compress(algo, t, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(1));
    state.SetLabel(to_string(algo));
}

} // namespace

BENCHMARK(BM_Serial)->Apply(algorithms)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->Apply(algorithms_and_threads)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleTrajectory)
    ->ArgsProduct({{static_cast<std::int64_t>(Algorithm::Operb), static_cast<std::int64_t>(Algorithm::Dp)},
                   {100000, 200000, 400000}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
