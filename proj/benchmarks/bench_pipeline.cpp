#include <benchmark/benchmark.h>

#include <random>

#include "qfloor/eval.hpp"
#include "qfloor/hsgs.hpp"
#include "qfloor/neuron.hpp"
#include "qfloor/synthetic.hpp"

using namespace qfloor;

namespace {

SignVector random_canonical(std::size_t length, std::mt19937_64& rng) {
    std::vector<std::int8_t> entries(length, 1);
    for (std::size_t i = 1; i < length; ++i) {
        entries[i] = (rng() & 1) ? 1 : -1;
    }
    return SignVector(std::move(entries));
}

}  // namespace

static void BM_SynthesizeEncoding(benchmark::State& state) {
    std::mt19937_64 rng(1);
    const auto v = random_canonical(std::size_t(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(synthesize_encoding(v));
    }
}
BENCHMARK(BM_SynthesizeEncoding)->RangeMultiplier(4)->Range(4, 1024);

static void BM_ActivationExact(benchmark::State& state) {
    std::mt19937_64 rng(2);
    const auto phi = random_canonical(std::size_t(state.range(0)), rng);
    const auto psi = random_canonical(std::size_t(state.range(0)), rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(activation_exact(phi, psi).activation_magnitude);
    }
}
BENCHMARK(BM_ActivationExact)->RangeMultiplier(4)->Range(4, 1024);

static void BM_MatchSample(benchmark::State& state) {
    SyntheticConfig config;
    config.floors_per_building = {4, 4, 5, 3};
    config.samples_per_floor = 40;
    const auto records = generate_synthetic(config);
    const auto data = build_db(records, select_aps(records, int(state.range(0))), {0.7, 1});
    const EvalOptions options{SimilarityMethod::QuantumNeuron, std::nullopt, 0, 1};
    std::size_t sample = 0;
    for (auto _ : state) {
        const auto& psi = data.test[sample++ % data.test.size()].signs;
        benchmark::DoNotOptimize(match_sample(data.db, psi, options).estimated_floor);
    }
    state.SetItemsProcessed(state.iterations() * std::int64_t(data.db.m()));
}
BENCHMARK(BM_MatchSample)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
