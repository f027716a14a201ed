#include <benchmark/benchmark.h>

#include <random>

#include "qfloor/statevector.hpp"

using namespace qfloor;

namespace {

StateVector prepared_state(int num_qubits) {
    StateVector state(num_qubits);
    for (int q = 0; q < num_qubits; ++q) {
        state.apply(GateOp::h(q));
    }
    return state;
}

}  // namespace

static void BM_HadamardGate(benchmark::State& state) {
    const int num_qubits = int(state.range(0));
    auto sv = prepared_state(num_qubits);
    const auto gate = GateOp::h(num_qubits / 2);
    for (auto _ : state) {
        sv.apply(gate);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << num_qubits));
}
BENCHMARK(BM_HadamardGate)->DenseRange(4, 20, 4);

static void BM_ControlledZ(benchmark::State& state) {
    const int num_qubits = int(state.range(0));
    auto sv = prepared_state(num_qubits);
    const auto gate = GateOp::cz({0, 1}, num_qubits - 1);
    for (auto _ : state) {
        sv.apply(gate);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << num_qubits));
}
BENCHMARK(BM_ControlledZ)->DenseRange(4, 20, 4);

static void BM_MultiControlledX(benchmark::State& state) {
    const int num_qubits = int(state.range(0));
    auto sv = prepared_state(num_qubits);
    std::vector<int> controls;
    for (int q = 0; q < num_qubits - 1; ++q) controls.push_back(q);
    const auto gate = GateOp::cx(controls, num_qubits - 1);
    for (auto _ : state) {
        sv.apply(gate);
        benchmark::DoNotOptimize(sv.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t(1) << num_qubits));
}
BENCHMARK(BM_MultiControlledX)->DenseRange(4, 20, 4);

BENCHMARK_MAIN();
