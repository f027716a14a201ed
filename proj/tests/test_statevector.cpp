#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "qfloor/shots.hpp"
#include "qfloor/statevector.hpp"

using namespace qfloor;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

double max_component_distance(const StateVector& state, const oracle::Amplitudes& expected) {
    double worst = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        worst = std::max(worst, std::abs(state.amplitude(i) - expected[i]));
    }
    return worst;
}

// Random circuit over the supported gate kinds, for property checks.
Circuit random_circuit(int num_qubits, std::size_t num_gates, std::mt19937_64& rng) {
    Circuit circuit(num_qubits);
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int> qubit(0, num_qubits - 1);
    for (std::size_t g = 0; g < num_gates; ++g) {
        const int target = qubit(rng);
        switch (kind(rng)) {
            case 0: circuit.append(GateOp::h(target)); break;
            case 1: circuit.append(GateOp::x(target)); break;
            case 2: circuit.append(GateOp::z(target)); break;
            default: {
                int control = qubit(rng);
                while (control == target) control = qubit(rng);
                if (kind(rng) % 2) {
                    circuit.append(GateOp::cz({control}, target));
                } else {
                    circuit.append(GateOp::cx({control}, target));
                }
            }
        }
    }
    return circuit;
}

}  // namespace

TEST_CASE("zero state construction") {
    StateVector one(1);
    CHECK(one.dim() == 2);
    CHECK(one.amplitude(0) == std::complex<double>(1.0, 0.0));
    CHECK(one.amplitude(1) == std::complex<double>(0.0, 0.0));

    StateVector three(3);
    CHECK(three.dim() == 8);
    CHECK(three.amplitude(0).real() == 1.0);
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(three.amplitude(i) == std::complex<double>(0.0, 0.0));
    }
}

TEST_CASE("capacity and index errors") {
    CHECK_THROWS_AS(StateVector(25), std::length_error);
    CHECK_THROWS_AS(StateVector(0), std::invalid_argument);
    CHECK_THROWS_AS(StateVector(-3), std::invalid_argument);

    StateVector state(2);
    CHECK_THROWS_AS((void)state.amplitude(4), std::out_of_range);
    CHECK_THROWS_AS(state.apply(GateOp::h(2)), std::out_of_range);
    CHECK_THROWS_AS(state.apply(GateOp::cz({3}, 0)), std::out_of_range);
    CHECK_THROWS_AS(state.apply(GateOp{GateKind::CX, 1, {1}}), std::invalid_argument);
}

TEST_CASE("hadamard on |0> and |1>") {
    StateVector state(1);
    state.apply(GateOp::h(0));
    CHECK(state.amplitude(0).real() == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(state.amplitude(1).real() == doctest::Approx(kInvSqrt2).epsilon(1e-12));

    StateVector flipped(1);
    flipped.apply(GateOp::x(0));
    flipped.apply(GateOp::h(0));
    CHECK(flipped.amplitude(0).real() == doctest::Approx(kInvSqrt2).epsilon(1e-12));
    CHECK(flipped.amplitude(1).real() == doctest::Approx(-kInvSqrt2).epsilon(1e-12));
}

TEST_CASE("CZ and Z match the worked two-qubit states") {
    // uniform superposition, then CZ(q0, q1) negates only |11>
    StateVector state(2);
    state.apply(GateOp::h(0));
    state.apply(GateOp::h(1));
    state.apply(GateOp::cz({0}, 1));
    CHECK(state.amplitude(0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(state.amplitude(1).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(state.amplitude(2).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(state.amplitude(3).real() == doctest::Approx(-0.5).epsilon(1e-12));

    // Z on qubit 1 negates the two indices whose second bit is set
    StateVector other(2);
    other.apply(GateOp::h(0));
    other.apply(GateOp::h(1));
    other.apply(GateOp::z(1));
    CHECK(other.amplitude(0).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(other.amplitude(1).real() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(other.amplitude(2).real() == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(other.amplitude(3).real() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("gate kernels agree with dense matrix products") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        const int num_qubits = 2 + int(rng() % 4);  // 2..5
        const auto circuit = random_circuit(num_qubits, 40, rng);

        StateVector state(num_qubits);
        state.apply(circuit);
        const auto expected = oracle::apply_circuit_dense(circuit, oracle::zero_state(num_qubits));
        CHECK(max_component_distance(state, expected) < 1e-12);
    }
}

TEST_CASE("norm is preserved across long random gate sequences") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 3; ++trial) {
        const int num_qubits = 3 + trial * 2;  // 3, 5, 7
        StateVector state(num_qubits);
        state.apply(random_circuit(num_qubits, 10000, rng));
        CHECK(std::abs(state.norm_squared() - 1.0) < 1e-9);
    }
}

TEST_CASE("H, X, Z and C^pZ are self-inverse") {
    std::mt19937_64 rng(3);
    const int num_qubits = 4;
    const auto prep = random_circuit(num_qubits, 60, rng);

    StateVector reference(num_qubits);
    reference.apply(prep);

    const GateOp candidates[] = {GateOp::h(2), GateOp::x(0), GateOp::z(3),
                                 GateOp::cz({0}, 2), GateOp::cz({1, 3}, 0),
                                 GateOp::cx({0, 1, 2}, 3)};
    for (const auto& gate : candidates) {
        StateVector state(num_qubits);
        state.apply(prep);
        state.apply(gate);
        state.apply(gate);
        for (std::size_t i = 0; i < state.dim(); ++i) {
            CHECK(std::abs(state.amplitude(i) - reference.amplitude(i)) < 1e-10);
        }
    }
}

TEST_CASE("C^pZ is symmetric under control/target relabeling") {
    std::mt19937_64 rng(11);
    const int num_qubits = 4;
    const auto prep = random_circuit(num_qubits, 50, rng);

    const GateOp variants[] = {GateOp::cz({0, 1}, 3), GateOp::cz({0, 3}, 1),
                               GateOp::cz({1, 3}, 0)};
    StateVector reference(num_qubits);
    reference.apply(prep);
    reference.apply(variants[0]);
    for (int v = 1; v < 3; ++v) {
        StateVector state(num_qubits);
        state.apply(prep);
        state.apply(variants[v]);
        for (std::size_t i = 0; i < state.dim(); ++i) {
            CHECK(std::abs(state.amplitude(i) - reference.amplitude(i)) < 1e-12);
        }
    }
}

TEST_CASE("bit_probability sums the right amplitudes") {
    StateVector state(3);
    state.apply(GateOp::h(0));
    state.apply(GateOp::cx({0}, 2));
    CHECK(state.bit_probability(2, 1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(state.bit_probability(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)state.bit_probability(3, 0), std::out_of_range);
    CHECK_THROWS_AS((void)state.bit_probability(0, 2), std::invalid_argument);
}

TEST_CASE("sample_ones edge probabilities and validation") {
    CHECK(sample_ones(0.0, {1000, 1}) == 0);
    CHECK(sample_ones(1.0, {1000, 1}) == 1000);
    CHECK_THROWS_AS(sample_ones(-0.1, {10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sample_ones(1.1, {10, 1}), std::invalid_argument);
    CHECK_THROWS_AS(sample_ones(0.5, {0, 1}), std::invalid_argument);
}

TEST_CASE("sample_ones is deterministic per seed and statistically sane") {
    const ShotConfig config{8192, 20240809};
    const auto count = sample_ones(0.25, config);
    CHECK(sample_ones(0.25, config) == count);
    CHECK(sample_ones(0.25, config) == count);

    // 4-sigma band around p = 0.25 at k = 8192 (sigma ~ 0.0048)
    const double estimate = double(count) / double(config.shots);
    CHECK(estimate > 0.23);
    CHECK(estimate < 0.27);

    CHECK(sample_ones(0.25, {8192, 1}) != sample_ones(0.25, {8192, 2}));
}

TEST_CASE("pair seed derivation is order-free and spreads indices") {
    const auto a = derive_pair_seed(99, 3, 17);
    CHECK(a == derive_pair_seed(99, 3, 17));
    CHECK(a != derive_pair_seed(99, 3, 18));
    CHECK(a != derive_pair_seed(99, 4, 17));
    CHECK(derive_pair_seed(99, 0, 0) == 99);
}
