#include "qfloor/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qfloor/hsgs.hpp"
#include "qfloor/statevector.hpp"

namespace qfloor {

namespace {

void require_same_length(const SignVector& phi, const SignVector& psi) {
    if (phi.size() != psi.size()) {
        throw std::invalid_argument("vectors differ in length: " + std::to_string(phi.size()) +
                                    " vs " + std::to_string(psi.size()));
    }
}

double swap_test_p0_exact(const SignVector& phi, const SignVector& psi) {
    const auto circuit = build_swap_test_circuit(phi, psi);
    StateVector state(circuit.num_qubits);
    state.apply(circuit);
    return state.bit_probability(circuit.num_qubits - 1, 0);
}

// Recover |<psi|phi>| from P(ancilla=0), snapping the squared overlap onto
// its exact k/N grid when the residue is within the numerical guard. Going
// through the squared value avoids the sqrt blow-up of tiny residues near
// zero overlap.
double overlap_from_p0(double p0, std::size_t n, bool exact) {
    const double overlap_sq = std::max(0.0, 2.0 * p0 - 1.0);
    if (exact) {
        const double k = std::round(std::sqrt(overlap_sq) * double(n));
        const double snapped = k / double(n);
        if (std::abs(overlap_sq - snapped * snapped) < 1e-9) {
            return snapped;
        }
    }
    return std::sqrt(overlap_sq);
}

}  // namespace

double classical_dot(const SignVector& phi, const SignVector& psi) {
    require_same_length(phi, psi);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        sum += phi[i] * psi[i];
    }
    return double(sum) / double(phi.size());
}

double classical_absdot(const SignVector& phi, const SignVector& psi) {
    return std::abs(classical_dot(phi, psi));
}

Circuit build_swap_test_circuit(const SignVector& phi, const SignVector& psi) {
    require_same_length(phi, psi);
    const int n = phi.num_qubits();
    if (phi[0] != 1 || psi[0] != 1) {
        throw std::invalid_argument("build_swap_test_circuit requires canonical sign vectors");
    }

    const int ancilla = 2 * n;
    Circuit circuit(2 * n + 1);
    circuit.append_all(synthesize_encoding(phi));  // register A: qubits 0..n-1
    for (const auto& gate : synthesize_encoding(psi).gates) {  // register B: n..2n-1
        GateOp shifted = gate;
        shifted.target += n;
        for (int& c : shifted.controls) c += n;
        circuit.append(std::move(shifted));
    }
    circuit.append(GateOp::h(ancilla));
    for (int j = 0; j < n; ++j) {
        const int a = j;
        const int b = n + j;
        circuit.append(GateOp::cx({b}, a));
        circuit.append(GateOp::cx({ancilla, a}, b));
        circuit.append(GateOp::cx({b}, a));
    }
    circuit.append(GateOp::h(ancilla));
    return circuit;
}

SimilarityScore swap_test_similarity(const SignVector& phi, const SignVector& psi) {
    const auto canon_phi = canonicalize(phi);
    const auto canon_psi = canonicalize(psi);
    const double p0 = swap_test_p0_exact(canon_phi.vector, canon_psi.vector);
    return {overlap_from_p0(p0, phi.size(), true), SimilarityMethod::SwapTest};
}

SimilarityScore swap_test_similarity(const SignVector& phi, const SignVector& psi,
                                     const ShotConfig& config) {
    const auto canon_phi = canonicalize(phi);
    const auto canon_psi = canonicalize(psi);
    const double p0 = swap_test_p0_exact(canon_phi.vector, canon_psi.vector);
    const std::int64_t ones = sample_ones(1.0 - p0, config);
    const double p0_estimate = 1.0 - double(ones) / double(config.shots);
    return {overlap_from_p0(p0_estimate, phi.size(), false), SimilarityMethod::SwapTest};
}

int random_floor(const std::set<int>& floors, std::uint64_t seed) {
    if (floors.empty()) {
        throw std::invalid_argument("floor set must be non-empty");
    }
    std::mt19937_64 rng(scramble_seed(seed));
    std::uniform_int_distribution<std::size_t> dist(0, floors.size() - 1);
    auto it = floors.begin();
    std::advance(it, dist(rng));
    return *it;
}

std::string to_string(SimilarityMethod method) {
    switch (method) {
        case SimilarityMethod::ClassicalDot: return "classical";
        case SimilarityMethod::ClassicalAbsDot: return "classical-abs";
        case SimilarityMethod::QuantumNeuron: return "quantum";
        case SimilarityMethod::SwapTest: return "swap-test";
        case SimilarityMethod::Random: return "random";
    }
    throw std::invalid_argument("unknown similarity method");
}

SimilarityMethod method_from_string(const std::string& name) {
    if (name == "classical") return SimilarityMethod::ClassicalDot;
    if (name == "classical-abs") return SimilarityMethod::ClassicalAbsDot;
    if (name == "quantum") return SimilarityMethod::QuantumNeuron;
    if (name == "swap-test") return SimilarityMethod::SwapTest;
    if (name == "random") return SimilarityMethod::Random;
    throw std::invalid_argument("unknown method '" + name +
                                "' (expected classical, classical-abs, quantum, swap-test or "
                                "random)");
}

}  // namespace qfloor
