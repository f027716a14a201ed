#pragma once

#include <cstdint>

#include "qfloor/circuit.hpp"
#include "qfloor/shots.hpp"
#include "qfloor/sign_vector.hpp"

namespace qfloor {

enum class ActivationMode { Exact, Sampled };

struct ActivationResult {
    double activation_magnitude = 0.0;  // |<psi|phi>| with 1/N normalization
    double probability_one = 0.0;       // P(ancilla reads 1)
    ActivationMode mode = ActivationMode::Exact;
    std::int64_t shots_used = 0;        // 0 in exact mode
};

// Full neuron circuit over n+1 qubits (data = qubits 0..n-1, ancilla = n):
// the phi encoding stage, the psi entangling stage, then one C^nX that flips
// the ancilla when the data register reads |N-1>. Inputs must be canonical
// sign vectors of the same power-of-two length.
Circuit build_neuron_circuit(const SignVector& phi, const SignVector& psi);

// Simulates the neuron circuit and reads the activation off the single
// ancilla=1 amplitude. Canonicalizes internally; the discarded global signs
// cannot affect the measured magnitude.
ActivationResult activation_exact(const SignVector& phi, const SignVector& psi);

// Shot-estimated activation: P(a=1) = count(a=1) / shots.
ActivationResult activation_sampled(const SignVector& phi, const SignVector& psi,
                                    const ShotConfig& config);

}  // namespace qfloor
