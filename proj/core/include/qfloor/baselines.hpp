#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "qfloor/circuit.hpp"
#include "qfloor/shots.hpp"
#include "qfloor/sign_vector.hpp"

namespace qfloor {

enum class SimilarityMethod { ClassicalDot, ClassicalAbsDot, QuantumNeuron, SwapTest, Random };

struct SimilarityScore {
    double value = 0.0;
    SimilarityMethod method = SimilarityMethod::ClassicalDot;
};

// (1/N) sum_i psi[i] * phi[i]; signed, in [-1, 1].
double classical_dot(const SignVector& phi, const SignVector& psi);
// Magnitude ranking oracle matching the quantum observable.
double classical_absdot(const SignVector& phi, const SignVector& psi);

// Prior-art overlap circuit over 1+2n qubits: phi encoded on qubits 0..n-1,
// psi on n..2n-1, ancilla = 2n. Controlled swaps are decomposed into
// CX(B->A) C^2X(anc,A->B) CX(B->A) so no new gate kinds are needed.
// P(ancilla=0) = (1 + |<psi|phi>|^2) / 2. Inputs must be canonical.
Circuit build_swap_test_circuit(const SignVector& phi, const SignVector& psi);

// Recovered |<psi|phi>| = sqrt(max(0, 2 P(ancilla=0) - 1)); the clamp
// absorbs sampled P0 estimates below 1/2 at small overlaps.
SimilarityScore swap_test_similarity(const SignVector& phi, const SignVector& psi);
SimilarityScore swap_test_similarity(const SignVector& phi, const SignVector& psi,
                                     const ShotConfig& config);

// Uniform draw over a non-empty floor-label set; deterministic per seed.
int random_floor(const std::set<int>& floors, std::uint64_t seed);

std::string to_string(SimilarityMethod method);
SimilarityMethod method_from_string(const std::string& name);

}  // namespace qfloor
