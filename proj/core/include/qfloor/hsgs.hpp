#pragma once

#include "qfloor/circuit.hpp"
#include "qfloor/sign_vector.hpp"

namespace qfloor {

// Hypergraph-state synthesis of the two unitaries the neuron circuit needs.
// Both require a canonical input (entry 0 == +1): no Z-family gate can touch
// the |0...0> component, so a leading -1 is unpreparable up to global sign.

// Circuit preparing (1/sqrt(N)) sum_i phi[i] |i> from |0...0>: a layer of H
// on every qubit, then one multi-controlled-Z per sign mismatch, visited in
// ascending Hamming-weight order (ascending index within a weight class).
Circuit synthesize_encoding(const SignVector& phi);

// Circuit mapping the encoded |psi> to |1...1>: the self-inverse sign-flip
// network of psi, then H on every qubit, then X on every qubit.
Circuit synthesize_entangling(const SignVector& psi);

}  // namespace qfloor
