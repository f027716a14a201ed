#include "qfloor/hsgs.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace qfloor {

namespace {

void require_canonical(const SignVector& v, const char* what) {
    v.num_qubits();  // rejects non-power-of-two lengths
    if (v[0] != 1) {
        throw std::invalid_argument(std::string(what) +
                                    " requires a canonical sign vector (entry 0 must be +1)");
    }
}

// One corrective C^(p-1)Z per residual sign mismatch, visited in ascending
// Hamming weight p then ascending index. A gate on the 1-bits of index i
// negates every basis state that is a bitwise superset of i, so the tracked
// signs are updated accordingly and lower weights are never revisited.
void append_sign_flips(Circuit& circuit, const SignVector& v) {
    const std::size_t n_states = v.size();
    const int n_qubits = v.num_qubits();
    std::vector<std::int8_t> tracked(n_states, 1);

    for (int weight = 1; weight <= n_qubits; ++weight) {
        for (std::size_t i = 1; i < n_states; ++i) {
            if (std::popcount(i) != weight || tracked[i] == v[i]) {
                continue;
            }
            std::vector<int> qubits;
            for (int q = 0; q < n_qubits; ++q) {
                if (i & (std::size_t(1) << q)) qubits.push_back(q);
            }
            const int target = qubits.back();
            if (qubits.size() == 1) {
                circuit.append(GateOp::z(target));
            } else {
                qubits.pop_back();
                circuit.append(GateOp::cz(std::move(qubits), target));
            }
            for (std::size_t j = i; j < n_states; ++j) {
                if ((j & i) == i) tracked[j] = -tracked[j];
            }
        }
    }
}

}  // namespace

Circuit synthesize_encoding(const SignVector& phi) {
    require_canonical(phi, "synthesize_encoding");
    const int n = phi.num_qubits();
    Circuit circuit(n);
    for (int q = 0; q < n; ++q) {
        circuit.append(GateOp::h(q));
    }
    append_sign_flips(circuit, phi);
    return circuit;
}

Circuit synthesize_entangling(const SignVector& psi) {
    require_canonical(psi, "synthesize_entangling");
    const int n = psi.num_qubits();
    Circuit circuit(n);
    append_sign_flips(circuit, psi);
    for (int q = 0; q < n; ++q) {
        circuit.append(GateOp::h(q));
    }
    for (int q = 0; q < n; ++q) {
        circuit.append(GateOp::x(q));
    }
    return circuit;
}

}  // namespace qfloor
