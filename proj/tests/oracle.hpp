#pragma once

// Test-only brute-force oracles. Everything here goes through dense matrix
// products and direct formula evaluation, independent of the simulator's
// gate kernels and of the synthesis code paths it is used to check.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qfloor/circuit.hpp"
#include "qfloor/sign_vector.hpp"

namespace oracle {

using Amplitudes = std::vector<std::complex<double>>;
using Matrix = std::vector<Amplitudes>;  // row-major, dense 2^q x 2^q

// Eq.-style amplitude encoding: (1/sqrt(N)) sum_i v[i] |i>.
inline Amplitudes amplitude_encode(const qfloor::SignVector& v) {
    Amplitudes amps(v.size());
    const double scale = 1.0 / std::sqrt(double(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        amps[i] = double(v[i]) * scale;
    }
    return amps;
}

// Full 2^q x 2^q unitary of one gate, built entry by entry from the gate's
// action on basis states.
inline Matrix dense_gate_matrix(const qfloor::GateOp& gate, int num_qubits) {
    const std::size_t dim = std::size_t(1) << num_qubits;
    Matrix m(dim, Amplitudes(dim, {0.0, 0.0}));
    const std::size_t tbit = std::size_t(1) << gate.target;
    std::size_t cmask = 0;
    for (int c : gate.controls) cmask |= std::size_t(1) << c;

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (std::size_t col = 0; col < dim; ++col) {
        switch (gate.kind) {
            case qfloor::GateKind::H:
                if (col & tbit) {
                    m[col & ~tbit][col] = inv_sqrt2;
                    m[col][col] = -inv_sqrt2;
                } else {
                    m[col][col] = inv_sqrt2;
                    m[col | tbit][col] = inv_sqrt2;
                }
                break;
            case qfloor::GateKind::X:
                m[col ^ tbit][col] = 1.0;
                break;
            case qfloor::GateKind::Z:
                m[col][col] = (col & tbit) ? -1.0 : 1.0;
                break;
            case qfloor::GateKind::CZ:
                m[col][col] = ((col & (cmask | tbit)) == (cmask | tbit)) ? -1.0 : 1.0;
                break;
            case qfloor::GateKind::CX:
                if ((col & cmask) == cmask) {
                    m[col ^ tbit][col] = 1.0;
                } else {
                    m[col][col] = 1.0;
                }
                break;
        }
    }
    return m;
}

inline Amplitudes matrix_vector(const Matrix& m, const Amplitudes& v) {
    Amplitudes out(v.size(), {0.0, 0.0});
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) {
            out[r] += m[r][c] * v[c];
        }
    }
    return out;
}

// Runs a circuit by full matrix products against an explicit start state.
inline Amplitudes apply_circuit_dense(const qfloor::Circuit& circuit, Amplitudes state) {
    for (const auto& gate : circuit.gates) {
        state = matrix_vector(dense_gate_matrix(gate, circuit.num_qubits), state);
    }
    return state;
}

inline Amplitudes zero_state(int num_qubits) {
    Amplitudes amps(std::size_t(1) << num_qubits, {0.0, 0.0});
    amps[0] = 1.0;
    return amps;
}

// Signed Eq.-1 dot product with 1/N normalization.
inline double normalized_dot(const qfloor::SignVector& phi, const qfloor::SignVector& psi) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < phi.size(); ++i) sum += phi[i] * psi[i];
    return double(sum) / double(phi.size());
}

// Canonical sign vector (entry 0 fixed to +1) with the remaining entries
// drawn from the bits of `code`; enumerating code over [0, 2^(n-1)) walks
// every canonical vector of length n.
inline qfloor::SignVector canonical_from_code(std::size_t length, std::uint64_t code) {
    std::vector<std::int8_t> entries(length, 1);
    for (std::size_t i = 1; i < length; ++i) {
        if (code & (std::uint64_t(1) << (i - 1))) entries[i] = -1;
    }
    return qfloor::SignVector(std::move(entries));
}

inline qfloor::SignVector random_canonical(std::size_t length, std::mt19937_64& rng) {
    std::vector<std::int8_t> entries(length, 1);
    for (std::size_t i = 1; i < length; ++i) {
        entries[i] = (rng() & 1) ? 1 : -1;
    }
    return qfloor::SignVector(std::move(entries));
}

inline qfloor::SignVector random_sign_vector(std::size_t length, std::mt19937_64& rng) {
    std::vector<std::int8_t> entries(length);
    for (auto& e : entries) e = (rng() & 1) ? 1 : -1;
    return qfloor::SignVector(std::move(entries));
}

}  // namespace oracle
