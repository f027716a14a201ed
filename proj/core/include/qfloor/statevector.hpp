#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qfloor/circuit.hpp"

namespace qfloor {

// Dense state-vector simulator for the H/X/Z/C^pZ/C^pX gate set.
//
// Qubit j corresponds to bit j (least significant) of the basis index, so
// |i> for i = 5 on three qubits means qubit 0 = 1, qubit 1 = 0, qubit 2 = 1.
// Gates mutate the state in place; callers needing snapshots copy first.
class StateVector {
public:
    static constexpr int kMaxQubits = 24;  // 16M amplitudes

    explicit StateVector(int num_qubits);  // starts in |0...0>

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    std::complex<double> amplitude(std::size_t basis_index) const;
    std::span<const std::complex<double>> amplitudes() const { return amps_; }

    void apply(const GateOp& gate);
    void apply(const Circuit& circuit);

    // Probability of reading `value` (0 or 1) on `qubit` in the
    // computational basis; no collapse.
    double bit_probability(int qubit, int value) const;

    double norm_squared() const;

private:
    void check_gate(const GateOp& gate) const;

    int num_qubits_ = 0;
    std::vector<std::complex<double>> amps_;
};

}  // namespace qfloor
