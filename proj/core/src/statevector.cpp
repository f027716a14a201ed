#include "qfloor/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace qfloor {

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (num_qubits > kMaxQubits) {
        throw std::length_error("state of " + std::to_string(num_qubits) +
                                " qubits exceeds the " + std::to_string(kMaxQubits) +
                                "-qubit capacity");
    }
    amps_.assign(std::size_t(1) << num_qubits, {0.0, 0.0});
    amps_[0] = {1.0, 0.0};
}

std::complex<double> StateVector::amplitude(std::size_t basis_index) const {
    if (basis_index >= amps_.size()) {
        throw std::out_of_range("basis index " + std::to_string(basis_index) +
                                " outside dimension " + std::to_string(amps_.size()));
    }
    return amps_[basis_index];
}

void StateVector::check_gate(const GateOp& gate) const {
    auto check = [&](int q) {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range("gate references qubit " + std::to_string(q) + " of a " +
                                    std::to_string(num_qubits_) + "-qubit state");
        }
    };
    check(gate.target);
    for (int c : gate.controls) {
        check(c);
        if (c == gate.target) {
            throw std::invalid_argument("control and target qubits must be distinct");
        }
    }
    if (gate.controls.empty() && (gate.kind == GateKind::CZ || gate.kind == GateKind::CX)) {
        throw std::invalid_argument("controlled gate without controls");
    }
}

void StateVector::apply(const GateOp& gate) {
    check_gate(gate);

    const std::size_t dim = amps_.size();
    const std::size_t tbit = std::size_t(1) << gate.target;
    std::size_t cmask = 0;
    for (int c : gate.controls) cmask |= std::size_t(1) << c;

    switch (gate.kind) {
        case GateKind::H: {
            static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
            const std::size_t period = tbit << 1;
            for (std::size_t base = 0; base < dim; base += period) {
                for (std::size_t off = 0; off < tbit; ++off) {
                    const std::size_t i0 = base + off;
                    const std::size_t i1 = i0 | tbit;
                    const auto a = amps_[i0];
                    const auto b = amps_[i1];
                    amps_[i0] = (a + b) * inv_sqrt2;
                    amps_[i1] = (a - b) * inv_sqrt2;
                }
            }
            break;
        }
        case GateKind::X: {
            const std::size_t period = tbit << 1;
            for (std::size_t base = 0; base < dim; base += period) {
                for (std::size_t off = 0; off < tbit; ++off) {
                    std::swap(amps_[base + off], amps_[(base + off) | tbit]);
                }
            }
            break;
        }
        case GateKind::Z: {
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & tbit) amps_[i] = -amps_[i];
            }
            break;
        }
        case GateKind::CZ: {
            // negate where all controls and the target read 1
            const std::size_t full = cmask | tbit;
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & full) == full) amps_[i] = -amps_[i];
            }
            break;
        }
        case GateKind::CX: {
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & cmask) == cmask && !(i & tbit)) {
                    std::swap(amps_[i], amps_[i | tbit]);
                }
            }
            break;
        }
    }
}

void StateVector::apply(const Circuit& circuit) {
    if (circuit.num_qubits > num_qubits_) {
        throw std::invalid_argument("circuit over " + std::to_string(circuit.num_qubits) +
                                    " qubits does not fit a " + std::to_string(num_qubits_) +
                                    "-qubit state");
    }
    for (const auto& gate : circuit.gates) {
        apply(gate);
    }
}

double StateVector::bit_probability(int qubit, int value) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " of a " +
                                std::to_string(num_qubits_) + "-qubit state");
    }
    if (value != 0 && value != 1) {
        throw std::invalid_argument("bit value must be 0 or 1");
    }
    const std::size_t bit = std::size_t(1) << qubit;
    double prob = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (((i & bit) != 0) == (value == 1)) {
            prob += std::norm(amps_[i]);
        }
    }
    return prob;
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps_) total += std::norm(a);
    return total;
}

}  // namespace qfloor
