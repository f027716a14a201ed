#include "qfloor/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qfloor {

namespace {

GateOp make_controlled(GateKind kind, std::vector<int> controls, int target) {
    if (controls.empty()) {
        throw std::invalid_argument("controlled gate needs at least one control");
    }
    std::sort(controls.begin(), controls.end());
    if (std::adjacent_find(controls.begin(), controls.end()) != controls.end()) {
        throw std::invalid_argument("duplicate control qubit");
    }
    if (std::binary_search(controls.begin(), controls.end(), target)) {
        throw std::invalid_argument("control and target qubits must be distinct");
    }
    return GateOp{kind, target, std::move(controls)};
}

}  // namespace

GateOp GateOp::h(int target) { return GateOp{GateKind::H, target, {}}; }
GateOp GateOp::x(int target) { return GateOp{GateKind::X, target, {}}; }
GateOp GateOp::z(int target) { return GateOp{GateKind::Z, target, {}}; }

GateOp GateOp::cz(std::vector<int> controls, int target) {
    return make_controlled(GateKind::CZ, std::move(controls), target);
}

GateOp GateOp::cx(std::vector<int> controls, int target) {
    return make_controlled(GateKind::CX, std::move(controls), target);
}

Circuit::Circuit(int num_qubits_in) : num_qubits(num_qubits_in) {
    if (num_qubits < 0) {
        throw std::invalid_argument("circuit qubit count must be non-negative");
    }
}

void Circuit::append(GateOp gate) {
    auto in_range = [&](int q) { return q >= 0 && q < num_qubits; };
    if (!in_range(gate.target)) {
        throw std::out_of_range("gate target q" + std::to_string(gate.target) +
                                " outside " + std::to_string(num_qubits) + "-qubit circuit");
    }
    for (int c : gate.controls) {
        if (!in_range(c)) {
            throw std::out_of_range("gate control q" + std::to_string(c) + " outside " +
                                    std::to_string(num_qubits) + "-qubit circuit");
        }
    }
    gates.push_back(std::move(gate));
}

void Circuit::append_all(const Circuit& other) {
    if (other.num_qubits > num_qubits) {
        throw std::invalid_argument("cannot append a wider circuit");
    }
    for (const auto& gate : other.gates) {
        append(gate);
    }
}

GateCounts gate_count(const Circuit& circuit) {
    GateCounts counts;
    for (const auto& gate : circuit.gates) {
        switch (gate.kind) {
            case GateKind::H: ++counts.h; break;
            case GateKind::X:
            case GateKind::CX: ++counts.x; break;
            case GateKind::Z:
            case GateKind::CZ: ++counts.z_family; break;
        }
    }
    counts.total = static_cast<std::int64_t>(circuit.gates.size());
    return counts;
}

std::string to_text(const GateOp& gate) {
    std::ostringstream out;
    switch (gate.kind) {
        case GateKind::H: out << "H"; break;
        case GateKind::X: out << "X"; break;
        case GateKind::Z: out << "Z"; break;
        case GateKind::CZ: out << "CZ"; break;
        case GateKind::CX: out << "CX"; break;
    }
    if (!gate.controls.empty()) {
        out << ' ';
        for (std::size_t i = 0; i < gate.controls.size(); ++i) {
            if (i > 0) out << ',';
            out << 'q' << gate.controls[i];
        }
    }
    out << " q" << gate.target;
    return out.str();
}

std::string to_text(const Circuit& circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits << '\n';
    for (const auto& gate : circuit.gates) {
        out << to_text(gate) << '\n';
    }
    return out.str();
}

}  // namespace qfloor
