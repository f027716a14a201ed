#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qfloor {

enum class GateKind { H, X, Z, CZ, CX };

// One gate over the register. H/X/Z carry no controls; CZ/CX carry at least
// one. A CZ with p controls is a C^pZ, a CX with p controls a C^pX.
struct GateOp {
    GateKind kind = GateKind::H;
    int target = 0;
    std::vector<int> controls;  // sorted ascending, disjoint from target

    static GateOp h(int target);
    static GateOp x(int target);
    static GateOp z(int target);
    static GateOp cz(std::vector<int> controls, int target);
    static GateOp cx(std::vector<int> controls, int target);

    bool operator==(const GateOp&) const = default;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<GateOp> gates;

    explicit Circuit(int num_qubits = 0);

    void append(GateOp gate);                // validates qubit indices
    void append_all(const Circuit& other);   // other.num_qubits must fit
};

struct GateCounts {
    std::int64_t h = 0;
    std::int64_t x = 0;         // X and multi-controlled X
    std::int64_t z_family = 0;  // Z and multi-controlled Z
    std::int64_t total = 0;
};

GateCounts gate_count(const Circuit& circuit);

// Text dump: header line "qubits <n>", then one gate per line, e.g.
//   H q0
//   CZ q0,q1 q2
std::string to_text(const GateOp& gate);
std::string to_text(const Circuit& circuit);

}  // namespace qfloor
