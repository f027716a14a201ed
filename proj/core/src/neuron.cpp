#include "qfloor/neuron.hpp"

#include <cmath>
#include <stdexcept>

#include "qfloor/hsgs.hpp"
#include "qfloor/statevector.hpp"

namespace qfloor {

namespace {

// Activations of +/-1 vectors live exactly on the grid {0, 1/N, 2/N, ..., 1}
// (even multiples when N is even). N is a power of two, so grid points are
// representable; snap simulated values whose residue is below the guard and
// let anything farther off propagate raw into the tolerance checks.
double snap_to_activation_grid(double raw, std::size_t n) {
    const double k = std::round(raw * double(n));
    const double snapped = k / double(n);
    return std::abs(raw - snapped) < 1e-9 ? snapped : raw;
}

}  // namespace

Circuit build_neuron_circuit(const SignVector& phi, const SignVector& psi) {
    if (phi.size() != psi.size()) {
        throw std::invalid_argument("fingerprint and user vectors differ in length: " +
                                    std::to_string(phi.size()) + " vs " +
                                    std::to_string(psi.size()));
    }
    const int n = phi.num_qubits();
    if (phi[0] != 1 || psi[0] != 1) {
        throw std::invalid_argument("build_neuron_circuit requires canonical sign vectors");
    }

    Circuit circuit(n + 1);
    circuit.append_all(synthesize_encoding(phi));
    circuit.append_all(synthesize_entangling(psi));
    std::vector<int> data(n);
    for (int q = 0; q < n; ++q) data[q] = q;
    circuit.append(GateOp::cx(std::move(data), n));
    return circuit;
}

ActivationResult activation_exact(const SignVector& phi, const SignVector& psi) {
    const auto canon_phi = canonicalize(phi);
    const auto canon_psi = canonicalize(psi);
    const auto circuit = build_neuron_circuit(canon_phi.vector, canon_psi.vector);

    const int n = canon_phi.vector.num_qubits();
    const std::size_t n_sources = canon_phi.vector.size();
    StateVector state(n + 1);
    state.apply(circuit);

    // Only the data=|N-1> component carries ancilla 1 after the final C^nX.
    const std::size_t index = (std::size_t(1) << n) | (n_sources - 1);
    const double magnitude =
        snap_to_activation_grid(std::abs(state.amplitude(index)), n_sources);

    ActivationResult result;
    result.activation_magnitude = magnitude;
    result.probability_one = magnitude * magnitude;
    result.mode = ActivationMode::Exact;
    result.shots_used = 0;
    return result;
}

ActivationResult activation_sampled(const SignVector& phi, const SignVector& psi,
                                    const ShotConfig& config) {
    const auto exact = activation_exact(phi, psi);
    const std::int64_t ones = sample_ones(exact.probability_one, config);

    ActivationResult result;
    result.probability_one = double(ones) / double(config.shots);
    result.activation_magnitude = std::sqrt(result.probability_one);
    result.mode = ActivationMode::Sampled;
    result.shots_used = config.shots;
    return result;
}

}  // namespace qfloor
