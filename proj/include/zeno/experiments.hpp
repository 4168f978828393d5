#pragma once

#include <cstdint>
#include <vector>

#include "zeno/circuit.hpp"
#include "zeno/sampling.hpp"

namespace zeno {

// Largest slice count the statevector backend will allocate ancillas for
// (n + 1 qubits per circuit); generous headroom over the n = 14 experiments.
inline constexpr int kMaxSweepN = 20;

struct BackendSet {
    bool statevector = true;
    bool channel = true;
    bool closed_form = true;

    bool any() const { return statevector || channel || closed_form; }
};

struct SweepConfig {
    double theta_total = 0.0;
    int n_min = 1;
    int n_max = 14;
    int shots = 8192;
    std::uint64_t seed = 0;
    BackendSet backends;

    void validate() const;
};

// One sweep point. Survival probabilities from backends that were not
// requested are left as NaN. `seed` is the per-point value (config seed
// XOR n) actually fed to the sampler.
struct SurvivalPoint {
    int n = 0;
    double p_exact = 0.0;
    double p_channel = 0.0;
    double p_closed = 0.0;
    int counts0 = 0;
    int counts1 = 0;
    int shots = 0;
    std::uint64_t seed = 0;
};

struct SurvivalCurve {
    double theta_total = 0.0;
    std::vector<SurvivalPoint> points; // sorted by n
};

// Single U3(theta, -pi/2, pi/2) on q0 followed by readout of q0.
Circuit build_rabi_circuit(double theta);

// n rounds of U3(theta/n, -pi/2, pi/2) on q0, each followed by a CNOT onto
// a fresh ancilla; (n + 1)-qubit register, readout of q0.
Circuit build_qze_circuit(double theta_total, int n);

// n_slices consecutive U3(theta/n_slices, -pi/2, pi/2) on a lone qubit,
// no CNOTs. Slicing alone must not change the survival probability.
Circuit build_sliced_rotation_circuit(double theta_total, int n_slices);

// Survival probabilities and shot histograms for n in [n_min, n_max].
SurvivalCurve run_sweep(const SweepConfig &config);

struct DecompositionReport {
    double p_single = 0.0;
    double p_sliced = 0.0;
    // Entrywise gap between the product of slice matrices and the single
    // rotation matrix.
    double max_gate_gap = 0.0;
};

// Checks the sliced rotation against the single gate at both the unitary
// and the survival-probability level.
DecompositionReport verify_decomposition(double theta_total, int n_slices);

} // namespace zeno
