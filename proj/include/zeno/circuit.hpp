#pragma once

#include <cstddef>
#include <vector>

#include "zeno/state_vector.hpp"

namespace zeno {

struct GateOp {
    enum class Kind { kU3, kCnot };

    Kind kind = Kind::kU3;
    std::size_t target = 0;
    std::size_t control = 0;                    // CNOT only
    double theta = 0.0, phi = 0.0, lambda = 0.0; // U3 only

    static GateOp u3(std::size_t target, double theta, double phi, double lambda);
    static GateOp cnot(std::size_t control, std::size_t target);
};

// Ordered U3/CNOT program on a fixed-width register. Readout is terminal
// and restricted to measured_qubit, which is q0 throughout.
struct Circuit {
    std::size_t num_qubits = 1;
    std::vector<GateOp> ops;
    std::size_t measured_qubit = 0;

    void add_u3(std::size_t target, double theta, double phi, double lambda);
    void add_cnot(std::size_t control, std::size_t target);

    // Throws index_error on any out-of-range wire or a self-targeting CNOT.
    void validate() const;
};

// Applies the ops in order to |0...0>.
StateVector run_circuit(const Circuit &circuit);

// State after each op, in order; length equals the number of ops.
std::vector<StateVector> trace_states(const Circuit &circuit);

} // namespace zeno
