#include "zeno/circuit.hpp"

#include <string>

#include "zeno/errors.hpp"

namespace zeno {

GateOp GateOp::u3(std::size_t target, double theta, double phi, double lambda) {
    GateOp op;
    op.kind = Kind::kU3;
    op.target = target;
    op.theta = theta;
    op.phi = phi;
    op.lambda = lambda;
    return op;
}

GateOp GateOp::cnot(std::size_t control, std::size_t target) {
    GateOp op;
    op.kind = Kind::kCnot;
    op.control = control;
    op.target = target;
    return op;
}

void Circuit::add_u3(std::size_t target, double theta, double phi, double lambda) {
    ops.push_back(GateOp::u3(target, theta, phi, lambda));
}

void Circuit::add_cnot(std::size_t control, std::size_t target) {
    ops.push_back(GateOp::cnot(control, target));
}

void Circuit::validate() const {
    if (measured_qubit >= num_qubits)
        throw index_error("Circuit: measured qubit out of range");
    for (std::size_t i = 0; i < ops.size(); ++i) {
        const GateOp &op = ops[i];
        if (op.target >= num_qubits)
            throw index_error("Circuit: op " + std::to_string(i) + " targets wire " +
                              std::to_string(op.target) + " outside register");
        if (op.kind == GateOp::Kind::kCnot) {
            if (op.control >= num_qubits)
                throw index_error("Circuit: op " + std::to_string(i) + " controls wire " +
                                  std::to_string(op.control) + " outside register");
            if (op.control == op.target)
                throw index_error("Circuit: op " + std::to_string(i) +
                                  " has control equal to target");
        }
    }
}

namespace {

void apply_op(StateVector &state, const GateOp &op) {
    if (op.kind == GateOp::Kind::kU3)
        state.apply_u3(op.target, op.theta, op.phi, op.lambda);
    else
        state.apply_cnot(op.control, op.target);
}

} // namespace

StateVector run_circuit(const Circuit &circuit) {
    circuit.validate();
    StateVector state(circuit.num_qubits);
    for (const GateOp &op : circuit.ops)
        apply_op(state, op);
    return state;
}

std::vector<StateVector> trace_states(const Circuit &circuit) {
    circuit.validate();
    std::vector<StateVector> steps;
    steps.reserve(circuit.ops.size());
    StateVector state(circuit.num_qubits);
    for (const GateOp &op : circuit.ops) {
        apply_op(state, op);
        steps.push_back(state);
    }
    return steps;
}

} // namespace zeno
