#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "zeno/matrix.hpp"

namespace zeno {

// 24 qubits = 128 MiB of amplitudes; anything above that is a config bug.
inline constexpr std::size_t kMaxQubits = 24;

// 2x2 reduced density matrix of the readout qubit q0.
struct QubitDensity {
    Mat2 rho;

    double p0() const { return rho(0, 0).real(); }
    double p1() const { return rho(1, 1).real(); }
    double offdiag_mag() const;

    // Eigenvalues in ascending order (closed form for Hermitian 2x2).
    std::array<double, 2> eigenvalues() const;

    // Hermitian, unit trace, and positive semidefinite up to tol.
    bool well_formed(double tol = kMatTol) const;
};

// Full 2^q-amplitude register. Qubit k occupies bit k of the amplitude
// index, so q0 is the least significant bit. Ket strings elsewhere print
// q0 leftmost; this class only ever sees flat indices.
class StateVector {
  public:
    // |0...0> on num_qubits wires.
    explicit StateVector(std::size_t num_qubits);

    // Adopts an explicit amplitude list; length must be 2^num_qubits and the
    // norm must already be 1 within 1e-10.
    static StateVector from_amplitudes(std::size_t num_qubits, std::vector<cplx> amps);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<cplx> &amps() const { return amps_; }
    cplx amp(std::uint64_t index) const { return amps_[index]; }

    void apply_u3(std::size_t target, double theta, double phi, double lambda);
    void apply_cnot(std::size_t control, std::size_t target);

    // Probability that measuring q0 yields `outcome` (0 or 1).
    double prob_qubit0(int outcome) const;

    double norm_sq() const;

    // Partial trace over every wire except q0.
    QubitDensity reduced_density_q0() const;

  private:
    StateVector() = default;

    std::size_t num_qubits_ = 0;
    std::vector<cplx> amps_;
};

} // namespace zeno
