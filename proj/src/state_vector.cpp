#include "zeno/state_vector.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "zeno/errors.hpp"

namespace zeno {

double QubitDensity::offdiag_mag() const { return std::abs(rho(0, 1)); }

std::array<double, 2> QubitDensity::eigenvalues() const {
    const double mean = 0.5 * (rho(0, 0).real() + rho(1, 1).real());
    const double dz = 0.5 * (rho(0, 0).real() - rho(1, 1).real());
    const double r = std::sqrt(dz * dz + std::norm(rho(0, 1)));
    return {mean - r, mean + r};
}

bool QubitDensity::well_formed(double tol) const {
    if (!rho.is_hermitian(tol))
        return false;
    if (std::abs(rho(0, 0) + rho(1, 1) - cplx{1.0, 0.0}) > tol)
        return false;
    return eigenvalues()[0] >= -tol;
}

StateVector::StateVector(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw capacity_error("StateVector: qubit count " + std::to_string(num_qubits) +
                             " outside [1, " + std::to_string(kMaxQubits) + "]");
    num_qubits_ = num_qubits;
    amps_.assign(std::size_t{1} << num_qubits, cplx{});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::size_t num_qubits, std::vector<cplx> amps) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw capacity_error("StateVector: qubit count " + std::to_string(num_qubits) +
                             " outside [1, " + std::to_string(kMaxQubits) + "]");
    if (amps.size() != (std::size_t{1} << num_qubits))
        throw invalid_parameter_error("StateVector: amplitude list length must be 2^num_qubits");
    StateVector sv;
    sv.num_qubits_ = num_qubits;
    sv.amps_ = std::move(amps);
    if (std::abs(sv.norm_sq() - 1.0) > 1e-10)
        throw invalid_parameter_error("StateVector: amplitudes are not normalized");
    return sv;
}

void StateVector::apply_u3(std::size_t target, double theta, double phi, double lambda) {
    if (target >= num_qubits_)
        throw index_error("apply_u3: target " + std::to_string(target) + " out of range");
    const Mat2 u = u3_matrix(theta, phi, lambda);

    // Enumerate amplitude pairs that differ only in the target bit:
    // j runs over all indices with the target bit removed, i0 re-inserts a 0.
    const std::uint64_t mask = std::uint64_t{1} << target;
    const std::uint64_t lo_mask = mask - 1;
    const std::uint64_t hi_mask = ~lo_mask;
    const std::uint64_t pairs = std::uint64_t{1} << (num_qubits_ - 1);
    for (std::uint64_t j = 0; j < pairs; ++j) {
        const std::uint64_t i0 = ((j & hi_mask) << 1) | (j & lo_mask);
        const std::uint64_t i1 = i0 | mask;
        const cplx a0 = amps_[i0];
        const cplx a1 = amps_[i1];
        amps_[i0] = u(0, 0) * a0 + u(0, 1) * a1;
        amps_[i1] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    if (control >= num_qubits_ || target >= num_qubits_)
        throw index_error("apply_cnot: qubit index out of range");
    if (control == target)
        throw index_error("apply_cnot: control equals target");

    const std::uint64_t cmask = std::uint64_t{1} << control;
    const std::uint64_t tmask = std::uint64_t{1} << target;
    const std::uint64_t n = size();
    for (std::uint64_t i = 0; i < n; ++i)
        if ((i & cmask) != 0 && (i & tmask) == 0)
            std::swap(amps_[i], amps_[i | tmask]);
}

double StateVector::prob_qubit0(int outcome) const {
    const std::uint64_t want = outcome ? 1 : 0;
    double p = 0.0;
    const std::uint64_t n = size();
    for (std::uint64_t i = 0; i < n; ++i)
        if ((i & 1) == want)
            p += std::norm(amps_[i]);
    return p;
}

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const cplx &a : amps_)
        s += std::norm(a);
    return s;
}

QubitDensity StateVector::reduced_density_q0() const {
    // rho[a][b] = sum over the other wires of amp(a, rest) * conj(amp(b, rest)).
    cplx r00{}, r01{}, r11{};
    const std::uint64_t rests = size() >> 1;
    for (std::uint64_t rest = 0; rest < rests; ++rest) {
        const cplx a0 = amps_[rest << 1];
        const cplx a1 = amps_[(rest << 1) | 1];
        r00 += a0 * std::conj(a0);
        r01 += a0 * std::conj(a1);
        r11 += a1 * std::conj(a1);
    }
    QubitDensity d;
    d.rho.at(0, 0) = r00;
    d.rho.at(0, 1) = r01;
    d.rho.at(1, 0) = std::conj(r01);
    d.rho.at(1, 1) = r11;
    return d;
}

} // namespace zeno
