#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace zeno {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Entrywise max-norm tolerance for unitarity/Hermiticity checks.
inline constexpr double kMatTol = 1e-12;

// Dense 2x2 complex matrix, row-major. Cheap to copy; treated as a value.
struct Mat2 {
    std::array<cplx, 4> e{};

    static Mat2 identity();
    static Mat2 zero();

    cplx &at(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
    const cplx &at(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
    cplx operator()(int r, int c) const { return at(r, c); }

    Mat2 operator*(const Mat2 &rhs) const;
    Mat2 adjoint() const;

    double max_abs_diff(const Mat2 &rhs) const;
    bool is_unitary(double tol = kMatTol) const;
    bool is_hermitian(double tol = kMatTol) const;
    bool all_finite() const;
};

// Rabi Hamiltonian [[0, omega], [omega, 0]]; Hermitian by construction.
Mat2 hamiltonian_matrix(double omega);

// Time evolution exp(-i H t) for the Rabi Hamiltonian, written out in
// closed trigonometric form: [[cos(wt), -i sin(wt)], [-i sin(wt), cos(wt)]].
Mat2 evolution_operator(double omega, double t);

// exp(-i h t) for a Hermitian 2x2 h via its closed-form spectral
// decomposition. Independent of evolution_operator; the two must agree
// entrywise when h = hamiltonian_matrix(omega).
Mat2 exponentiate_hamiltonian(const Mat2 &h, double t);

// General single-qubit rotation
// [[cos(th/2), -e^{i la} sin(th/2)], [e^{i ph} sin(th/2), e^{i(la+ph)} cos(th/2)]].
// With (ph, la) = (-pi/2, pi/2) this equals evolution_operator with th = 2wt.
Mat2 u3_matrix(double theta, double phi, double lambda);

// Dense complex matrix of power-of-two dimension. Used by tests to build
// full-register unitaries for small qubit counts; not on any hot path.
struct MatN {
    std::size_t dim = 0;
    std::vector<cplx> e; // row-major dim*dim

    MatN() = default;
    explicit MatN(std::size_t dim);
    static MatN identity(std::size_t dim);

    cplx &at(std::size_t r, std::size_t c) { return e[r * dim + c]; }
    const cplx &at(std::size_t r, std::size_t c) const { return e[r * dim + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    MatN operator*(const MatN &rhs) const;
    MatN adjoint() const;
    std::vector<cplx> apply(const std::vector<cplx> &v) const;

    double max_abs_diff(const MatN &rhs) const;
    bool is_unitary(double tol = kMatTol) const;
};

} // namespace zeno
