#include "zeno/matrix.hpp"

#include <cmath>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

Mat2 Mat2::identity() {
    Mat2 m;
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    return m;
}

Mat2 Mat2::zero() { return Mat2{}; }

Mat2 Mat2::operator*(const Mat2 &rhs) const {
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.at(r, c) = at(r, 0) * rhs(0, c) + at(r, 1) * rhs(1, c);
    return out;
}

Mat2 Mat2::adjoint() const {
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.at(r, c) = std::conj(at(c, r));
    return out;
}

double Mat2::max_abs_diff(const Mat2 &rhs) const {
    double m = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        m = std::max(m, std::abs(e[i] - rhs.e[i]));
    return m;
}

bool Mat2::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity()) <= tol;
}

bool Mat2::is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

bool Mat2::all_finite() const {
    for (const cplx &v : e)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return false;
    return true;
}

Mat2 hamiltonian_matrix(double omega) {
    if (!std::isfinite(omega))
        throw invalid_parameter_error("hamiltonian_matrix: omega must be finite");
    Mat2 m;
    m.at(0, 1) = omega;
    m.at(1, 0) = omega;
    return m;
}

Mat2 evolution_operator(double omega, double t) {
    if (!std::isfinite(omega) || !std::isfinite(t))
        throw invalid_parameter_error("evolution_operator: omega and t must be finite");
    const double a = omega * t;
    const cplx c{std::cos(a), 0.0};
    const cplx s{0.0, -std::sin(a)};
    Mat2 m;
    m.at(0, 0) = c;
    m.at(0, 1) = s;
    m.at(1, 0) = s;
    m.at(1, 1) = c;
    return m;
}

Mat2 exponentiate_hamiltonian(const Mat2 &h, double t) {
    if (!h.all_finite() || !std::isfinite(t))
        throw invalid_parameter_error("exponentiate_hamiltonian: entries and t must be finite");
    if (!h.is_hermitian())
        throw invalid_parameter_error("exponentiate_hamiltonian: matrix is not Hermitian");

    // Split h = m*I + K with K traceless. For Hermitian h, K^2 = r^2 * I
    // with r = sqrt(dz^2 + |b|^2), so the eigenvalues are m +/- r and
    // exp(-i h t) = e^{-i m t} (cos(rt) I - i (sin(rt)/r) K).
    const double mean = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double dz = 0.5 * (h(0, 0).real() - h(1, 1).real());
    const cplx b = h(0, 1);
    const double r = std::sqrt(dz * dz + std::norm(b));

    const double cr = std::cos(r * t);
    const double sr_over_r = (r > 0.0) ? std::sin(r * t) / r : t; // sin(rt)/r -> t as r -> 0
    const cplx phase = std::polar(1.0, -mean * t);
    const cplx mi{0.0, -1.0};

    Mat2 out;
    out.at(0, 0) = phase * (cplx{cr, 0.0} + mi * sr_over_r * dz);
    out.at(0, 1) = phase * (mi * sr_over_r * b);
    out.at(1, 0) = phase * (mi * sr_over_r * std::conj(b));
    out.at(1, 1) = phase * (cplx{cr, 0.0} - mi * sr_over_r * dz);
    return out;
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
    if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(lambda))
        throw invalid_parameter_error("u3_matrix: angles must be finite");
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    Mat2 m;
    m.at(0, 0) = c;
    m.at(0, 1) = -std::polar(1.0, lambda) * s;
    m.at(1, 0) = std::polar(1.0, phi) * s;
    m.at(1, 1) = std::polar(1.0, lambda + phi) * c;
    return m;
}

namespace {

bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

} // namespace

MatN::MatN(std::size_t d) : dim(d), e(d * d) {
    if (dim < 2 || !is_power_of_two(dim))
        throw invalid_parameter_error("MatN: dimension must be 2^k with k >= 1, got " +
                                      std::to_string(d));
}

MatN MatN::identity(std::size_t dim) {
    MatN m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        m.at(i, i) = 1.0;
    return m;
}

MatN MatN::operator*(const MatN &rhs) const {
    if (dim != rhs.dim)
        throw invalid_parameter_error("MatN: dimension mismatch in product");
    MatN out(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t k = 0; k < dim; ++k) {
            const cplx v = at(r, k);
            if (v == cplx{})
                continue;
            for (std::size_t c = 0; c < dim; ++c)
                out.at(r, c) += v * rhs(k, c);
        }
    return out;
}

MatN MatN::adjoint() const {
    MatN out(dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            out.at(r, c) = std::conj(at(c, r));
    return out;
}

std::vector<cplx> MatN::apply(const std::vector<cplx> &v) const {
    if (v.size() != dim)
        throw invalid_parameter_error("MatN: vector length mismatch in apply");
    std::vector<cplx> out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        cplx acc{};
        for (std::size_t c = 0; c < dim; ++c)
            acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

double MatN::max_abs_diff(const MatN &rhs) const {
    if (dim != rhs.dim)
        throw invalid_parameter_error("MatN: dimension mismatch in max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < e.size(); ++i)
        m = std::max(m, std::abs(e[i] - rhs.e[i]));
    return m;
}

bool MatN::is_unitary(double tol) const {
    return (adjoint() * *this).max_abs_diff(identity(dim)) <= tol;
}

} // namespace zeno
