#include "zeno/survival.hpp"

#include <cmath>
#include <string>

#include "zeno/errors.hpp"
#include "zeno/matrix.hpp"

namespace zeno {

void ZenoParams::validate() const {
    if (n < 1)
        throw invalid_parameter_error("ZenoParams: n must be >= 1, got " + std::to_string(n));
    if (!std::isfinite(theta_total) || theta_total < 0.0 || theta_total > kPi)
        throw invalid_parameter_error("ZenoParams: theta_total must lie in [0, pi]");
}

double survival_closed_form(const ZenoParams &params) {
    params.validate();
    const double c = std::cos(params.theta_total / params.n);
    return 0.5 * (1.0 + std::pow(c, static_cast<double>(params.n)));
}

double survival_via_channel(const ZenoParams &params) {
    params.validate();
    const Mat2 u = u3_matrix(params.theta_total / params.n, -kPi / 2.0, kPi / 2.0);
    const Mat2 u_dag = u.adjoint();

    Mat2 rho; // |0><0|
    rho.at(0, 0) = 1.0;
    for (int step = 0; step < params.n; ++step) {
        rho = u * rho * u_dag;
        rho.at(0, 1) = 0.0;
        rho.at(1, 0) = 0.0;
    }
    return rho(0, 0).real();
}

double taylor_survival_single(double omega, double t) {
    if (!std::isfinite(omega) || !std::isfinite(t))
        throw invalid_parameter_error("taylor_survival_single: inputs must be finite");
    const double x = omega * t;
    return 1.0 - x * x;
}

double taylor_survival_n(double omega, double t, int n) {
    if (!std::isfinite(omega) || !std::isfinite(t))
        throw invalid_parameter_error("taylor_survival_n: inputs must be finite");
    if (n < 1)
        throw invalid_parameter_error("taylor_survival_n: n must be >= 1");
    const double x = omega * t;
    return 1.0 - x * x / n;
}

double taylor_survival_n_product(double omega, double t, int n) {
    if (!std::isfinite(omega) || !std::isfinite(t))
        throw invalid_parameter_error("taylor_survival_n_product: inputs must be finite");
    if (n < 1)
        throw invalid_parameter_error("taylor_survival_n_product: n must be >= 1");
    const double x = omega * t / n;
    return std::pow(1.0 - x * x, static_cast<double>(n));
}

} // namespace zeno
