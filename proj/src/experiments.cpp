#include "zeno/experiments.hpp"

#include <cmath>
#include <string>

#include "zeno/errors.hpp"
#include "zeno/survival.hpp"

namespace zeno {

namespace {

void check_theta(double theta, const char *who) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > kPi)
        throw invalid_parameter_error(std::string(who) + ": theta must lie in [0, pi]");
}

} // namespace

void SweepConfig::validate() const {
    check_theta(theta_total, "SweepConfig");
    if (n_min < 1 || n_min > n_max)
        throw invalid_parameter_error("SweepConfig: need 1 <= n_min <= n_max");
    if (n_max > kMaxSweepN)
        throw capacity_error("SweepConfig: n_max " + std::to_string(n_max) + " exceeds cap " +
                             std::to_string(kMaxSweepN));
    if (shots < 1)
        throw invalid_parameter_error("SweepConfig: shots must be >= 1");
    if (!backends.any())
        throw invalid_parameter_error("SweepConfig: at least one backend must be enabled");
}

Circuit build_rabi_circuit(double theta) {
    check_theta(theta, "build_rabi_circuit");
    Circuit c;
    c.num_qubits = 1;
    c.measured_qubit = 0;
    c.add_u3(0, theta, -kPi / 2.0, kPi / 2.0);
    return c;
}

Circuit build_qze_circuit(double theta_total, int n) {
    check_theta(theta_total, "build_qze_circuit");
    if (n < 1)
        throw invalid_parameter_error("build_qze_circuit: n must be >= 1");
    if (n > kMaxSweepN)
        throw capacity_error("build_qze_circuit: n " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kMaxSweepN));

    Circuit c;
    c.num_qubits = static_cast<std::size_t>(n) + 1;
    c.measured_qubit = 0;
    const double slice = theta_total / n;
    for (int k = 1; k <= n; ++k) {
        c.add_u3(0, slice, -kPi / 2.0, kPi / 2.0);
        c.add_cnot(0, static_cast<std::size_t>(k)); // fresh ancilla per round
    }
    return c;
}

Circuit build_sliced_rotation_circuit(double theta_total, int n_slices) {
    check_theta(theta_total, "build_sliced_rotation_circuit");
    if (n_slices < 1)
        throw invalid_parameter_error("build_sliced_rotation_circuit: n_slices must be >= 1");

    Circuit c;
    c.num_qubits = 1;
    c.measured_qubit = 0;
    const double slice = theta_total / n_slices;
    for (int k = 0; k < n_slices; ++k)
        c.add_u3(0, slice, -kPi / 2.0, kPi / 2.0);
    return c;
}

SurvivalCurve run_sweep(const SweepConfig &config) {
    config.validate();

    SurvivalCurve curve;
    curve.theta_total = config.theta_total;
    curve.points.reserve(static_cast<std::size_t>(config.n_max - config.n_min) + 1);

    const double nan = std::nan("");
    for (int n = config.n_min; n <= config.n_max; ++n) {
        const ZenoParams params{config.theta_total, n};

        SurvivalPoint pt;
        pt.n = n;
        pt.p_exact = config.backends.statevector
                         ? run_circuit(build_qze_circuit(config.theta_total, n)).prob_qubit0(0)
                         : nan;
        pt.p_channel = config.backends.channel ? survival_via_channel(params) : nan;
        pt.p_closed = config.backends.closed_form ? survival_closed_form(params) : nan;

        double p_sample = pt.p_exact;
        if (std::isnan(p_sample))
            p_sample = pt.p_channel;
        if (std::isnan(p_sample))
            p_sample = pt.p_closed;

        pt.seed = config.seed ^ static_cast<std::uint64_t>(n);
        const ShotHistogram hist = sample_shots(p_sample, config.shots, pt.seed);
        pt.counts0 = hist.counts0;
        pt.counts1 = hist.counts1;
        pt.shots = hist.shots;

        curve.points.push_back(pt);
    }
    return curve;
}

DecompositionReport verify_decomposition(double theta_total, int n_slices) {
    check_theta(theta_total, "verify_decomposition");
    if (n_slices < 1)
        throw invalid_parameter_error("verify_decomposition: n_slices must be >= 1");

    DecompositionReport report;
    report.p_single = run_circuit(build_rabi_circuit(theta_total)).prob_qubit0(0);
    report.p_sliced =
        run_circuit(build_sliced_rotation_circuit(theta_total, n_slices)).prob_qubit0(0);

    const Mat2 single = u3_matrix(theta_total, -kPi / 2.0, kPi / 2.0);
    const Mat2 slice = u3_matrix(theta_total / n_slices, -kPi / 2.0, kPi / 2.0);
    Mat2 product = Mat2::identity();
    for (int k = 0; k < n_slices; ++k)
        product = slice * product;
    report.max_gate_gap = product.max_abs_diff(single);
    return report;
}

} // namespace zeno
