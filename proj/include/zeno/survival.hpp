#pragma once

namespace zeno {

// Total rotation theta = 2*omega*t, split evenly over n measured slices.
struct ZenoParams {
    double theta_total = 0.0;
    int n = 1;

    // n >= 1 and theta_total in [0, pi]; values above pi are rejected
    // rather than wrapped so cos never aliases silently.
    void validate() const;
};

// Exact survival probability after n slice-and-dephase rounds.
//
// Each round rotates by theta/n and then kills the off-diagonal of the
// readout qubit, so the diagonal evolves as a two-state Markov chain with
// per-step stay probability cos^2(theta/2n). Its n-step return probability
// is (1 + cos^n(theta/n)) / 2. The test suite re-derives this number by
// enumerating all 2^n classical outcome paths before anything else trusts it.
double survival_closed_form(const ZenoParams &params);

// Same quantity computed operationally: iterate a 2x2 density matrix,
// conjugating by u3(theta/n, -pi/2, pi/2) and zeroing the off-diagonal each
// round. Never touches ancilla wires; agrees with the closed form to 1e-12.
double survival_via_channel(const ZenoParams &params);

// Small-time quadratic approximation 1 - (omega*t)^2 for a single interval.
double taylor_survival_single(double omega, double t);

// Linearized n-interval approximation 1 - (omega*t)^2 / n.
double taylor_survival_n(double omega, double t, int n);

// Pre-truncation n-interval form (1 - (omega*t/n)^2)^n. Kept alongside the
// linearized form so their order-1/n^2 gap can be measured instead of
// assumed away.
double taylor_survival_n_product(double omega, double t, int n);

} // namespace zeno
