#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zeno/circuit.hpp"
#include "zeno/experiments.hpp"

namespace zeno {

// Accepts `pi`, `pi/K`, `J*pi/K`, `J*pi`, or a plain decimal literal, and
// requires the value to land in [0, pi]. Throws parse_error otherwise,
// naming the offending token.
double parse_angle(const std::string &expr);

// Accepts `A..B` or a single integer `A` (meaning A..A).
std::pair<int, int> parse_n_range(const std::string &expr);

// One header plus one row per point per curve; probabilities carry 12
// significant digits and disabled backends leave their field empty.
// Byte-identical output for identical inputs.
std::string emit_csv(const std::vector<SurvivalCurve> &curves);
std::string emit_csv(const SurvivalCurve &curve);

// Mirrors the CSV fields, one object per point, each curve wrapped in
// {"theta": ..., "points": [...]}. A single curve serializes as one object,
// several as an array.
std::string emit_json(const std::vector<SurvivalCurve> &curves);

// Self-contained SVG 1.1 line chart: n on the x axis, survival probability
// on a fixed [0.4, 1.0] y axis, one polyline with point markers per curve,
// and a legend entry per theta. No external assets.
std::string emit_svg(const std::vector<SurvivalCurve> &curves);

// OpenQASM 2.0 with qelib1 gate names; angles carry 17 significant digits.
std::string emit_qasm(const Circuit &circuit);

// Appendix-style evolution listing: the initial ket followed by one line
// per op. Kets print q0 leftmost and grow only as new wires are touched;
// amplitudes carry 6 decimals and zero terms are dropped.
std::string print_trace(const Circuit &circuit);

} // namespace zeno
