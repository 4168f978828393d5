#include "zeno/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "zeno/errors.hpp"

namespace zeno {

namespace {

std::string trim(const std::string &s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

long parse_positive_int(const std::string &token, const std::string &context) {
    if (token.empty() || token.size() > 9)
        throw parse_error("bad integer '" + token + "' in '" + context + "'");
    long v = 0;
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw parse_error("bad integer '" + token + "' in '" + context + "'");
        v = v * 10 + (ch - '0');
    }
    if (v < 1)
        throw parse_error("integer must be positive in '" + context + "'");
    return v;
}

std::string fmt_g(double v, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant, v);
    return buf;
}

std::string fmt_f(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

// Probability field: 12 significant digits, empty when the backend was off.
std::string fmt_prob(double v) { return std::isnan(v) ? std::string{} : fmt_g(v, 12); }

// First survival value that was actually computed for this point.
double plotted_value(const SurvivalPoint &pt) {
    if (!std::isnan(pt.p_exact))
        return pt.p_exact;
    if (!std::isnan(pt.p_channel))
        return pt.p_channel;
    return pt.p_closed;
}

} // namespace

double parse_angle(const std::string &expr) {
    const std::string s = trim(expr);
    if (s.empty())
        throw parse_error("empty angle expression");

    double value = 0.0;
    const std::size_t p = s.find("pi");
    if (p != std::string::npos) {
        const std::string pre = s.substr(0, p);
        const std::string post = s.substr(p + 2);
        long num = 1, den = 1;
        if (!pre.empty()) {
            if (pre.back() != '*')
                throw parse_error("expected '*' before 'pi' in '" + s + "'");
            num = parse_positive_int(pre.substr(0, pre.size() - 1), s);
        }
        if (!post.empty()) {
            if (post.front() != '/')
                throw parse_error("expected '/' after 'pi' in '" + s + "'");
            den = parse_positive_int(post.substr(1), s);
        }
        value = static_cast<double>(num) * kPi / static_cast<double>(den);
    } else {
        const char *begin = s.c_str();
        char *end = nullptr;
        value = std::strtod(begin, &end);
        if (end != begin + s.size())
            throw parse_error("bad angle expression '" + s + "'");
        if (!std::isfinite(value))
            throw parse_error("angle expression '" + s + "' is not finite");
    }

    if (value < 0.0 || value > kPi)
        throw parse_error("angle '" + s + "' is outside [0, pi]");
    return value;
}

std::pair<int, int> parse_n_range(const std::string &expr) {
    const std::string s = trim(expr);
    const std::size_t dots = s.find("..");
    if (dots == std::string::npos) {
        const long v = parse_positive_int(s, s);
        return {static_cast<int>(v), static_cast<int>(v)};
    }
    const long lo = parse_positive_int(trim(s.substr(0, dots)), s);
    const long hi = parse_positive_int(trim(s.substr(dots + 2)), s);
    if (lo > hi)
        throw parse_error("empty range '" + s + "'");
    return {static_cast<int>(lo), static_cast<int>(hi)};
}

std::string emit_csv(const std::vector<SurvivalCurve> &curves) {
    std::string out = "theta,n,p_exact,p_channel,p_closed,counts0,counts1,shots,seed\n";
    for (const SurvivalCurve &curve : curves) {
        const std::string theta = fmt_g(curve.theta_total, 17);
        for (const SurvivalPoint &pt : curve.points) {
            out += theta;
            out += ',' + std::to_string(pt.n);
            out += ',' + fmt_prob(pt.p_exact);
            out += ',' + fmt_prob(pt.p_channel);
            out += ',' + fmt_prob(pt.p_closed);
            out += ',' + std::to_string(pt.counts0);
            out += ',' + std::to_string(pt.counts1);
            out += ',' + std::to_string(pt.shots);
            out += ',' + std::to_string(pt.seed);
            out += '\n';
        }
    }
    return out;
}

std::string emit_csv(const SurvivalCurve &curve) {
    return emit_csv(std::vector<SurvivalCurve>{curve});
}

namespace {

nlohmann::ordered_json curve_to_json(const SurvivalCurve &curve) {
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const SurvivalPoint &pt : curve.points) {
        points.push_back({{"n", pt.n},
                          {"p_exact", pt.p_exact},
                          {"p_channel", pt.p_channel},
                          {"p_closed", pt.p_closed},
                          {"counts0", pt.counts0},
                          {"counts1", pt.counts1},
                          {"shots", pt.shots},
                          {"seed", pt.seed}});
    }
    return {{"theta", curve.theta_total}, {"points", points}};
}

} // namespace

std::string emit_json(const std::vector<SurvivalCurve> &curves) {
    if (curves.empty())
        throw invalid_parameter_error("emit_json: need at least one curve");
    nlohmann::ordered_json doc;
    if (curves.size() == 1) {
        doc = curve_to_json(curves.front());
    } else {
        doc = nlohmann::ordered_json::array();
        for (const SurvivalCurve &curve : curves)
            doc.push_back(curve_to_json(curve));
    }
    return doc.dump(2) + "\n";
}

std::string emit_svg(const std::vector<SurvivalCurve> &curves) {
    if (curves.empty())
        throw invalid_parameter_error("emit_svg: need at least one curve");

    // Fixed 800x500 canvas: plot area x in [70, 640], y in [30, 450], legend
    // to the right of the plot. y spans survival probabilities 0.4 to 1.0.
    constexpr double kPlotL = 70.0, kPlotR = 640.0, kPlotT = 30.0, kPlotB = 450.0;
    constexpr double kYMin = 0.4, kYMax = 1.0;
    static const char *kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
    constexpr std::size_t kNumColors = sizeof(kColors) / sizeof(kColors[0]);

    int n_lo = 0, n_hi = 0;
    bool have_point = false;
    for (const SurvivalCurve &curve : curves)
        for (const SurvivalPoint &pt : curve.points) {
            if (!have_point) {
                n_lo = n_hi = pt.n;
                have_point = true;
            } else {
                n_lo = std::min(n_lo, pt.n);
                n_hi = std::max(n_hi, pt.n);
            }
        }
    if (!have_point)
        throw invalid_parameter_error("emit_svg: curves contain no points");

    const auto x_of = [&](int n) {
        if (n_hi == n_lo)
            return 0.5 * (kPlotL + kPlotR);
        return kPlotL + (kPlotR - kPlotL) * (n - n_lo) / static_cast<double>(n_hi - n_lo);
    };
    const auto y_of = [&](double p) {
        const double clamped = std::min(kYMax, std::max(kYMin, p));
        return kPlotB - (kPlotB - kPlotT) * (clamped - kYMin) / (kYMax - kYMin);
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "width=\"800\" height=\"500\" viewBox=\"0 0 800 500\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n"
        << "  <text x=\"355\" y=\"18\" font-family=\"sans-serif\" font-size=\"14\" "
           "text-anchor=\"middle\">Survival probability vs intermediate measurements</text>\n";

    // Axes and grid.
    svg << "  <line x1=\"" << kPlotL << "\" y1=\"" << kPlotB << "\" x2=\"" << kPlotR
        << "\" y2=\"" << kPlotB << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << kPlotL << "\" y1=\"" << kPlotT << "\" x2=\"" << kPlotL
        << "\" y2=\"" << kPlotB << "\" stroke=\"black\"/>\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        const double x = x_of(n);
        svg << "  <line x1=\"" << fmt_f(x, 2) << "\" y1=\"" << kPlotB << "\" x2=\"" << fmt_f(x, 2)
            << "\" y2=\"" << kPlotB + 5 << "\" stroke=\"black\"/>\n"
            << "  <text x=\"" << fmt_f(x, 2) << "\" y=\"" << kPlotB + 20
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">" << n
            << "</text>\n";
    }
    for (int tick = 0; tick <= 6; ++tick) {
        const double p = kYMin + 0.1 * tick;
        const double y = y_of(p);
        svg << "  <line x1=\"" << kPlotL - 5 << "\" y1=\"" << fmt_f(y, 2) << "\" x2=\"" << kPlotR
            << "\" y2=\"" << fmt_f(y, 2) << "\" stroke=\"#dddddd\"/>\n"
            << "  <text x=\"" << kPlotL - 10 << "\" y=\"" << fmt_f(y + 4, 2)
            << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << fmt_f(p, 1)
            << "</text>\n";
    }
    svg << "  <text x=\"355\" y=\"488\" font-family=\"sans-serif\" font-size=\"12\" "
           "text-anchor=\"middle\">n</text>\n";

    // One polyline plus markers per curve, then the legend.
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const SurvivalCurve &curve = curves[c];
        const char *color = kColors[c % kNumColors];
        svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < curve.points.size(); ++i) {
            if (i)
                svg << ' ';
            svg << fmt_f(x_of(curve.points[i].n), 2) << ','
                << fmt_f(y_of(plotted_value(curve.points[i])), 2);
        }
        svg << "\"/>\n";
        for (const SurvivalPoint &pt : curve.points)
            svg << "  <circle cx=\"" << fmt_f(x_of(pt.n), 2) << "\" cy=\""
                << fmt_f(y_of(plotted_value(pt)), 2) << "\" r=\"3\" fill=\"" << color << "\"/>\n";

        const double ly = 40.0 + 22.0 * static_cast<double>(c);
        svg << "  <line x1=\"655\" y1=\"" << fmt_f(ly, 2) << "\" x2=\"675\" y2=\"" << fmt_f(ly, 2)
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
            << "  <text x=\"680\" y=\"" << fmt_f(ly + 4, 2)
            << "\" font-family=\"sans-serif\" font-size=\"11\">theta = "
            << fmt_g(curve.theta_total, 10) << "</text>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

std::string emit_qasm(const Circuit &circuit) {
    circuit.validate();
    std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out += "qreg q[" + std::to_string(circuit.num_qubits) + "];\n";
    out += "creg c[1];\n";
    for (const GateOp &op : circuit.ops) {
        if (op.kind == GateOp::Kind::kU3) {
            out += "u3(" + fmt_g(op.theta, 17) + ',' + fmt_g(op.phi, 17) + ',' +
                   fmt_g(op.lambda, 17) + ") q[" + std::to_string(op.target) + "];\n";
        } else {
            out += "cx q[" + std::to_string(op.control) + "],q[" + std::to_string(op.target) +
                   "];\n";
        }
    }
    out += "measure q[" + std::to_string(circuit.measured_qubit) + "] -> c[0];\n";
    return out;
}

namespace {

constexpr double kPrintEps = 1e-9;

std::string format_amp(const cplx &a) {
    const bool re_zero = std::abs(a.real()) < kPrintEps;
    const bool im_zero = std::abs(a.imag()) < kPrintEps;
    if (im_zero)
        return fmt_f(a.real(), 6);
    if (re_zero)
        return fmt_f(a.imag(), 6) + "i";
    return "(" + fmt_f(a.real(), 6) + (a.imag() < 0 ? "" : "+") + fmt_f(a.imag(), 6) + "i)";
}

std::string format_ket(std::uint64_t index, std::size_t width) {
    std::string bits(width, '0');
    for (std::size_t k = 0; k < width; ++k) // q0 leftmost
        bits[k] = static_cast<char>('0' + ((index >> k) & 1));
    return "|" + bits + "\xE2\x9F\xA9";
}

std::string format_state(const StateVector &state, std::size_t width) {
    std::string line;
    const std::uint64_t limit = std::uint64_t{1} << width;
    for (std::uint64_t i = 0; i < limit; ++i) {
        const cplx a = state.amp(i);
        if (std::abs(a) < kPrintEps)
            continue;
        std::string term;
        if (std::abs(a - cplx{1.0, 0.0}) < kPrintEps)
            term = format_ket(i, width); // unit coefficient prints bare
        else
            term = format_amp(a) + format_ket(i, width);
        if (line.empty())
            line = term;
        else
            line += (term.front() == '-' ? " " : " +") + term;
    }
    return line;
}

} // namespace

std::string print_trace(const Circuit &circuit) {
    circuit.validate();
    const std::vector<StateVector> steps = trace_states(circuit);

    // Kets start at the readout wire and widen as ops touch new wires,
    // so the listing introduces each ancilla exactly when its CNOT does.
    std::size_t width = circuit.measured_qubit + 1;
    StateVector initial(circuit.num_qubits);
    std::string out = format_state(initial, width) + "\n";
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const GateOp &op = circuit.ops[i];
        width = std::max(width, op.target + 1);
        if (op.kind == GateOp::Kind::kCnot)
            width = std::max(width, op.control + 1);
        out += "step " + std::to_string(i + 1) + ": " + format_state(steps[i], width) + "\n";
    }
    return out;
}

} // namespace zeno
