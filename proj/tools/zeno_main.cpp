#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "zeno/errors.hpp"
#include "zeno/experiments.hpp"
#include "zeno/io.hpp"
#include "zeno/survival.hpp"

namespace {

std::string fmt(const char *spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw zeno::invalid_parameter_error("cannot open output file '" + path + "'");
    file << text;
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv("ZENO_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception &) {
            throw zeno::parse_error("ZENO_SEED is not a valid unsigned integer");
        }
    }
    return 42;
}

zeno::BackendSet parse_backends(const std::string &spec) {
    zeno::BackendSet set{false, false, false};
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        const std::size_t comma = spec.find(',', pos);
        const std::string name =
            spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (name == "statevector")
            set.statevector = true;
        else if (name == "channel")
            set.channel = true;
        else if (name == "closed_form")
            set.closed_form = true;
        else
            throw zeno::parse_error("unknown backend '" + name + "'");
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return set;
}

int run_sweep_cmd(const std::vector<std::string> &theta_exprs, const std::string &n_range,
                  int shots, std::uint64_t seed, const std::string &backends,
                  const std::string &format, const std::string &out_path) {
    const auto [n_min, n_max] = zeno::parse_n_range(n_range);

    std::vector<zeno::SurvivalCurve> curves;
    curves.reserve(theta_exprs.size());
    for (const std::string &expr : theta_exprs) {
        zeno::SweepConfig config;
        config.theta_total = zeno::parse_angle(expr);
        config.n_min = n_min;
        config.n_max = n_max;
        config.shots = shots;
        config.seed = seed;
        config.backends = parse_backends(backends);
        curves.push_back(zeno::run_sweep(config));
    }

    std::string text;
    if (format == "csv")
        text = zeno::emit_csv(curves);
    else if (format == "json")
        text = zeno::emit_json(curves);
    else
        text = zeno::emit_svg(curves);
    write_output(out_path, text);
    return 0;
}

int run_rabi_cmd(const std::string &theta_expr, int shots, std::uint64_t seed,
                 const std::string &out_path) {
    const double theta = zeno::parse_angle(theta_expr);
    const double p = zeno::run_circuit(zeno::build_rabi_circuit(theta)).prob_qubit0(0);
    const zeno::ShotHistogram hist = zeno::sample_shots(p, shots, seed);

    std::string text;
    text += "theta = " + fmt("%.17g", theta) + "\n";
    text += "p_exact = " + fmt("%.12f", p) + "\n";
    text += "shots = " + std::to_string(hist.shots) + "\n";
    text += "seed = " + std::to_string(hist.seed) + "\n";
    text += "counts0 = " + std::to_string(hist.counts0) + "\n";
    text += "counts1 = " + std::to_string(hist.counts1) + "\n";
    text += "p_sampled = " +
            fmt("%.12f", static_cast<double>(hist.counts0) / static_cast<double>(hist.shots)) +
            "\n";
    write_output(out_path, text);
    return 0;
}

int run_trace_cmd(const std::string &theta_expr, int n, const std::string &out_path) {
    const double theta = zeno::parse_angle(theta_expr);
    write_output(out_path, zeno::print_trace(zeno::build_qze_circuit(theta, n)));
    return 0;
}

int run_verify_decomp_cmd(const std::string &theta_expr, int slices,
                          const std::string &out_path) {
    const double theta = zeno::parse_angle(theta_expr);
    const zeno::DecompositionReport report = zeno::verify_decomposition(theta, slices);

    std::string text;
    text += "theta = " + fmt("%.17g", theta) + "\n";
    text += "slices = " + std::to_string(slices) + "\n";
    text += "p_single = " + fmt("%.12f", report.p_single) + "\n";
    text += "p_sliced = " + fmt("%.12f", report.p_sliced) + "\n";
    text += "p_gap = " + fmt("%.3e", std::abs(report.p_single - report.p_sliced)) + "\n";
    text += "max_gate_gap = " + fmt("%.3e", report.max_gate_gap) + "\n";
    write_output(out_path, text);
    return 0;
}

int run_qasm_cmd(const std::string &theta_expr, int n, const std::string &out_path) {
    const double theta = zeno::parse_angle(theta_expr);
    const zeno::Circuit circuit =
        (n == 0) ? zeno::build_rabi_circuit(theta) : zeno::build_qze_circuit(theta, n);
    write_output(out_path, zeno::emit_qasm(circuit));
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum Zeno effect simulator: exact survival probabilities for "
                 "sliced Rabi rotations with ancilla-CNOT measurements"};
    app.require_subcommand(1);

    std::vector<std::string> thetas;
    std::string theta;
    std::string n_range = "1..14";
    int n = 2;
    int qasm_n = 0;
    int slices = 1;
    int shots = 8192;
    std::uint64_t seed = 0;
    std::string backends = "statevector,channel,closed_form";
    std::string format = "csv";
    std::string out_path;

    CLI::App *sweep = app.add_subcommand("sweep", "Survival curve over a range of n");
    sweep->add_option("--theta", thetas, "total rotation angle (repeatable), e.g. pi/2")
        ->required();
    sweep->add_option("--n", n_range, "slice range A..B or a single value")->capture_default_str();
    sweep->add_option("--shots", shots, "shots per point")->capture_default_str();
    sweep->add_option("--seed", seed, "base RNG seed (per point: seed XOR n)");
    sweep->add_option("--backends", backends, "comma list of statevector,channel,closed_form")
        ->capture_default_str();
    sweep->add_option("--format", format, "output format")->capture_default_str()
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    sweep->add_option("--out", out_path, "output file (default stdout)");

    CLI::App *rabi = app.add_subcommand("rabi", "Single-rotation survival probability");
    rabi->add_option("--theta", theta, "rotation angle, e.g. pi/2")->required();
    rabi->add_option("--shots", shots, "shots to sample")->capture_default_str();
    rabi->add_option("--seed", seed, "RNG seed");
    rabi->add_option("--out", out_path, "output file (default stdout)");

    CLI::App *trace = app.add_subcommand("trace", "Step-by-step state listing");
    trace->add_option("--theta", theta, "total rotation angle")->required();
    trace->add_option("--n", n, "number of measured slices")->capture_default_str();
    trace->add_option("--out", out_path, "output file (default stdout)");

    CLI::App *verify = app.add_subcommand("verify-decomp", "Sliced-rotation equivalence check");
    verify->add_option("--theta", theta, "total rotation angle")->required();
    verify->add_option("--slices", slices, "number of slices")->required();
    verify->add_option("--out", out_path, "output file (default stdout)");

    CLI::App *qasm = app.add_subcommand("qasm", "OpenQASM 2.0 emission");
    qasm->add_option("--theta", theta, "total rotation angle")->required();
    qasm->add_option("--n", qasm_n, "measured slices (omit for the plain Rabi circuit)");
    qasm->add_option("--out", out_path, "output file (default stdout)");

    try {
        seed = default_seed();
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const zeno::parse_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sweep->parsed())
            return run_sweep_cmd(thetas, n_range, shots, seed, backends, format, out_path);
        if (rabi->parsed())
            return run_rabi_cmd(theta, shots, seed, out_path);
        if (trace->parsed())
            return run_trace_cmd(theta, n, out_path);
        if (verify->parsed())
            return run_verify_decomp_cmd(theta, slices, out_path);
        if (qasm->parsed())
            return run_qasm_cmd(theta, qasm_n, out_path);
        std::cerr << "error: no command\n";
        return 2;
    } catch (const zeno::parse_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const zeno::invalid_parameter_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const zeno::capacity_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
