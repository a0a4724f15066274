// Copyright 2026 The ringwalk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ringwalk/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringwalk/appendix.hpp"
#include "ringwalk/dynamics.hpp"
#include "ringwalk/format.hpp"
#include "ringwalk/hamspace.hpp"

namespace ringwalk::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    return out;
}

vprog::VProgram load_program_file(const std::string& path) {
    auto in = open_input(path);
    return vprog::load_program(in);
}

void write_manifest(const std::string& path, const std::string& command,
                    const std::vector<std::string>& inputs, const std::vector<std::string>& outputs,
                    const std::map<std::string, std::string>& params, long seed = 0) {
    if (path.empty()) return;
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    j["parameters"] = params;
    j["seed"] = seed;
    j["version"] = kVersion;
    auto out = open_output(path);
    out << j.dump(2) << "\n";
}

int cmd_compile(const std::string& circuit_path, const std::string& out_path,
                const std::string& manifest) {
    auto in = open_input(circuit_path);
    const qcore::Circuit circuit = parse_circuit(in);
    const vprog::VProgram prog = vprog::compile(circuit);
    auto out = open_output(out_path);
    vprog::save_program(prog, out);
    std::cout << "compiled " << circuit.size() << " gates on " << circuit.n << " qubits into "
              << prog.iterations << " iterations (bound "
              << 4 * circuit.n * (circuit.t_controlled_s() + 2 * circuit.t_hadamard()) << ")\n";
    write_manifest(manifest, "compile", {circuit_path}, {out_path}, {});
    return kOk;
}

int cmd_trace(const std::string& prog_path, const std::string& out_path,
              const std::string& manifest) {
    const vprog::VProgram prog = load_program_file(prog_path);
    const rules::Trajectory traj = rules::enumerate_trajectory(prog);
    auto out = open_output(out_path);
    out << rules::dump_trajectory(traj);
    int events = 0;
    for (const auto& e : traj.events) events += e.has_value();
    std::cout << "trajectory: " << traj.steps.size() << " configurations, tbar = " << traj.tbar()
              << ", " << events << " gate events, "
              << (traj.stop == rules::StopKind::Primary ? "primary" : "secondary") << " stop\n";
    write_manifest(manifest, "trace", {prog_path}, {out_path}, {});
    return kOk;
}

int cmd_verify_appendix() {
    const auto res = appendix::verify(&std::cerr);
    std::cout << res.matched_steps << "/" << res.total_steps << " steps match\n";
    std::cout << "event list " << (res.events_match ? "matches" : "does not match") << "\n";
    return res.ok() ? kOk : kVerifyFail;
}

int cmd_walk(const std::string& prog_path, int tbar, const std::string& variant, int pad,
             double tmax, int samples, const std::string& out_path, const std::string& manifest) {
    if (!prog_path.empty()) {
        const vprog::VProgram prog = load_program_file(prog_path);
        tbar = rules::enumerate_trajectory(prog).tbar();
    }
    if (tbar < 1) throw DomainError("walk needs a program or --tbar >= 1");
    if (pad < 0) pad = static_cast<int>(std::ceil(std::pow(double(tbar), 2.0 / 3.0)));

    dynamics::LineHamiltonian line;
    if (variant == "start-stop")
        line = dynamics::build_line_start_stop(tbar);
    else if (variant == "dummy")
        line = dynamics::build_line_dummy(tbar, pad);
    else if (variant == "runway")
        line = dynamics::build_line_runway(tbar, pad);
    else if (variant == "perfect-standard")
        line = dynamics::build_line_perfect(tbar, dynamics::CouplingForm::Standard);
    else if (variant == "perfect-paper")
        line = dynamics::build_line_perfect(tbar, dynamics::CouplingForm::PaperLiteral);
    else
        throw DomainError("unknown variant '" + variant + "'");
    if (line.disconnection_warning) std::cerr << "warning: " << line.warning << "\n";

    if (tmax <= 0.0) tmax = double(tbar);
    if (samples <= 0) samples = std::max(100, 20 * tbar);

    if (!out_path.empty()) {
        auto out = open_output(out_path);
        dynamics::write_amp_scan_csv(out, line, tmax, samples);
    }
    const auto peak = dynamics::peak_scan(line, tmax, samples);
    std::cout << "peak t = " << fmt12(peak.t_star) << ", |amp| = " << fmt12(peak.amplitude) << "\n";
    write_manifest(manifest, "walk", prog_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{prog_path},
                   out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{out_path},
                   {{"tbar", std::to_string(tbar)},
                    {"variant", variant},
                    {"pad", std::to_string(line.pad)},
                    {"tmax", fmt12(tmax)},
                    {"samples", std::to_string(samples)}});
    return kOk;
}

int cmd_adiabatic(int tbar, double delta, double eps, int grid, double omega, long steps_override,
                  bool skip_run, const std::string& out_path, const std::string& manifest) {
    const auto fam = dynamics::make_adiabatic_family(tbar, delta, eps);
    const auto report = dynamics::gap_scan(fam, grid);
    if (!out_path.empty()) {
        auto out = open_output(out_path);
        dynamics::write_gap_csv(out, report);
    }
    std::cout << "min gap = " << fmt12(report.min_gap) << ", bound 1/[2(tbar+1)^2] = "
              << fmt12(report.bound) << (report.pass ? " (holds)" : " (VIOLATED)") << "\n";
    const double runtime = dynamics::adiabatic_runtime(fam, report.min_gap, omega);
    std::cout << "adiabatic runtime = " << fmt12(runtime) << "\n";
    if (!skip_run) {
        long steps = steps_override > 0 ? steps_override : dynamics::required_steps(fam, runtime);
        const auto run = dynamics::adiabatic_run(fam, runtime, steps);
        std::cout << "fidelity with history state at T = " << fmt12(run.fidelity) << " (" << steps
                  << " steps)\n";
        long steps2 = steps_override > 0 ? 2 * steps_override : dynamics::required_steps(fam, 2.0 * runtime);
        const auto run2 = dynamics::adiabatic_run(fam, 2.0 * runtime, steps2);
        std::cout << "fidelity with history state at 2T = " << fmt12(run2.fidelity) << "\n";
    }
    write_manifest(manifest, "adiabatic", {}, out_path.empty() ? std::vector<std::string>{} : std::vector<std::string>{out_path},
                   {{"tbar", std::to_string(tbar)},
                    {"delta", fmt12(delta)},
                    {"eps", fmt12(eps)},
                    {"grid", std::to_string(grid)},
                    {"omega", fmt12(omega)}});
    return report.pass ? kOk : kVerifyFail;
}

int cmd_equiv(const std::string& prog_path, const std::string& manifest) {
    const vprog::VProgram prog = load_program_file(prog_path);
    const auto rep = hamspace::check_effective_equivalence(prog);
    std::cout << "reachable basis: " << rep.dim << " states (tbar = " << rep.tbar << ", n = "
              << rep.n << ")\n";
    std::cout << "max deviation from effective walk matrix (x) identity = "
              << fmt12(rep.max_deviation) << "\n";
    write_manifest(manifest, "equiv", {prog_path}, {}, {});
    if (!rep.pass) {
        std::cerr << "equivalence failure at block (" << rep.worst_row_block << ", "
                  << rep.worst_col_block << ")\n";
        return kVerifyFail;
    }
    return kOk;
}

int cmd_hinit(const std::string& prog_path, const std::string& input_bits, bool scan, bool transfer,
              bool drop_anchor, const std::string& manifest) {
    const vprog::VProgram prog = load_program_file(prog_path);
    std::uint32_t input = 0;
    if (!input_bits.empty()) {
        if (static_cast<int>(input_bits.size()) != prog.n)
            throw DomainError("--input needs exactly n bits");
        for (char c : input_bits) {
            if (c != '0' && c != '1') throw DomainError("--input expects a bit string");
            input = (input << 1) | (c == '1');
        }
    }
    auto ph = hamspace::build_hinit(prog, input);
    ph.anchor_enabled = !drop_anchor;
    bool ok = true;
    std::uint64_t exhaustive = 0, tm = 0;
    bool have_ex = false, have_tm = false;
    if (scan) {
        const auto rep = hamspace::count_ground_configs(ph);
        exhaustive = rep.count;
        have_ex = true;
        std::cout << "exhaustive kernel count = " << rep.count << "\n";
    }
    if (transfer || !scan) {
        tm = hamspace::count_ground_configs_transfer(ph);
        have_tm = true;
        std::cout << "transfer-matrix kernel count = " << tm << "\n";
    }
    if (have_ex && have_tm && exhaustive != tm) {
        std::cerr << "kernel counting oracles disagree\n";
        ok = false;
    }
    if (!drop_anchor) {
        const std::uint64_t count = have_ex ? exhaustive : tm;
        if (count != 1) {
            std::cerr << "ground configuration is not unique\n";
            ok = false;
        }
    }
    write_manifest(manifest, "hinit", {prog_path}, {},
                   {{"input", input_bits},
                    {"scan", scan ? "1" : "0"},
                    {"transfer", transfer ? "1" : "0"},
                    {"drop_anchor", drop_anchor ? "1" : "0"}});
    return ok ? kOk : kVerifyFail;
}

}  // namespace

qcore::Circuit parse_circuit(std::istream& in) {
    qcore::Circuit circuit;
    std::string line;
    int lineno = 0;
    bool have_qubits = false;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;
        if (!have_qubits) {
            if (word != "qubits") throw ParseError("expected 'qubits <n>' first", lineno, 0);
            if (!(ss >> circuit.n) || circuit.n < 1)
                throw ParseError("qubits expects a positive integer", lineno, 0);
            have_qubits = true;
            continue;
        }
        if (word == "H") {
            int q;
            if (!(ss >> q)) throw ParseError("H expects one wire", lineno, 0);
            circuit.gates.push_back({qcore::GateKind::H, {q}});
        } else if (word == "CS") {
            int c, t;
            if (!(ss >> c >> t)) throw ParseError("CS expects two wires", lineno, 0);
            circuit.gates.push_back({qcore::GateKind::ControlledS, {c, t}});
        } else {
            throw ParseError("unsupported gate '" + word + "'", lineno, 0);
        }
        std::string extra;
        if (ss >> extra) throw ParseError("trailing tokens after gate", lineno, 0);
    }
    if (!have_qubits) throw ParseError("missing 'qubits <n>' line");
    circuit.validate();
    return circuit;
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"simulator and verification toolkit for the programmable ring Hamiltonian"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    std::string manifest;
    app.add_option("--manifest", manifest, "write a JSON run manifest to this path");

    std::string circuit_path, prog_path, out_path, variant = "start-stop", input_bits;
    int tbar = 0, pad = -1, samples = 0, grid = 101;
    double tmax = 0.0, delta = 1.0, eps = 0.1, omega = 1.0;
    long steps_override = 0;
    bool scan = false, transfer = false, drop_anchor = false, skip_run = false;

    auto* c_compile = app.add_subcommand("compile", "compile a Kitaev-basis circuit into a ring programming");
    c_compile->add_option("circuit", circuit_path, "circuit file")->required();
    c_compile->add_option("-o,--output", out_path, "program file to write")->required();

    auto* c_trace = app.add_subcommand("trace", "enumerate the computation trajectory of a program");
    c_trace->add_option("program", prog_path, "program file")->required();
    c_trace->add_option("-o,--output", out_path, "trajectory dump to write")->required();

    auto* c_walk = app.add_subcommand("walk", "scan the walk transfer amplitude of a line variant");
    c_walk->add_option("program", prog_path, "program file (tbar from its trajectory)");
    c_walk->add_option("--tbar", tbar, "line length when no program is given");
    c_walk->add_option("--variant", variant,
                       "start-stop | dummy | runway | perfect-standard | perfect-paper");
    c_walk->add_option("--pad", pad, "pad sites for dummy/runway (default ceil(tbar^(2/3)))");
    c_walk->add_option("--tmax", tmax, "scan horizon (default tbar)");
    c_walk->add_option("--samples", samples, "scan samples (default max(100, 20 tbar))");
    c_walk->add_option("-o,--output", out_path, "amplitude CSV to write");

    auto* c_adiabatic = app.add_subcommand("adiabatic", "gap scan and adiabatic evolution");
    c_adiabatic->add_option("--tbar", tbar, "history length")->required();
    c_adiabatic->add_option("--delta", delta, "adiabatic theorem exponent");
    c_adiabatic->add_option("--eps", eps, "target error");
    c_adiabatic->add_option("--grid", grid, "gap scan grid points");
    c_adiabatic->add_option("--omega", omega, "hidden-constant multiplier");
    c_adiabatic->add_option("--steps", steps_override, "override the integration step count");
    c_adiabatic->add_flag("--skip-run", skip_run, "gap scan only");
    c_adiabatic->add_option("-o,--output", out_path, "gap CSV to write");

    auto* c_verify = app.add_subcommand("verify-appendix", "compare against the worked 48-step example");

    auto* c_equiv = app.add_subcommand("equiv", "check the restricted Hamiltonian against the effective walk matrix");
    c_equiv->add_option("program", prog_path, "program file")->required();

    auto* c_hinit = app.add_subcommand("hinit", "penalty-Hamiltonian kernel counting");
    c_hinit->add_option("program", prog_path, "program file")->required();
    c_hinit->add_option("--input", input_bits, "classical data input bits (default all zero)");
    c_hinit->add_flag("--scan", scan, "exhaustive 8^K scan (K <= 8)");
    c_hinit->add_flag("--transfer", transfer, "transfer-matrix count");
    c_hinit->add_flag("--drop-anchor", drop_anchor, "drop the anchor term");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help / --version
            app.exit(e);
            return kOk;
        }
        std::cerr << e.what() << "\n";
        return kUsage;
    }

    try {
        qcore::self_test();
        if (c_compile->parsed()) return cmd_compile(circuit_path, out_path, manifest);
        if (c_trace->parsed()) return cmd_trace(prog_path, out_path, manifest);
        if (c_walk->parsed())
            return cmd_walk(prog_path, tbar, variant, pad, tmax, samples, out_path, manifest);
        if (c_adiabatic->parsed())
            return cmd_adiabatic(tbar, delta, eps, grid, omega, steps_override, skip_run, out_path,
                                 manifest);
        if (c_verify->parsed()) return cmd_verify_appendix();
        if (c_equiv->parsed()) return cmd_equiv(prog_path, manifest);
        if (c_hinit->parsed())
            return cmd_hinit(prog_path, input_bits, scan, transfer, drop_anchor, manifest);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFail;
    }
    return kUsage;
}

}  // namespace ringwalk::cli
