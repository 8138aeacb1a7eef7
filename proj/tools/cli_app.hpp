// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end. Exit status: 0 success, 1 domain failure (parse,
// type, verification, I/O), 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qphase/qphase.hpp"

namespace qphase::cli {

inline constexpr double kVerifyTolerance = 1e-9;

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    f << text;
}

inline std::string format_sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

inline Term load_term(const std::string& path) { return compile_source(read_text(path)); }

inline Circuit compile_term(const Term& t, bool fuse) {
    std::size_t n = type_of_term(t).qubits;
    ClauseList cs = normalize(t);
    if (fuse) {
        cs = fuse_clauses(cs);
    }
    return clauses_to_circuit(cs, n);
}

inline std::string generated_source(const std::string& header, const Term& t) {
    return "// " + header + "\n" + pretty(t) + "\n";
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compiler, simulator and verifier for the phase / if-let quantum language", "qphase"};
    app.require_subcommand(1);

    std::string file;
    std::string output;
    bool fuse = false;
    bool compiled = false;

    auto* parse_cmd = app.add_subcommand("parse", "Print the elaborated term");
    parse_cmd->add_option("FILE", file, "Source file (.qph)")->required();

    auto* check_cmd = app.add_subcommand("check", "Typecheck and print 'unitary <n>'");
    check_cmd->add_option("FILE", file, "Source file (.qph)")->required();

    auto* compile_cmd = app.add_subcommand("compile", "Normalize and write the circuit text format");
    compile_cmd->add_option("FILE", file, "Source file (.qph)")->required();
    compile_cmd->add_option("-o,--output", output, "Output file (default stdout)");
    compile_cmd->add_flag("--fuse", fuse, "Merge adjacent clauses with equal selectors");

    auto* matrix_cmd = app.add_subcommand("matrix", "Print the unitary of a program");
    matrix_cmd->add_option("FILE", file, "Source file (.qph)")->required();
    matrix_cmd->add_flag("--compiled", compiled, "Simulate the compiled circuit instead of the source term");

    auto* verify_cmd = app.add_subcommand("verify", "Compare the source semantics with the compiled circuit");
    verify_cmd->add_option("FILE", file, "Source file (.qph)")->required();

    auto* example_cmd = app.add_subcommand("example", "Emit a generated .qph program");
    example_cmd->require_subcommand(1);

    std::size_t n = 3;
    std::uint64_t omega = 0;
    std::size_t iterations = 0;
    bool have_iterations = false;
    auto* grover_cmd = example_cmd->add_subcommand("grover", "Grover search");
    grover_cmd->add_option("--n", n, "Qubit count")->check(CLI::Range(1, 12));
    grover_cmd->add_option("--omega", omega, "Marked element");
    auto* iter_opt = grover_cmd->add_option("--iterations", iterations, "Iteration count (default ceil(pi sqrt(N)/4))");
    grover_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    bool bitrev = false;
    auto* qft_cmd = example_cmd->add_subcommand("qft", "Quantum Fourier transform");
    qft_cmd->add_option("--n", n, "Qubit count")->check(CLI::Range(0, 12));
    qft_cmd->add_flag("--bitrev", bitrev, "Append swaps so the output is in natural order");
    qft_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    double omega1 = 1.0;
    double omega2 = 0.7;
    double coupling = 0.3;
    double time = 1.0;
    std::size_t steps = 8;
    auto* trotter_cmd = example_cmd->add_subcommand("trotter", "Trotterized evolution of two coupled dipoles");
    trotter_cmd->add_option("--omega1", omega1, "Field strength on spin 1");
    trotter_cmd->add_option("--omega2", omega2, "Field strength on spin 2");
    trotter_cmd->add_option("--coupling", coupling, "Dipole coupling J");
    trotter_cmd->add_option("--time", time, "Evolution time");
    trotter_cmd->add_option("--steps", steps, "Trotter steps")->check(CLI::PositiveNumber);
    trotter_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    double signal = 0.5;
    std::vector<double> phis{0.0};
    auto* qsp_cmd = example_cmd->add_subcommand("qsp", "Quantum signal processing sequence");
    qsp_cmd->add_option("--a", signal, "Signal amplitude in [-1, 1]");
    qsp_cmd->add_option("--phis", phis, "Comma-separated phases phi_0,...,phi_d")->delimiter(',');
    qsp_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    std::string unitary_src = "H";
    std::string pattern_src = "|0>";
    auto* qet_cmd = example_cmd->add_subcommand("qet", "Quantum eigenvalue transform");
    qet_cmd->add_option("--unitary", unitary_src, "Block-encoding unitary, as a source term");
    qet_cmd->add_option("--pattern", pattern_src, "Projector pattern, as source text");
    qet_cmd->add_option("--phis", phis, "Comma-separated phases phi_1,...,phi_d")->delimiter(',');
    qet_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    std::string hamiltonian;
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Trotterize a Hamiltonian spec and report the error against exp(-iHt)");
    simulate_cmd->add_option("FILE", file, "Where to write the generated program (optional)");
    simulate_cmd->add_option("--hamiltonian", hamiltonian, "Hamiltonian spec (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    have_iterations = iter_opt->count() > 0;

    try {
        if (*parse_cmd) {
            std::string text = pretty(load_term(file));
            out << text << "\n";
        } else if (*check_cmd) {
            std::size_t qubits = type_of_term(load_term(file)).qubits;
            out << "unitary " << qubits << "\n";
        } else if (*compile_cmd) {
            write_text(output, write_circuit(compile_term(load_term(file), fuse)), out);
        } else if (*matrix_cmd) {
            Term t = load_term(file);
            ComplexMatrix m = compiled ? circuit_matrix(compile_term(t, false)) : sem_term(t);
            out << format_matrix(m);
        } else if (*verify_cmd) {
            Term t = load_term(file);
            double diff = max_abs_diff(sem_term(t), circuit_matrix(compile_term(t, false)));
            out << "max_abs_diff " << format_sci(diff) << "\n";
            if (!(diff < kVerifyTolerance)) {
                err << "verification failed: difference exceeds " << format_sci(kVerifyTolerance) << "\n";
                return 1;
            }
        } else if (*grover_cmd) {
            Term t = have_iterations ? grover_program(n, omega, iterations) : grover_program(n, omega);
            write_text(output,
                       generated_source("grover n=" + std::to_string(n) + " omega=" + std::to_string(omega), t), out);
        } else if (*qft_cmd) {
            Term t = bitrev ? qft_bitrev(n) : qft(n);
            write_text(output, generated_source("qft n=" + std::to_string(n) + (bitrev ? " bitrev" : ""), t), out);
        } else if (*trotter_cmd) {
            Term t = trotterize(dipole_spec(omega1, omega2, coupling), time, steps);
            write_text(output, generated_source("dipole trotterization steps=" + std::to_string(steps), t), out);
        } else if (*qsp_cmd) {
            Term t = qsp_program(signal, phis);
            write_text(output, generated_source("qsp d=" + std::to_string(phis.size() - 1), t), out);
        } else if (*qet_cmd) {
            Term u = compile_source(unitary_src);
            Pattern p = compile_pattern(pattern_src);
            Term t = qet_program(u, p, phis);
            write_text(output, generated_source("qet d=" + std::to_string(phis.size()), t), out);
        } else if (*simulate_cmd) {
            HamiltonianFile h = parse_hamiltonian_file(read_text(hamiltonian));
            Term t = trotterize(h.spec, h.t, h.steps);
            double diff = max_abs_diff(sem_term(t), exact_evolution(hamiltonian_matrix(h.spec), h.t));
            if (!file.empty()) {
                write_text(file, generated_source("trotterization steps=" + std::to_string(h.steps), t), out);
            }
            out << "qubits " << h.spec.n << "\n";
            out << "components " << h.spec.components.size() << "\n";
            out << "steps " << h.steps << "\n";
            out << "max_abs_diff " << format_sci(diff) << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace qphase::cli
