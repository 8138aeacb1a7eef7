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


// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "qphase/qphase.hpp"
#include "support/fuzz.hpp"
#include "support/oracles.hpp"

namespace {

using namespace qphase;
using oracle::M;

constexpr double kPi = std::numbers::pi;

/// Tracks the worst observed value and the first failure message.
struct Check {
    bool ok = true;
    std::string detail;
    double worst = 0.0;

    void below(double value, double tol, const std::string& what) {
        worst = std::max(worst, value);
        if (!(value < tol)) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " = %.3e (tol %.0e)", value, tol);
            fail(what + buf);
        }
    }
    void that(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    void fail(const std::string& what) {
        if (ok) detail = what;
        ok = false;
    }
};

std::vector<std::pair<std::string, std::string>> sample_files() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& entry : std::filesystem::directory_iterator(QPHASE_SAMPLES_DIR)) {
        if (entry.path().extension() != ".qph") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        out.emplace_back(entry.path().filename().string(), ss.str());
    }
    std::sort(out.begin(), out.end());
    return out;
}

M compiled(const Term& t) { return circuit_matrix(clauses_to_circuit(normalize(t), type_of_term(t).qubits)); }

std::vector<Term> soundness_corpus() {
    testing::Fuzzer f(2026);
    std::vector<Term> ts;
    for (int i = 0; i < 500; ++i) ts.push_back(f.term(f.below(5), 5));
    return ts;
}

Check gate_table() {
    Check c;
    std::vector<std::pair<const char*, M>> exact = {{"X", oracle::x()}, {"Z", oracle::z()},   {"S", oracle::s()},
                                                    {"T", oracle::t()}, {"V", oracle::v()},   {"CZ", oracle::cz()},
                                                    {"CX", oracle::cx()}, {"Y", oracle::y()}};
    for (const auto& [name, m] : exact) c.below(max_abs_diff(sem_term(prelude_gate(name)), m), 1e-12, name);
    c.below(max_abs_diff(sem_term(prelude_gate("H")), oracle::h()), 1e-10, "H");
    return c;
}

Check soundness(const std::vector<Term>& corpus) {
    Check c;
    for (const Term& t : corpus) {
        std::size_t n = type_of_term(t).qubits;
        M s = sem_term(t);
        ClauseList cs = normalize(t);
        c.below(max_abs_diff(s, matrix_of_clauses(cs, n)), 1e-9, "clauses vs sem: " + pretty(t));
        c.below(max_abs_diff(s, circuit_matrix(clauses_to_circuit(cs, n))), 1e-9, "circuit vs sem: " + pretty(t));
    }
    return c;
}

Check type_soundness(const std::vector<Term>& corpus) {
    Check c;
    for (const Term& t : corpus) {
        std::size_t n = type_of_term(t).qubits;
        try {
            c.that(type_of_term(compose_clauses(normalize(t), n)).qubits == n, "arity changed: " + pretty(t));
        } catch (const std::exception& e) {
            c.fail(std::string("normal term ill-typed: ") + e.what());
        }
    }
    return c;
}

Check well_definedness(const std::vector<Term>& corpus) {
    Check c;
    for (const Term& t : corpus) c.below(unitarity_defect(sem_term(t)), 1e-10, "unitarity: " + pretty(t));
    testing::Fuzzer f(4);
    for (int i = 0; i < 500; ++i) {
        Pattern p = f.pattern(f.below(5), 5);
        M a = sem_pattern(p);
        M b = ortho_complement(p);
        c.below(isometry_defect(a), 1e-10, "isometry: " + pretty(p));
        c.that(a.cols() + b.cols() == a.rows(), "complement width: " + pretty(p));
        if (b.cols() > 0 && a.cols() > 0) c.below((a.adjoint() * b).cwiseAbs().maxCoeff(), 1e-10, "P^dag P_perp");
        c.below(unitarity_defect(hcat(a, b)), 1e-10, "[P|P_perp] unitary: " + pretty(p));
    }
    return c;
}

Check equations() {
    Check c;
    testing::Fuzzer f(5);
    for (int i = 0; i < 200; ++i) {
        // if p { if q { s } } = if p . q { s }
        Pattern p = f.pattern(f.below(5), 4);
        Pattern q = f.pattern(static_cast<std::size_t>(p.cached_input()), 4);
        Term s = f.term(static_cast<std::size_t>(q.cached_input()), 4);
        c.below(max_abs_diff(sem_term(Term::if_let(p, Term::if_let(q, s))),
                             sem_term(Term::if_let(Pattern::compose(p, q), s))),
                1e-9, "nested if");
    }
    for (int i = 0; i < 200; ++i) {
        // if p { s; t } = if p { s }; if p { t }
        Pattern p = f.pattern(f.below(5), 4);
        std::size_t j = static_cast<std::size_t>(p.cached_input());
        Term s = f.term(j, 4), t = f.term(j, 4);
        c.below(max_abs_diff(sem_term(Term::if_let(p, Term::seq(s, t))),
                             sem_term(Term::seq(Term::if_let(p, s), Term::if_let(p, t)))),
                1e-9, "if over seq");
    }
    for (int i = 0; i < 200; ++i) {
        // if t { s } = T S T^dagger
        std::size_t n = f.below(5);
        Term t = f.term(n, 4), s = f.term(n, 4);
        M tm = sem_term(t);
        c.below(max_abs_diff(sem_term(Term::if_let(Pattern::unitary(t), s)), tm * sem_term(s) * tm.adjoint()), 1e-9,
                "unitary pattern conjugation");
    }
    for (int i = 0; i < 200; ++i) {
        Term t = f.term(f.below(5), 5);
        c.below(max_abs_diff(sem_term(invert(t)), sem_term(t).adjoint()), 1e-10, "dagger law");
        Term cf = f.term(f.below(5), 5, false);
        double a = f.uniform(-2, 2), b = f.uniform(-2, 2);
        c.below(max_abs_diff(sem_term(exponentiate(cf, a)) * sem_term(exponentiate(cf, b)),
                             sem_term(exponentiate(cf, a + b))),
                1e-9, "group law");
        c.below(max_abs_diff(sem_term(exponentiate(cf, 1.0)), sem_term(cf)), 1e-9, "exponent one");
    }
    return c;
}

Check grover() {
    Check c;
    double target = oracle::grover_probability(4, 3);
    c.that(std::abs(target - 0.9613) < 1e-4, "closed form");
    for (std::uint64_t w = 0; w < 16; ++w) {
        double p = grover_success_probability(grover_program(4, w, 3), w);
        c.below(std::abs(p - target), 1e-6, "n=4 omega=" + std::to_string(w));
    }
    for (std::uint64_t w = 0; w < 2; ++w) {
        c.below(std::abs(grover_success_probability(grover_program(1, w, 1), w) - 1.0), 1e-10,
                "n=1 omega=" + std::to_string(w) + " |p - 1| (closed form sin^2(3 asin(1/sqrt 2)) is " +
                    std::to_string(oracle::grover_probability(1, 1)) + ", so p = 1 is unreachable)");
    }
    return c;
}

Check qft3() {
    Check c;
    c.below(max_abs_diff(compiled(qft(3)), oracle::bitrev(3) * oracle::dft(3)), 1e-9, "qft(3)");
    c.below(max_abs_diff(compiled(qft_bitrev(3)), oracle::dft(3)), 1e-9, "qft(3) bitrev");
    return c;
}

Check trotter(std::string& note) {
    Check c;
    HamiltonianSpec spec = dipole_spec(1.0, 0.7, 0.3);
    M exact = oracle::evolve(oracle::dipole_hamiltonian(1.0, 0.7, 0.3), 1.0);
    double prev = 0.0;
    for (std::size_t n : {8, 16, 32, 64}) {
        double err = max_abs_diff(sem_term(trotterize(spec, 1.0, n)), exact);
        if (prev > 0.0) {
            double ratio = err / prev;
            char buf[32];
            std::snprintf(buf, sizeof buf, "%s%.3f", note.empty() ? "ratios " : " ", ratio);
            note += buf;
            c.that(ratio >= 0.4 && ratio <= 0.6, "ratio at N=" + std::to_string(n) + ": " + std::to_string(ratio));
        }
        prev = err;
    }
    HamiltonianSpec z{1, {{1.0, ket0()}, {-1.0, ket1()}}};
    c.below(max_abs_diff(sem_term(trotterize(z, 1.3, 1)), oracle::evolve(oracle::z(), 1.3)), 1e-10, "sigma_z");
    HamiltonianSpec commuting = dipole_spec(1.0, 0.7, 0.0);
    c.below(max_abs_diff(sem_term(trotterize(commuting, 1.0, 1)), oracle::evolve(oracle::dipole_hamiltonian(1.0, 0.7, 0.0), 1.0)),
            1e-10, "J=0 dipole");
    return c;
}

Check qsp() {
    Check c;
    testing::Fuzzer f(9);
    for (int i = 0; i < 100; ++i) {
        double a = f.uniform(-1, 1);
        std::vector<double> phis(1 + f.below(7));
        for (double& phi : phis) phi = f.uniform(-kPi, kPi);
        c.below(max_abs_diff(sem_term(qsp_program(a, phis)), oracle::qsp_product(a, phis)), 1e-9, "qsp");
    }
    return c;
}

Check qet() {
    Check c;
    testing::Fuzzer f(10);
    for (int i = 0; i < 100; ++i) {
        Pattern p = f.pattern(1 + f.below(3), 4);
        double phi = f.uniform(-kPi, kPi);
        M expected = oracle::projector_phase(oracle::projector(sem_pattern(p)), phi);
        c.below(max_abs_diff(sem_term(projector_phase(p, phi)), expected), 1e-10, "projector phase: " + pretty(p));
    }
    Term u = compile_source("H x id; CX; T x V");
    Pattern p = compile_pattern("|0> x id");
    c.that(structural_equal(qet_program(u, p, {}), id(2)), "d=0 base case");
    c.that(structural_equal(qet_program(u, p, {0.7}), Term::seq(u, projector_phase(p, 0.7))), "d=1 base case");
    for (std::size_t d : {2, 4, 6}) {
        c.below(max_abs_diff(sem_term(qet_program(u, p, std::vector<double>(d, 0.0))), oracle::eye(2)), 1e-10,
                "zero phases d=" + std::to_string(d));
    }
    return c;
}

Check ghz() {
    Check c;
    Term t = compile_source("H x id(4); if |1> x id(4) { X x X x X x X }");
    M state = sem_term(t) * oracle::basis(5, 0);
    M expected = (oracle::basis(5, 0) + oracle::basis(5, 31)) / std::sqrt(2.0);
    c.below(max_abs_diff(state, expected), 1e-10, "GHZ state");
    return c;
}

Check swap() {
    Check c;
    using S = SimpleSlot;
    ClauseList cs = normalize(compile_source("if CX { XC }"));
    ClauseList expected{{{{S::One, S::Minus}}, Angle(-kPi)},
                        {{{S::Minus, S::One}}, Angle(kPi)},
                        {{{S::One, S::Minus}}, Angle(kPi)}};
    c.that(cs == expected, "clause list differs from CX; XC; CX");
    c.below(max_abs_diff(matrix_of_clauses(cs, 2), oracle::swap()), 1e-12, "swap matrix");
    return c;
}

Check round_trips(std::string& note) {
    Check c;
    auto files = sample_files();
    c.that(!files.empty(), "no samples found");
    for (const auto& [name, text] : files) {
        try {
            Term t = compile_source(text);
            std::string printed = pretty(t);
            Term back = compile_source(printed);
            c.that(structural_equal(back, t), name + ": term round trip");
            c.that(pretty(back) == printed, name + ": printer not stable");
            Circuit circ = clauses_to_circuit(normalize(t), type_of_term(t).qubits);
            std::string written = write_circuit(circ);
            c.that(read_circuit(written) == circ, name + ": circuit round trip");
            c.that(write_circuit(read_circuit(written)) == written, name + ": circuit text not stable");
        } catch (const std::exception& e) {
            c.fail(name + ": " + e.what());
        }
    }
    note = std::to_string(files.size()) + " sample files";
    return c;
}

}  // namespace

int main() {
    std::vector<Term> corpus = soundness_corpus();
    std::string trotter_note, corpus_note;
    struct Row {
        int id;
        const char* name;
        std::function<Check()> run;
        std::string* note;
    };
    std::vector<Row> rows = {
        {1, "gate table", gate_table, nullptr},
        {2, "soundness fuzz (500 terms)", [&] { return soundness(corpus); }, nullptr},
        {3, "type soundness", [&] { return type_soundness(corpus); }, nullptr},
        {4, "well-definedness", [&] { return well_definedness(corpus); }, nullptr},
        {5, "equational laws", equations, nullptr},
        {6, "grover", grover, nullptr},
        {7, "qft", qft3, nullptr},
        {8, "trotter", [&] { return trotter(trotter_note); }, &trotter_note},
        {9, "qsp", qsp, nullptr},
        {10, "qet", qet, nullptr},
        {11, "ghz", ghz, nullptr},
        {12, "swap", swap, nullptr},
        {13, "round trips", [&] { return round_trips(corpus_note); }, &corpus_note},
    };
    int failures = 0;
    for (const auto& row : rows) {
        Check c;
        try {
            c = row.run();
        } catch (const std::exception& e) {
            c.fail(std::string("exception: ") + e.what());
        }
        std::printf("[%s] criterion %2d: %s", c.ok ? "PASS" : "FAIL", row.id, row.name);
        if (c.worst > 0.0) std::printf(" (worst %.2e)", c.worst);
        if (row.note && !row.note->empty()) std::printf(" [%s]", row.note->c_str());
        if (!c.ok) std::printf(" -- %s", c.detail.c_str());
        std::printf("\n");
        failures += !c.ok;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(rows.size()) - failures, rows.size());
    return failures == 0 ? 0 : 1;
}
