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

// Circuits over {Hadamard, multi-controlled phase, global phase}.
//
// Text format, one gate per line, trailing newline required:
//
//   qubits <n>
//   h <q>
//   mcp <theta> <+q|-q>...     (+q one-control, -q zero-control)
//   gp <theta>
//
// Angles are printed with 17 significant digits so reading them back is
// bit-exact.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "qphase/ast.hpp"
#include "qphase/evaluator.hpp"
#include "qphase/semantics.hpp"

namespace qphase {

enum class Polarity : std::uint8_t { Zero, One };

struct Control {
    std::size_t qubit;
    Polarity polarity;
    friend bool operator==(const Control&, const Control&) = default;
};

namespace gate {
struct Hadamard {
    std::size_t qubit;
    friend bool operator==(const Hadamard&, const Hadamard&) = default;
};
struct MCPhase {
    Angle theta;
    std::vector<Control> controls;
    friend bool operator==(const MCPhase& a, const MCPhase& b) {
        return a.theta == b.theta && a.controls == b.controls;
    }
};
struct GlobalPhase {
    Angle theta;
    friend bool operator==(const GlobalPhase& a, const GlobalPhase& b) { return a.theta == b.theta; }
};
}  // namespace gate

using Gate = std::variant<gate::Hadamard, gate::MCPhase, gate::GlobalPhase>;

/// A multi-controlled phase; no controls collapses to a global phase.
inline Gate make_phase_gate(Angle theta, std::vector<Control> controls) {
    if (controls.empty()) {
        return gate::GlobalPhase{theta};
    }
    return gate::MCPhase{theta, std::move(controls)};
}

struct Circuit {
    std::size_t qubits = 0;
    std::vector<Gate> gates;

    friend bool operator==(const Circuit&, const Circuit&) = default;
};

class CircuitFormatError : public std::runtime_error {
   public:
    CircuitFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

/// Throws std::invalid_argument if a gate references a qubit >= n or an
/// MCPhase repeats a control qubit.
inline void validate(const Circuit& c) {
    for (const auto& g : c.gates) {
        std::visit(detail::overloaded{
                       [&](const gate::Hadamard& h) {
                           if (h.qubit >= c.qubits) {
                               throw std::invalid_argument("hadamard qubit out of range");
                           }
                       },
                       [&](const gate::MCPhase& m) {
                           if (m.controls.empty()) {
                               throw std::invalid_argument("mcp without controls");
                           }
                           std::set<std::size_t> seen;
                           for (const auto& ctl : m.controls) {
                               if (ctl.qubit >= c.qubits) {
                                   throw std::invalid_argument("control qubit out of range");
                               }
                               if (!seen.insert(ctl.qubit).second) {
                                   throw std::invalid_argument("repeated control qubit");
                               }
                           }
                       },
                       [](const gate::GlobalPhase&) {},
                   },
                   g);
    }
}

/// Each clause becomes a (multi-controlled) phase. Plus / minus slots are
/// conjugated by Hadamards: prefix ascending, suffix descending.
inline Circuit clauses_to_circuit(const ClauseList& cs, std::size_t n) {
    Circuit c{n, {}};
    for (const auto& clause : cs) {
        if (clause.selector.size() != n) {
            throw std::invalid_argument("clauses_to_circuit: selector length " +
                                        std::to_string(clause.selector.size()) + " differs from " +
                                        std::to_string(n) + " qubits");
        }
        std::vector<std::size_t> conj;
        std::vector<Control> controls;
        for (std::size_t q = 0; q < n; ++q) {
            switch (clause.selector.slots[q]) {
                case SimpleSlot::Id:
                    break;
                case SimpleSlot::Zero:
                    controls.push_back({q, Polarity::Zero});
                    break;
                case SimpleSlot::One:
                    controls.push_back({q, Polarity::One});
                    break;
                case SimpleSlot::Plus:
                    conj.push_back(q);
                    controls.push_back({q, Polarity::Zero});
                    break;
                case SimpleSlot::Minus:
                    conj.push_back(q);
                    controls.push_back({q, Polarity::One});
                    break;
            }
        }
        for (auto q : conj) {
            c.gates.push_back(gate::Hadamard{q});
        }
        c.gates.push_back(make_phase_gate(clause.theta, std::move(controls)));
        for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
            c.gates.push_back(gate::Hadamard{*it});
        }
    }
    return c;
}

namespace detail {

inline std::string format_angle17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Applies one gate to every column of `m` (each column is a state vector).
inline void apply_gate(ComplexMatrix& m, const Gate& g, std::size_t n) {
    const Eigen::Index dim = m.rows();
    std::visit(detail::overloaded{
                   [&](const gate::Hadamard& h) {
                       const double s = std::numbers::sqrt2 / 2.0;
                       const Eigen::Index bit = Eigen::Index{1} << (n - 1 - h.qubit);
                       for (Eigen::Index col = 0; col < m.cols(); ++col) {
                           for (Eigen::Index i = 0; i < dim; ++i) {
                               if (i & bit) {
                                   continue;
                               }
                               Complex a = m(i, col);
                               Complex b = m(i | bit, col);
                               m(i, col) = s * (a + b);
                               m(i | bit, col) = s * (a - b);
                           }
                       }
                   },
                   [&](const gate::MCPhase& p) {
                       Eigen::Index mask = 0;
                       Eigen::Index want = 0;
                       for (const auto& ctl : p.controls) {
                           Eigen::Index bit = Eigen::Index{1} << (n - 1 - ctl.qubit);
                           mask |= bit;
                           if (ctl.polarity == Polarity::One) {
                               want |= bit;
                           }
                       }
                       Complex phase = std::polar(1.0, p.theta.radians());
                       for (Eigen::Index i = 0; i < dim; ++i) {
                           if ((i & mask) == want) {
                               m.row(i) *= phase;
                           }
                       }
                   },
                   [&](const gate::GlobalPhase& p) { m *= std::polar(1.0, p.theta.radians()); },
               },
               g);
}

}  // namespace detail

/// Unitary implemented by the circuit, simulated gate by gate.
inline ComplexMatrix circuit_matrix(const Circuit& c, const SimulationLimits& limits = {}) {
    detail::check_cap(c.qubits, limits);
    validate(c);
    ComplexMatrix m = identity_matrix(c.qubits);
    for (const auto& g : c.gates) {
        detail::apply_gate(m, g, c.qubits);
    }
    return m;
}

inline std::string write_circuit(const Circuit& c) {
    std::string out = "qubits " + std::to_string(c.qubits) + "\n";
    for (const auto& g : c.gates) {
        std::visit(detail::overloaded{
                       [&](const gate::Hadamard& h) { out += "h " + std::to_string(h.qubit) + "\n"; },
                       [&](const gate::MCPhase& p) {
                           out += "mcp " + detail::format_angle17(p.theta.radians());
                           for (const auto& ctl : p.controls) {
                               out += ctl.polarity == Polarity::One ? " +" : " -";
                               out += std::to_string(ctl.qubit);
                           }
                           out += "\n";
                       },
                       [&](const gate::GlobalPhase& p) {
                           out += "gp " + detail::format_angle17(p.theta.radians()) + "\n";
                       },
                   },
                   g);
    }
    return out;
}

namespace detail {

inline std::size_t parse_index(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
        throw CircuitFormatError(line, "expected a qubit index, got '" + tok + "'");
    }
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        throw CircuitFormatError(line, "qubit index out of range: '" + tok + "'");
    }
}

inline double parse_real(const std::string& tok, std::size_t line) {
    if (tok.empty()) {
        throw CircuitFormatError(line, "expected an angle");
    }
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v)) {
        throw CircuitFormatError(line, "malformed angle '" + tok + "'");
    }
    return v;
}

}  // namespace detail

inline Circuit read_circuit(const std::string& text) {
    if (text.empty() || text.back() != '\n') {
        throw CircuitFormatError(text.empty() ? 1 : static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n') + 1),
                                 "missing trailing newline");
    }
    Circuit c;
    std::size_t line_no = 0;
    std::size_t start = 0;
    bool have_header = false;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        std::string line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        std::istringstream in(line);
        std::vector<std::string> toks;
        for (std::string t; in >> t;) {
            toks.push_back(t);
        }
        if (toks.empty()) {
            throw CircuitFormatError(line_no, "empty line");
        }
        const std::string& op = toks[0];
        if (!have_header) {
            if (op != "qubits" || toks.size() != 2) {
                throw CircuitFormatError(line_no, "expected 'qubits <n>' header");
            }
            c.qubits = detail::parse_index(toks[1], line_no);
            have_header = true;
            continue;
        }
        if (op == "h") {
            if (toks.size() != 2) {
                throw CircuitFormatError(line_no, "'h' takes one qubit");
            }
            std::size_t q = detail::parse_index(toks[1], line_no);
            if (q >= c.qubits) {
                throw CircuitFormatError(line_no, "qubit " + toks[1] + " out of range");
            }
            c.gates.push_back(gate::Hadamard{q});
        } else if (op == "gp") {
            if (toks.size() != 2) {
                throw CircuitFormatError(line_no, "'gp' takes one angle");
            }
            c.gates.push_back(gate::GlobalPhase{Angle(detail::parse_real(toks[1], line_no))});
        } else if (op == "mcp") {
            if (toks.size() < 3) {
                throw CircuitFormatError(line_no, "'mcp' needs an angle and at least one control");
            }
            gate::MCPhase g{Angle(detail::parse_real(toks[1], line_no)), {}};
            std::set<std::size_t> seen;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                const std::string& t = toks[i];
                if (t.size() < 2 || (t[0] != '+' && t[0] != '-')) {
                    throw CircuitFormatError(line_no, "malformed control '" + t + "'");
                }
                std::size_t q = detail::parse_index(t.substr(1), line_no);
                if (q >= c.qubits) {
                    throw CircuitFormatError(line_no, "qubit " + t.substr(1) + " out of range");
                }
                if (!seen.insert(q).second) {
                    throw CircuitFormatError(line_no, "repeated control qubit " + t.substr(1));
                }
                g.controls.push_back({q, t[0] == '+' ? Polarity::One : Polarity::Zero});
            }
            c.gates.push_back(std::move(g));
        } else {
            throw CircuitFormatError(line_no, "unknown gate '" + op + "'");
        }
    }
    if (!have_header) {
        throw CircuitFormatError(1, "expected 'qubits <n>' header");
    }
    return c;
}

}  // namespace qphase
