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

// Builders that produce core-language terms for standard algorithm families:
// Grover search, the quantum Fourier transform, Trotterized Hamiltonian
// simulation, quantum signal processing and the quantum eigenvalue transform.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qphase/ast.hpp"
#include "qphase/metaops.hpp"
#include "qphase/prelude.hpp"
#include "qphase/semantics.hpp"
#include "qphase/typecheck.hpp"

namespace qphase {

// ---------------------------------------------------------------------------
// Grover

/// if |w_0> x ... x |w_{n-1}> { ph(pi) }, qubit 0 holding the most
/// significant bit of omega. Denotes I - 2|omega><omega|.
inline Term grover_oracle(std::size_t n, std::uint64_t omega) {
    if (n >= 64 || omega >= (std::uint64_t{1} << n)) {
        throw std::out_of_range("grover_oracle: omega must be below 2^n");
    }
    if (n == 0) {
        return Term::if_let(Pattern::unitary(Term::identity(0)), ph(std::numbers::pi));
    }
    std::vector<Pattern> kets;
    for (std::size_t q = 0; q < n; ++q) {
        bool bit = (omega >> (n - 1 - q)) & 1U;
        kets.push_back(bit ? ket1() : ket0());
    }
    return Term::if_let(tensor_all(kets), ph(std::numbers::pi));
}

/// ph(pi) x id(n); if |+> x ... x |+> { ph(pi) }. Denotes 2|s><s| - I.
inline Term grover_diffusion(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("grover_diffusion: n must be positive");
    }
    std::vector<Pattern> plus(n, ket_plus());
    return Term::seq(Term::tensor(ph(std::numbers::pi), id(n)), Term::if_let(tensor_all(plus), ph(std::numbers::pi)));
}

/// ceil(pi * sqrt(2^n) / 4).
inline std::size_t grover_default_iterations(std::size_t n) {
    return static_cast<std::size_t>(std::ceil(std::numbers::pi * std::sqrt(std::ldexp(1.0, static_cast<int>(n))) / 4.0));
}

/// H on every qubit, then `iterations` rounds of oracle; diffusion.
inline Term grover_program(std::size_t n, std::uint64_t omega, std::optional<std::size_t> iterations = std::nullopt) {
    Term oracle = grover_oracle(n, omega);
    Term diffusion = grover_diffusion(n);
    std::vector<Term> hs(n, prelude_gate("H"));
    std::vector<Term> steps{tensor_all(hs)};
    std::size_t k = iterations.value_or(grover_default_iterations(n));
    for (std::size_t i = 0; i < k; ++i) {
        steps.push_back(oracle);
        steps.push_back(diffusion);
    }
    return seq_all(steps);
}

/// |<omega| U |0...0>|^2.
inline double grover_success_probability(const Term& program, std::uint64_t omega) {
    ComplexMatrix u = sem_term(program);
    return std::norm(u(static_cast<Eigen::Index>(omega), 0));
}

// ---------------------------------------------------------------------------
// Quantum Fourier transform

/// if |1> { ph(pi / 2^(k-1)) }.
inline Term dyadic_phase_gate(std::size_t k) {
    if (k < 1 || k > 62) {
        throw std::out_of_range("dyadic_phase_gate: k out of range");
    }
    return Term::if_let(ket1(), Term::phase(Angle::from_pi_fraction(1, std::int64_t{1} << (k - 1))));
}

/// QFT_0 = id(0);
/// QFT_{m+1} = H x id(m); if |1> x id(m) { R_2 x ... x R_{m+1} }; id(1) x QFT_m.
/// The output qubits come out in reversed order.
inline Term qft(std::size_t n) {
    if (n == 0) {
        return id(0);
    }
    std::size_t m = n - 1;
    Term rotations = id(0);
    if (m > 0) {
        std::vector<Term> rs;
        for (std::size_t k = 2; k <= m + 1; ++k) {
            rs.push_back(dyadic_phase_gate(k));
        }
        rotations = tensor_all(rs);
    }
    Term head = Term::tensor(prelude_gate("H"), id(m));
    Term controlled = Term::if_let(Pattern::tensor(ket1(), Pattern::unitary(id(m))), rotations);
    return Term::seq(Term::seq(head, controlled), Term::tensor(id(1), qft(m)));
}

/// SWAP on qubits (j, j + 1) of an n-qubit register.
inline Term adjacent_swap(std::size_t n, std::size_t j) {
    if (n < 2 || j + 1 >= n) {
        throw std::out_of_range("adjacent_swap: position out of range");
    }
    std::vector<Term> parts;
    if (j > 0) {
        parts.push_back(id(j));
    }
    parts.push_back(prelude_gate("SWAP"));
    if (n - j - 2 > 0) {
        parts.push_back(id(n - j - 2));
    }
    return tensor_all(parts);
}

/// Reverses the qubit order with n(n-1)/2 adjacent swaps; id(n) if n < 2.
inline Term reverse_qubits(std::size_t n) {
    if (n < 2) {
        return id(n);
    }
    std::vector<Term> swaps;
    for (std::size_t pass = 0; pass + 1 < n; ++pass) {
        for (std::size_t j = 0; j + 1 < n - pass; ++j) {
            swaps.push_back(adjacent_swap(n, j));
        }
    }
    return seq_all(swaps);
}

/// qft(n) followed by the qubit reversal: the plain DFT.
inline Term qft_bitrev(std::size_t n) { return Term::seq(qft(n), reverse_qubits(n)); }

// ---------------------------------------------------------------------------
// Hamiltonian simulation

struct SpectralComponent {
    double lambda;
    Pattern pattern;
};

/// H = sum_i lambda_i * Pi_i with Pi_i the projector onto the image of
/// pattern_i; every pattern has output arity n.
struct HamiltonianSpec {
    std::size_t n = 0;
    std::vector<SpectralComponent> components;
};

/// U_{} = id(n); U_{c_1..c_{k+1}} = if p_{k+1} { ph(-lambda_{k+1} t) x id(m) }; U_{c_1..c_k}.
inline Term trotter_step(const HamiltonianSpec& spec, double t) {
    Term acc = id(spec.n);
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const auto& c = spec.components[i];
        PatternType ty = type_of_pattern(c.pattern);
        if (ty.output != spec.n) {
            throw std::invalid_argument("trotter_step: component " + std::to_string(i) + " acts on " +
                                        std::to_string(ty.output) + " qubits, expected " + std::to_string(spec.n));
        }
        Term body = Term::tensor(ph(-c.lambda * t), id(ty.input));
        acc = Term::seq(Term::if_let(c.pattern, body), acc);
    }
    return acc;
}

/// trotter_step(spec, t / steps) repeated `steps` times.
inline Term trotterize(const HamiltonianSpec& spec, double t, std::size_t steps) {
    if (steps == 0) {
        throw std::invalid_argument("trotterize: steps must be positive");
    }
    Term step = trotter_step(spec, t / static_cast<double>(steps));
    return seq_all(std::vector<Term>(steps, step));
}

/// Dense sum_i lambda_i * iota_i * iota_i^dagger.
inline ComplexMatrix hamiltonian_matrix(const HamiltonianSpec& spec) {
    ComplexMatrix h = ComplexMatrix::Zero(Eigen::Index{1} << spec.n, Eigen::Index{1} << spec.n);
    for (const auto& c : spec.components) {
        ComplexMatrix iota = sem_pattern(c.pattern);
        if (iota.rows() != h.rows()) {
            throw std::invalid_argument("hamiltonian_matrix: component arity mismatch");
        }
        h += c.lambda * (iota * iota.adjoint());
    }
    return h;
}

/// exp(-i H t) for Hermitian H, through its eigendecomposition.
inline ComplexMatrix exact_evolution(const ComplexMatrix& h, double t) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("exact_evolution: eigendecomposition failed");
    }
    Eigen::VectorXcd phases(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::polar(1.0, -eig.eigenvalues()(i) * t);
    }
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

/// Two interacting spin-1/2 dipoles,
///   H = w1 Z x I + w2 I x Z + J (X x X + Y x Y - 2 Z x Z),
/// with every Pauli written as a difference of rank-one projectors and the
/// tensor products distributed: 20 components on 2 qubits.
inline HamiltonianSpec dipole_spec(double omega1, double omega2, double coupling) {
    struct Axis {
        Pattern plus;
        Pattern minus;
    };
    Term s = prelude_gate("S");
    Axis z{ket0(), ket1()};
    Axis x{ket_plus(), ket_minus()};
    Axis y{Pattern::compose(Pattern::unitary(s), ket_plus()), Pattern::compose(Pattern::unitary(s), ket_minus())};

    HamiltonianSpec spec{2, {}};
    // coef * (A+ + a_sign A-) x (B+ + b_sign B-)
    auto add = [&](double coef, const Axis& a, double a_sign, const Axis& b, double b_sign) {
        spec.components.push_back({coef, Pattern::tensor(a.plus, b.plus)});
        spec.components.push_back({coef * b_sign, Pattern::tensor(a.plus, b.minus)});
        spec.components.push_back({coef * a_sign, Pattern::tensor(a.minus, b.plus)});
        spec.components.push_back({coef * a_sign * b_sign, Pattern::tensor(a.minus, b.minus)});
    };
    add(omega1, z, -1.0, z, +1.0);
    add(omega2, z, +1.0, z, -1.0);
    add(coupling, x, -1.0, x, -1.0);
    add(coupling, y, -1.0, y, -1.0);
    add(-2.0 * coupling, z, -1.0, z, -1.0);
    return spec;
}

// ---------------------------------------------------------------------------
// Quantum signal processing

/// ph(-alpha/2) x id(1); if |0> { ph(alpha) }  =  exp(i alpha Z / 2).
inline Term rz(double alpha) {
    return Term::seq(Term::tensor(ph(-alpha / 2.0), id(1)), Term::if_let(ket0(), ph(alpha)));
}

/// ph(-alpha/2) x id(1); if |+> { ph(alpha) }  =  exp(i alpha X / 2).
inline Term rx(double alpha) {
    return Term::seq(Term::tensor(ph(-alpha / 2.0), id(1)), Term::if_let(ket_plus(), ph(alpha)));
}

/// Program denoting S(phi_0) W(a) S(phi_1) ... W(a) S(phi_d), where
/// W(a) = [[a, i sqrt(1-a^2)], [i sqrt(1-a^2), a]] = rx(2 acos a) and
/// S(phi) = exp(i phi Z) = rz(2 phi).
///
/// Terms compose left to right while the matrix product reads right to left,
/// so the angles are consumed from phi_d down to phi_0.
inline Term qsp_program(double a, const std::vector<double>& phis) {
    if (!(a >= -1.0 && a <= 1.0)) {
        throw std::domain_error("qsp_program: a must lie in [-1, 1]");
    }
    if (phis.empty()) {
        throw std::invalid_argument("qsp_program: at least one phase is required");
    }
    const double signal = 2.0 * std::acos(a);
    Term acc = rz(2.0 * phis.back());
    for (std::size_t i = phis.size() - 1; i-- > 0;) {
        acc = Term::seq(Term::seq(acc, rx(signal)), rz(2.0 * phis[i]));
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Quantum eigenvalue transform

/// ph(-phi) x id(n); if p { ph(2 phi) x id(m) }  =  exp(i phi (2 Pi - I)).
inline Term projector_phase(const Pattern& p, double phi) {
    PatternType ty = type_of_pattern(p);
    return Term::seq(Term::tensor(ph(-phi), id(ty.output)),
                     Term::if_let(p, Term::tensor(ph(2.0 * phi), id(ty.input))));
}

/// QET(s_U, p; ())          = id(n)
/// QET(s_U, p; (phi_1))     = s_U; R(phi_1)
/// QET(s_U, p; (phi_1..k))  = s_U; R(phi_k); s_U^dagger; R(phi_{k-1}); QET(s_U, p; (phi_1..phi_{k-2}))
///
/// With this pairing the program denotes
///   R(phi_1) U^dagger R(phi_2) U ... R(phi_{d-1}) U^dagger R(phi_d) U          (d even)
///   R(phi_1) U R(phi_2) U^dagger R(phi_3) U ... R(phi_{d-1}) U^dagger R(phi_d) U  (d odd)
inline Term qet_program(const Term& s_u, const Pattern& p, const std::vector<double>& phis) {
    std::size_t n = type_of_term(s_u).qubits;
    PatternType ty = type_of_pattern(p);
    if (ty.output != n) {
        throw std::invalid_argument("qet_program: pattern acts on " + std::to_string(ty.output) +
                                    " qubits but the unitary on " + std::to_string(n));
    }
    if (phis.empty()) {
        return id(n);
    }
    if (phis.size() == 1) {
        return Term::seq(s_u, projector_phase(p, phis[0]));
    }
    std::size_t k = phis.size();
    Term u_dag = invert(s_u);
    Term step = seq_all({s_u, projector_phase(p, phis[k - 1]), u_dag, projector_phase(p, phis[k - 2])});
    std::vector<double> rest(phis.begin(), phis.end() - 2);
    return Term::seq(step, qet_program(s_u, p, rest));
}

}  // namespace qphase
