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

// Dense-matrix denotational semantics.
//
// Qubit ordering: qubit 0 is the leftmost tensor factor and the most
// significant bit of a basis-state index, so Tensor(a, b) denotes
// kron(sem(a), sem(b)). Terms denote 2^n x 2^n unitaries; patterns of type
// (j -> m) denote 2^m x 2^j isometries.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "qphase/ast.hpp"
#include "qphase/evaluator.hpp"
#include "qphase/typecheck.hpp"

namespace qphase {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

struct SimulationLimits {
    std::size_t max_qubits = 12;
};

class SimulationCapError : public std::runtime_error {
   public:
    SimulationCapError(std::size_t qubits, std::size_t cap)
        : std::runtime_error("dense simulation of " + std::to_string(qubits) + " qubits exceeds the cap of " +
                             std::to_string(cap)) {}
};

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Horizontal concatenation [a | b]; both must have the same row count.
inline ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("hcat: row mismatch");
    }
    ComplexMatrix out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

inline ComplexMatrix identity_matrix(std::size_t qubits) {
    Eigen::Index d = Eigen::Index{1} << qubits;
    return ComplexMatrix::Identity(d, d);
}

inline ComplexMatrix ket_column(Basis b) {
    const double h = std::numbers::sqrt2 / 2.0;
    ComplexMatrix v(2, 1);
    switch (b) {
        case Basis::Zero:
            v << 1.0, 0.0;
            break;
        case Basis::One:
            v << 0.0, 1.0;
            break;
        case Basis::Plus:
            v << h, h;
            break;
        case Basis::Minus:
            v << h, -h;
            break;
    }
    return v;
}

/// Largest entrywise modulus of a - b.
inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

namespace detail {

inline void check_cap(std::size_t qubits, const SimulationLimits& limits) {
    if (qubits > limits.max_qubits) {
        throw SimulationCapError(qubits, limits.max_qubits);
    }
}

inline ComplexMatrix sem_pattern_unchecked(const Pattern& p);

inline ComplexMatrix sem_term_unchecked(const Term& t) {
    return t.visit(detail::overloaded{
        [](const term::Phase& x) {
            ComplexMatrix m(1, 1);
            m(0, 0) = std::polar(1.0, x.theta.radians());
            return m;
        },
        [](const term::Identity& x) { return identity_matrix(x.qubits); },
        [](const term::Seq& x) -> ComplexMatrix {
            return sem_term_unchecked(x.second) * sem_term_unchecked(x.first);
        },
        [](const term::Tensor& x) { return kron(sem_term_unchecked(x.left), sem_term_unchecked(x.right)); },
        [](const term::IfLet& x) -> ComplexMatrix {
            ComplexMatrix iota = sem_pattern_unchecked(x.pattern);
            ComplexMatrix u = sem_term_unchecked(x.body);
            ComplexMatrix proj = iota * iota.adjoint();
            ComplexMatrix eye = ComplexMatrix::Identity(iota.rows(), iota.rows());
            return iota * u * iota.adjoint() + (eye - proj);
        },
    });
}

inline ComplexMatrix sem_pattern_unchecked(const Pattern& p) {
    return p.visit(detail::overloaded{
        [](const pattern::Ket& k) { return ket_column(k.basis); },
        [](const pattern::Unitary& u) { return sem_term_unchecked(u.term); },
        [](const pattern::Compose& c) -> ComplexMatrix {
            return sem_pattern_unchecked(c.outer) * sem_pattern_unchecked(c.inner);
        },
        [](const pattern::Tensor& t) { return kron(sem_pattern_unchecked(t.left), sem_pattern_unchecked(t.right)); },
    });
}

inline ComplexMatrix ortho_unchecked(const Pattern& p) {
    return p.visit(detail::overloaded{
        [](const pattern::Ket& k) {
            switch (k.basis) {
                case Basis::Zero:
                    return ket_column(Basis::One);
                case Basis::One:
                    return ket_column(Basis::Zero);
                case Basis::Plus:
                    return ket_column(Basis::Minus);
                case Basis::Minus:
                    return ket_column(Basis::Plus);
            }
            throw std::logic_error("bad basis");
        },
        [](const pattern::Unitary& u) {
            Eigen::Index d = Eigen::Index{1} << u.term.cached_arity();
            return ComplexMatrix(d, 0);
        },
        [](const pattern::Compose& c) {
            // [P Q_perp, P_perp]
            return hcat(sem_pattern_unchecked(c.outer) * ortho_unchecked(c.inner), ortho_unchecked(c.outer));
        },
        [](const pattern::Tensor& t) {
            ComplexMatrix a = sem_pattern_unchecked(t.left);
            ComplexMatrix a_perp = ortho_unchecked(t.left);
            ComplexMatrix b = sem_pattern_unchecked(t.right);
            ComplexMatrix b_perp = ortho_unchecked(t.right);
            return hcat(hcat(kron(a_perp, b), kron(a, b_perp)), kron(a_perp, b_perp));
        },
    });
}

}  // namespace detail

/// Unitary denoted by a well-typed term.
inline ComplexMatrix sem_term(const Term& t, const SimulationLimits& limits = {}) {
    auto n = type_of_term(t).qubits;
    detail::check_cap(n, limits);
    return detail::sem_term_unchecked(t);
}

/// Isometry denoted by a well-typed pattern.
inline ComplexMatrix sem_pattern(const Pattern& p, const SimulationLimits& limits = {}) {
    auto ty = type_of_pattern(p);
    detail::check_cap(ty.output, limits);
    return detail::sem_pattern_unchecked(p);
}

/// An isometry whose columns span the orthogonal complement of the image of
/// sem_pattern(p). Built recursively; the column basis is one valid choice.
inline ComplexMatrix ortho_complement(const Pattern& p, const SimulationLimits& limits = {}) {
    auto ty = type_of_pattern(p);
    detail::check_cap(ty.output, limits);
    return detail::ortho_unchecked(p);
}

/// sem(c_N) * ... * sem(c_1) over n qubits.
inline ComplexMatrix matrix_of_clauses(const ClauseList& cs, std::size_t n, const SimulationLimits& limits = {}) {
    detail::check_cap(n, limits);
    ComplexMatrix acc = identity_matrix(n);
    for (const auto& c : cs) {
        if (c.selector.size() != n) {
            throw std::invalid_argument("matrix_of_clauses: selector length differs from qubit count");
        }
        acc = detail::sem_term_unchecked(clause_term(c)) * acc;
    }
    return acc;
}

inline double unitarity_defect(const ComplexMatrix& u) {
    ComplexMatrix eye = ComplexMatrix::Identity(u.rows(), u.rows());
    return std::max(max_abs_diff(u.adjoint() * u, eye), max_abs_diff(u * u.adjoint(), eye));
}

inline double isometry_defect(const ComplexMatrix& p) {
    return max_abs_diff(p.adjoint() * p, ComplexMatrix::Identity(p.cols(), p.cols()));
}

namespace detail {
inline std::string format_real(double x) {
    if (std::abs(x) < 5e-9) {
        x = 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.8f", x);
    return buf;
}
}  // namespace detail

/// Text rendering: a `dim <rows> <cols>` line, then one line per row with
/// space-separated entries `<re><+|-><im>j` at 8 decimal places.
inline std::string format_matrix(const ComplexMatrix& m) {
    std::string out = "dim " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) {
                out += ' ';
            }
            std::string re = detail::format_real(m(i, j).real());
            std::string im = detail::format_real(m(i, j).imag());
            out += re;
            if (im.front() != '-') {
                out += '+';
            }
            out += im + "j";
        }
        out += '\n';
    }
    return out;
}

}  // namespace qphase
