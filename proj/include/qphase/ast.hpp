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

// Core abstract syntax of the phase / "if let" language.
//
// Terms and patterns are immutable trees held through shared handles, so
// subtrees (prelude gates in particular) are shared freely between programs.
// Every node caches the arity it would have if well-typed; the typechecker
// still performs its own full walk and is the only source of diagnostics.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qphase {

/// An angle in radians. Always finite.
class Angle {
   public:
    constexpr Angle() = default;

    explicit Angle(double radians) : radians_(radians) {
        if (!std::isfinite(radians)) {
            throw std::domain_error("angle must be finite");
        }
    }

    /// pi * num / den, evaluated as (pi * num) / den.
    static Angle from_pi_fraction(std::int64_t num, std::int64_t den) {
        if (den <= 0) {
            throw std::domain_error("angle denominator must be positive");
        }
        return Angle(std::numbers::pi * static_cast<double>(num) / static_cast<double>(den));
    }

    constexpr double radians() const { return radians_; }

    Angle operator-() const { return Angle(-radians_); }

    /// Bit-exact comparison.
    friend bool operator==(const Angle& a, const Angle& b) {
        return std::bit_cast<std::uint64_t>(a.radians_) == std::bit_cast<std::uint64_t>(b.radians_);
    }

   private:
    double radians_ = 0.0;
};

inline Angle angle_from_pi_fraction(std::int64_t num, std::int64_t den) {
    return Angle::from_pi_fraction(num, den);
}

enum class Basis : std::uint8_t { Zero, One, Plus, Minus };

struct TermNode;
struct PatternNode;
class Pattern;

/// Handle to an immutable unitary term.
class Term {
   public:
    explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}

    static Term phase(Angle theta);
    static Term identity(std::size_t qubits);
    static Term seq(Term first, Term second);
    static Term tensor(Term left, Term right);
    static Term if_let(Pattern pattern, Term body);

    const TermNode& node() const { return *node_; }
    const TermNode* get() const { return node_.get(); }

    /// Qubit count if the term is well-typed, -1 otherwise.
    int cached_arity() const;

    template <class Visitor>
    decltype(auto) visit(Visitor&& v) const;

   private:
    std::shared_ptr<const TermNode> node_;
};

/// Handle to an immutable pattern.
class Pattern {
   public:
    explicit Pattern(std::shared_ptr<const PatternNode> node) : node_(std::move(node)) {}

    static Pattern ket(Basis b);
    static Pattern unitary(Term t);
    /// Function-order composition: `inner` is applied first.
    static Pattern compose(Pattern outer, Pattern inner);
    static Pattern tensor(Pattern left, Pattern right);

    const PatternNode& node() const { return *node_; }
    const PatternNode* get() const { return node_.get(); }

    /// Input / output qubit counts if well-typed, -1 otherwise.
    int cached_input() const;
    int cached_output() const;

    template <class Visitor>
    decltype(auto) visit(Visitor&& v) const;

   private:
    std::shared_ptr<const PatternNode> node_;
};

namespace term {
struct Phase {
    Angle theta;
};
struct Identity {
    std::size_t qubits;
};
struct Seq {
    Term first;
    Term second;
};
struct Tensor {
    Term left;
    Term right;
};
struct IfLet {
    Pattern pattern;
    Term body;
};
}  // namespace term

namespace pattern {
struct Ket {
    Basis basis;
};
struct Unitary {
    Term term;
};
struct Compose {
    Pattern outer;
    Pattern inner;
};
struct Tensor {
    Pattern left;
    Pattern right;
};
}  // namespace pattern

struct TermNode {
    std::variant<term::Phase, term::Identity, term::Seq, term::Tensor, term::IfLet> value;
    int arity = -1;
};

struct PatternNode {
    std::variant<pattern::Ket, pattern::Unitary, pattern::Compose, pattern::Tensor> value;
    int input = -1;
    int output = -1;
};

inline int Term::cached_arity() const { return node_->arity; }
inline int Pattern::cached_input() const { return node_->input; }
inline int Pattern::cached_output() const { return node_->output; }

template <class Visitor>
decltype(auto) Term::visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), node_->value);
}

template <class Visitor>
decltype(auto) Pattern::visit(Visitor&& v) const {
    return std::visit(std::forward<Visitor>(v), node_->value);
}

inline Term Term::phase(Angle theta) {
    return Term(std::make_shared<const TermNode>(TermNode{term::Phase{theta}, 0}));
}

inline Term Term::identity(std::size_t qubits) {
    return Term(std::make_shared<const TermNode>(TermNode{term::Identity{qubits}, static_cast<int>(qubits)}));
}

inline Term Term::seq(Term first, Term second) {
    int a = first.cached_arity();
    int b = second.cached_arity();
    int arity = (a >= 0 && a == b) ? a : -1;
    return Term(std::make_shared<const TermNode>(TermNode{term::Seq{std::move(first), std::move(second)}, arity}));
}

inline Term Term::tensor(Term left, Term right) {
    int a = left.cached_arity();
    int b = right.cached_arity();
    int arity = (a >= 0 && b >= 0) ? a + b : -1;
    return Term(std::make_shared<const TermNode>(TermNode{term::Tensor{std::move(left), std::move(right)}, arity}));
}

inline Term Term::if_let(Pattern pattern, Term body) {
    int arity = -1;
    if (pattern.cached_input() >= 0 && pattern.cached_input() == body.cached_arity()) {
        arity = pattern.cached_output();
    }
    return Term(std::make_shared<const TermNode>(TermNode{term::IfLet{std::move(pattern), std::move(body)}, arity}));
}

inline Pattern Pattern::ket(Basis b) {
    return Pattern(std::make_shared<const PatternNode>(PatternNode{pattern::Ket{b}, 0, 1}));
}

inline Pattern Pattern::unitary(Term t) {
    int n = t.cached_arity();
    return Pattern(std::make_shared<const PatternNode>(PatternNode{pattern::Unitary{std::move(t)}, n, n}));
}

inline Pattern Pattern::compose(Pattern outer, Pattern inner) {
    int in = -1;
    int out = -1;
    if (outer.cached_input() >= 0 && inner.cached_input() >= 0 && inner.cached_output() == outer.cached_input()) {
        in = inner.cached_input();
        out = outer.cached_output();
    }
    return Pattern(
        std::make_shared<const PatternNode>(PatternNode{pattern::Compose{std::move(outer), std::move(inner)}, in, out}));
}

inline Pattern Pattern::tensor(Pattern left, Pattern right) {
    int in = -1;
    int out = -1;
    if (left.cached_input() >= 0 && right.cached_input() >= 0) {
        in = left.cached_input() + right.cached_input();
        out = left.cached_output() + right.cached_output();
    }
    return Pattern(
        std::make_shared<const PatternNode>(PatternNode{pattern::Tensor{std::move(left), std::move(right)}, in, out}));
}

// Shorthands used by builders and tests.
inline Term ph(Angle theta) { return Term::phase(theta); }
inline Term ph(double radians) { return Term::phase(Angle(radians)); }
inline Term id(std::size_t n) { return Term::identity(n); }
inline Pattern ket0() { return Pattern::ket(Basis::Zero); }
inline Pattern ket1() { return Pattern::ket(Basis::One); }
inline Pattern ket_plus() { return Pattern::ket(Basis::Plus); }
inline Pattern ket_minus() { return Pattern::ket(Basis::Minus); }

/// Left-nested sequence of the given terms; requires at least one term.
inline Term seq_all(const std::vector<Term>& terms) {
    if (terms.empty()) {
        throw std::invalid_argument("seq_all of an empty list");
    }
    Term acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        acc = Term::seq(acc, terms[i]);
    }
    return acc;
}

/// Left-nested tensor of the given terms; requires at least one term.
inline Term tensor_all(const std::vector<Term>& terms) {
    if (terms.empty()) {
        throw std::invalid_argument("tensor_all of an empty list");
    }
    Term acc = terms.front();
    for (std::size_t i = 1; i < terms.size(); ++i) {
        acc = Term::tensor(acc, terms[i]);
    }
    return acc;
}

inline Pattern tensor_all(const std::vector<Pattern>& patterns) {
    if (patterns.empty()) {
        throw std::invalid_argument("tensor_all of an empty list");
    }
    Pattern acc = patterns.front();
    for (std::size_t i = 1; i < patterns.size(); ++i) {
        acc = Pattern::tensor(acc, patterns[i]);
    }
    return acc;
}

bool structural_equal(const Term& a, const Term& b);
bool structural_equal(const Pattern& a, const Pattern& b);

namespace detail {
template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;
}  // namespace detail

inline bool structural_equal(const Term& a, const Term& b) {
    if (a.get() == b.get()) {
        return true;
    }
    const auto& va = a.node().value;
    const auto& vb = b.node().value;
    if (va.index() != vb.index()) {
        return false;
    }
    return std::visit(
        detail::overloaded{
            [&](const term::Phase& x) { return x.theta == std::get<term::Phase>(vb).theta; },
            [&](const term::Identity& x) { return x.qubits == std::get<term::Identity>(vb).qubits; },
            [&](const term::Seq& x) {
                const auto& y = std::get<term::Seq>(vb);
                return structural_equal(x.first, y.first) && structural_equal(x.second, y.second);
            },
            [&](const term::Tensor& x) {
                const auto& y = std::get<term::Tensor>(vb);
                return structural_equal(x.left, y.left) && structural_equal(x.right, y.right);
            },
            [&](const term::IfLet& x) {
                const auto& y = std::get<term::IfLet>(vb);
                return structural_equal(x.pattern, y.pattern) && structural_equal(x.body, y.body);
            },
        },
        va);
}

inline bool structural_equal(const Pattern& a, const Pattern& b) {
    if (a.get() == b.get()) {
        return true;
    }
    const auto& va = a.node().value;
    const auto& vb = b.node().value;
    if (va.index() != vb.index()) {
        return false;
    }
    return std::visit(
        detail::overloaded{
            [&](const pattern::Ket& x) { return x.basis == std::get<pattern::Ket>(vb).basis; },
            [&](const pattern::Unitary& x) { return structural_equal(x.term, std::get<pattern::Unitary>(vb).term); },
            [&](const pattern::Compose& x) {
                const auto& y = std::get<pattern::Compose>(vb);
                return structural_equal(x.outer, y.outer) && structural_equal(x.inner, y.inner);
            },
            [&](const pattern::Tensor& x) {
                const auto& y = std::get<pattern::Tensor>(vb);
                return structural_equal(x.left, y.left) && structural_equal(x.right, y.right);
            },
        },
        va);
}

/// Checks the construction invariants of every node (finite angles, and the
/// cached arities agreeing with a recomputation from the children).
bool validate(const Term& t);
bool validate(const Pattern& p);

inline bool validate(const Pattern& p) {
    return p.visit(detail::overloaded{
        [&](const pattern::Ket&) { return p.cached_input() == 0 && p.cached_output() == 1; },
        [&](const pattern::Unitary& u) {
            return validate(u.term) && p.cached_input() == u.term.cached_arity() &&
                   p.cached_output() == u.term.cached_arity();
        },
        [&](const pattern::Compose& c) {
            if (!validate(c.outer) || !validate(c.inner)) {
                return false;
            }
            bool ok = c.outer.cached_input() >= 0 && c.inner.cached_input() >= 0 &&
                      c.inner.cached_output() == c.outer.cached_input();
            return ok ? (p.cached_input() == c.inner.cached_input() && p.cached_output() == c.outer.cached_output())
                      : (p.cached_input() == -1 && p.cached_output() == -1);
        },
        [&](const pattern::Tensor& t) {
            if (!validate(t.left) || !validate(t.right)) {
                return false;
            }
            bool ok = t.left.cached_input() >= 0 && t.right.cached_input() >= 0;
            return ok ? (p.cached_input() == t.left.cached_input() + t.right.cached_input() &&
                         p.cached_output() == t.left.cached_output() + t.right.cached_output())
                      : (p.cached_input() == -1);
        },
    });
}

inline bool validate(const Term& t) {
    return t.visit(detail::overloaded{
        [&](const term::Phase& x) { return std::isfinite(x.theta.radians()) && t.cached_arity() == 0; },
        [&](const term::Identity& x) { return t.cached_arity() == static_cast<int>(x.qubits); },
        [&](const term::Seq& x) {
            if (!validate(x.first) || !validate(x.second)) {
                return false;
            }
            int a = x.first.cached_arity();
            bool ok = a >= 0 && a == x.second.cached_arity();
            return t.cached_arity() == (ok ? a : -1);
        },
        [&](const term::Tensor& x) {
            if (!validate(x.left) || !validate(x.right)) {
                return false;
            }
            int a = x.left.cached_arity();
            int b = x.right.cached_arity();
            return t.cached_arity() == ((a >= 0 && b >= 0) ? a + b : -1);
        },
        [&](const term::IfLet& x) {
            if (!validate(x.pattern) || !validate(x.body)) {
                return false;
            }
            bool ok = x.pattern.cached_input() >= 0 && x.pattern.cached_input() == x.body.cached_arity();
            return t.cached_arity() == (ok ? x.pattern.cached_output() : -1);
        },
    });
}

}  // namespace qphase
