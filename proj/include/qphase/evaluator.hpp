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

// Normalization of well-typed terms into lists of normal clauses
// `if q { ph(theta) x id(k) }` where q is a tensor of single-qubit slots.
//
// Evaluation runs in a context (q, l, r) : k -> n. The term under evaluation
// acts on k of the free (identity) slots of q, with l free slots to its left
// and r to its right. A single structural pass produces the clause list.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qphase/ast.hpp"
#include "qphase/typecheck.hpp"

namespace qphase {

enum class SimpleSlot : std::uint8_t { Id, Zero, One, Plus, Minus };

inline SimpleSlot slot_of(Basis b) {
    switch (b) {
        case Basis::Zero:
            return SimpleSlot::Zero;
        case Basis::One:
            return SimpleSlot::One;
        case Basis::Plus:
            return SimpleSlot::Plus;
        case Basis::Minus:
            return SimpleSlot::Minus;
    }
    throw std::logic_error("bad basis");
}

struct SimplePattern {
    std::vector<SimpleSlot> slots;

    static SimplePattern identity(std::size_t n) { return {std::vector<SimpleSlot>(n, SimpleSlot::Id)}; }

    std::size_t size() const { return slots.size(); }

    /// Number of Id slots, i.e. the input arity of the pattern.
    std::size_t free_count() const {
        std::size_t k = 0;
        for (auto s : slots) {
            k += s == SimpleSlot::Id;
        }
        return k;
    }

    friend bool operator==(const SimplePattern&, const SimplePattern&) = default;
};

struct NormalClause {
    SimplePattern selector;
    Angle theta;

    NormalClause dagger() const { return {selector, -theta}; }

    friend bool operator==(const NormalClause& a, const NormalClause& b) {
        return a.selector == b.selector && a.theta == b.theta;
    }
};

using ClauseList = std::vector<NormalClause>;

/// Invariant: l + k + r == q.free_count().
struct EvalContext {
    SimplePattern q;
    std::size_t l = 0;
    std::size_t r = 0;
    std::size_t k = 0;

    bool valid() const { return l + k + r == q.free_count(); }
};

/// Replaces the i-th Id slot (zero-based, counting Id slots only).
inline SimplePattern substitute(const SimplePattern& q, SimpleSlot x, std::size_t i) {
    if (x == SimpleSlot::Id) {
        throw std::invalid_argument("substitute: replacement must be a ket slot");
    }
    SimplePattern out = q;
    std::size_t seen = 0;
    for (auto& s : out.slots) {
        if (s == SimpleSlot::Id) {
            if (seen == i) {
                s = x;
                return out;
            }
            ++seen;
        }
    }
    throw std::out_of_range("substitute: index " + std::to_string(i) + " out of range (" + std::to_string(seen) +
                            " free slots)");
}

/// Reversed list with every angle negated.
inline ClauseList dagger(const ClauseList& cs) {
    ClauseList out;
    out.reserve(cs.size());
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        out.push_back(it->dagger());
    }
    return out;
}

namespace detail {

// Arity checks stay on in release builds; on well-typed input they never fire.
inline void require(bool cond, const char* what) {
    if (!cond) {
        throw std::logic_error(std::string("evaluator invariant violated: ") + what);
    }
}

inline std::size_t arity_of(const Term& t) {
    require(t.cached_arity() >= 0, "ill-typed term");
    return static_cast<std::size_t>(t.cached_arity());
}

inline void eval_term_into(const EvalContext& ctx, const Term& s, ClauseList& out);
inline SimplePattern eval_pattern_into(const EvalContext& ctx, const Pattern& p, ClauseList& out);

inline void eval_term_into(const EvalContext& ctx, const Term& s, ClauseList& out) {
    require(ctx.valid(), "context arity");
    require(arity_of(s) == ctx.k, "term arity differs from context");
    s.visit(detail::overloaded{
        [&](const term::Phase& x) { out.push_back({ctx.q, x.theta}); },
        [&](const term::Identity&) {},
        [&](const term::Seq& x) {
            eval_term_into(ctx, x.first, out);
            eval_term_into(ctx, x.second, out);
        },
        [&](const term::Tensor& x) {
            std::size_t k1 = arity_of(x.left);
            std::size_t k2 = arity_of(x.right);
            eval_term_into({ctx.q, ctx.l, ctx.r + k2, k1}, x.left, out);
            eval_term_into({ctx.q, ctx.l + k1, ctx.r, k2}, x.right, out);
        },
        [&](const term::IfLet& x) {
            ClauseList c;
            SimplePattern q2 = eval_pattern_into(ctx, x.pattern, c);
            ClauseList c_dag = dagger(c);
            out.insert(out.end(), c_dag.begin(), c_dag.end());
            eval_term_into({std::move(q2), ctx.l, ctx.r, arity_of(x.body)}, x.body, out);
            out.insert(out.end(), c.begin(), c.end());
        },
    });
}

// Returns q' with free_count(q') == l + j + r, where j is the pattern input.
inline SimplePattern eval_pattern_into(const EvalContext& ctx, const Pattern& p, ClauseList& out) {
    require(ctx.valid(), "context arity");
    require(p.cached_output() >= 0 && static_cast<std::size_t>(p.cached_output()) == ctx.k,
            "pattern output differs from context");
    return p.visit(detail::overloaded{
        [&](const pattern::Ket& x) { return substitute(ctx.q, slot_of(x.basis), ctx.l); },
        [&](const pattern::Unitary& u) {
            eval_term_into(ctx, u.term, out);
            return ctx.q;
        },
        [&](const pattern::Compose& c) {
            ClauseList first;
            SimplePattern q1 = eval_pattern_into(ctx, c.outer, first);
            std::size_t mid = static_cast<std::size_t>(c.inner.cached_output());
            ClauseList second;
            SimplePattern q2 = eval_pattern_into({std::move(q1), ctx.l, ctx.r, mid}, c.inner, second);
            out.insert(out.end(), second.begin(), second.end());
            out.insert(out.end(), first.begin(), first.end());
            return q2;
        },
        [&](const pattern::Tensor& t) {
            std::size_t j1 = static_cast<std::size_t>(t.left.cached_input());
            std::size_t k1 = static_cast<std::size_t>(t.left.cached_output());
            std::size_t k2 = static_cast<std::size_t>(t.right.cached_output());
            ClauseList first;
            SimplePattern q1 = eval_pattern_into({ctx.q, ctx.l, ctx.r + k2, k1}, t.left, first);
            ClauseList second;
            SimplePattern q2 = eval_pattern_into({std::move(q1), ctx.l + j1, ctx.r, k2}, t.right, second);
            out.insert(out.end(), second.begin(), second.end());
            out.insert(out.end(), first.begin(), first.end());
            return q2;
        },
    });
}

}  // namespace detail

inline ClauseList eval_term(const EvalContext& ctx, const Term& s) {
    ClauseList out;
    detail::eval_term_into(ctx, s, out);
    return out;
}

inline std::pair<ClauseList, SimplePattern> eval_pattern(const EvalContext& ctx, const Pattern& p) {
    ClauseList out;
    SimplePattern q = detail::eval_pattern_into(ctx, p, out);
    return {std::move(out), std::move(q)};
}

/// Normal form of a well-typed term. The empty list denotes id(n).
inline ClauseList normalize(const Term& t) {
    std::size_t n = type_of_term(t).qubits;
    return eval_term({SimplePattern::identity(n), 0, 0, n}, t);
}

/// Merges adjacent clauses with equal selectors and drops clauses whose
/// angle is a multiple of 2*pi (within 1e-12).
inline ClauseList fuse_clauses(const ClauseList& cs) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    auto trivial = [&](double theta) {
        double r = std::remainder(theta, kTwoPi);
        return std::abs(r) <= 1e-12;
    };
    ClauseList out;
    for (const auto& c : cs) {
        if (!out.empty() && out.back().selector == c.selector) {
            out.back().theta = Angle(out.back().theta.radians() + c.theta.radians());
            if (trivial(out.back().theta.radians())) {
                out.pop_back();
            }
            continue;
        }
        if (!trivial(c.theta.radians())) {
            out.push_back(c);
        }
    }
    return out;
}

/// The term denoted by a simple pattern: a tensor of kets and id(1) slots.
inline Pattern to_pattern(const SimplePattern& q) {
    if (q.slots.empty()) {
        return Pattern::unitary(Term::identity(0));
    }
    std::vector<Pattern> parts;
    parts.reserve(q.size());
    for (auto s : q.slots) {
        switch (s) {
            case SimpleSlot::Id:
                parts.push_back(Pattern::unitary(Term::identity(1)));
                break;
            case SimpleSlot::Zero:
                parts.push_back(ket0());
                break;
            case SimpleSlot::One:
                parts.push_back(ket1());
                break;
            case SimpleSlot::Plus:
                parts.push_back(ket_plus());
                break;
            case SimpleSlot::Minus:
                parts.push_back(ket_minus());
                break;
        }
    }
    return tensor_all(parts);
}

/// `if q { ph(theta) x id(k) }`.
inline Term clause_term(const NormalClause& c) {
    return Term::if_let(to_pattern(c.selector),
                        Term::tensor(Term::phase(c.theta), Term::identity(c.selector.free_count())));
}

/// The normal term c1; ...; cN, or id(n) when empty.
inline Term compose_clauses(const ClauseList& cs, std::size_t n) {
    if (cs.empty()) {
        return Term::identity(n);
    }
    std::vector<Term> terms;
    terms.reserve(cs.size());
    for (const auto& c : cs) {
        terms.push_back(clause_term(c));
    }
    return seq_all(terms);
}

}  // namespace qphase
