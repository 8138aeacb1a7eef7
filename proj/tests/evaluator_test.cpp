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


#include <gtest/gtest.h>

#include <numbers>

#include "qphase/qphase.hpp"
#include "support/fuzz.hpp"
#include "support/oracles.hpp"

namespace qphase {
namespace {

constexpr double kPi = std::numbers::pi;
using S = SimpleSlot;

SimplePattern sp(std::vector<S> slots) { return {std::move(slots)}; }
NormalClause clause(std::vector<S> slots, double theta) { return {sp(std::move(slots)), Angle(theta)}; }
EvalContext ctx(std::size_t n) { return {SimplePattern::identity(n), 0, 0, n}; }

TEST(Substitute, SpecExamples) {
    EXPECT_EQ(substitute(sp({S::Zero, S::Id, S::Id}), S::Minus, 0), sp({S::Zero, S::Minus, S::Id}));
    EXPECT_EQ(substitute(sp({S::Id}), S::One, 0), sp({S::One}));
    EXPECT_THROW(substitute(sp({S::One, S::Id}), S::Zero, 1), std::out_of_range);
}

TEST(Substitute, CountsOnlyIdSlots) {
    EXPECT_EQ(substitute(sp({S::Id, S::Plus, S::Id}), S::One, 1), sp({S::Id, S::Plus, S::One}));
    EXPECT_THROW(substitute(sp({S::Id}), S::Id, 0), std::invalid_argument);
}

TEST(EvalTerm, SpecExamples) {
    EXPECT_EQ(eval_term(ctx(1), prelude_gate("X")), (ClauseList{clause({S::Minus}, kPi)}));
    EXPECT_EQ(eval_term(ctx(2), prelude_gate("CX")), (ClauseList{clause({S::One, S::Minus}, kPi)}));
    EXPECT_TRUE(eval_term(ctx(1), id(1)).empty());
}

TEST(EvalTerm, TensorWhiskers) {
    // ph(a) x X in ([Id, Id], 0, 0): the phase sees the whole selector, X its slot.
    ClauseList cs = eval_term(ctx(1), Term::tensor(ph(0.5), prelude_gate("X")));
    EXPECT_EQ(cs, (ClauseList{clause({S::Id}, 0.5), clause({S::Minus}, kPi)}));
    cs = eval_term(ctx(2), Term::tensor(prelude_gate("Z"), prelude_gate("X")));
    EXPECT_EQ(cs, (ClauseList{clause({S::One, S::Id}, kPi), clause({S::Id, S::Minus}, kPi)}));
}

TEST(EvalTerm, IfLetConjugates) {
    Term t = Term::if_let(Pattern::compose(Pattern::unitary(prelude_gate("S")), ket_minus()), ph(kPi));
    EXPECT_EQ(eval_term(ctx(1), t),
              (ClauseList{clause({S::One}, -kPi / 2), clause({S::Minus}, kPi), clause({S::One}, kPi / 2)}));
}

TEST(EvalTerm, ArityAssertionFires) {
    EXPECT_THROW(eval_term(ctx(2), prelude_gate("X")), std::logic_error);
    EXPECT_THROW(eval_term({SimplePattern::identity(2), 1, 0, 0}, ph(1.0)), std::logic_error);
}

TEST(EvalPattern, SpecExamples) {
    auto [c1, q1] = eval_pattern(ctx(2), Pattern::tensor(ket1(), Pattern::unitary(id(1))));
    EXPECT_TRUE(c1.empty());
    EXPECT_EQ(q1, sp({S::One, S::Id}));

    auto [c2, q2] = eval_pattern(ctx(1), Pattern::compose(Pattern::unitary(prelude_gate("S")), ket_minus()));
    EXPECT_EQ(c2, (ClauseList{clause({S::One}, kPi / 2)}));
    EXPECT_EQ(q2, sp({S::Minus}));

    auto [c3, q3] = eval_pattern(ctx(1), Pattern::unitary(prelude_gate("X")));
    EXPECT_EQ(c3, (ClauseList{clause({S::Minus}, kPi)}));
    EXPECT_EQ(q3, sp({S::Id}));
}

TEST(EvalPattern, ReturnedContextArity) {
    testing::Fuzzer f(41);
    for (int i = 0; i < 200; ++i) {
        std::size_t m = f.below(5);
        Pattern p = f.pattern(m, 4);
        std::size_t l = f.below(2);
        std::size_t r = f.below(2);
        EvalContext c{SimplePattern::identity(l + m + r), l, r, m};
        auto [cs, q] = eval_pattern(c, p);
        EXPECT_EQ(q.size(), l + m + r);
        EXPECT_EQ(q.free_count(), l + static_cast<std::size_t>(p.cached_input()) + r);
        for (const auto& cl : cs) {
            EXPECT_EQ(cl.selector.size(), l + m + r);
        }
    }
}

TEST(EvalPattern, UnitaryConjugationIsIdentity) {
    testing::Fuzzer f(42);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = f.below(4);
        auto [cs, q] = eval_pattern(ctx(n), Pattern::unitary(f.term(n, 4)));
        ClauseList both = dagger(cs);
        both.insert(both.end(), cs.begin(), cs.end());
        EXPECT_LT(max_abs_diff(matrix_of_clauses(both, n), oracle::eye(n)), 1e-10);
    }
}

TEST(Normalize, SpecExamples) {
    EXPECT_TRUE(normalize(id(5)).empty());
    EXPECT_EQ(normalize(prelude_gate("SWAP")),
              (ClauseList{clause({S::One, S::Minus}, -kPi), clause({S::Minus, S::One}, kPi),
                          clause({S::One, S::Minus}, kPi)}));
    EXPECT_EQ(normalize(ph(kPi)), (ClauseList{clause({}, kPi)}));
}

TEST(Normalize, PreludeClauseCounts) {
    EXPECT_EQ(normalize(prelude_gate("X")).size(), 1U);
    EXPECT_EQ(normalize(prelude_gate("Y")).size(), 3U);
    EXPECT_EQ(normalize(prelude_gate("CCX")).size(), 1U);
    EXPECT_EQ(normalize(prelude_gate("SWAP")).size(), 3U);
    // H = if (Y^1/4) . |1> { ph(pi) }: Y^1/4 has 3 clauses, conjugated around one.
    EXPECT_EQ(normalize(prelude_gate("H")).size(), 7U);
}

int iflet_depth(const Term& t);
int iflet_depth(const Pattern& p) {
    return p.visit(detail::overloaded{
        [](const pattern::Ket&) { return 0; },
        [](const pattern::Unitary& u) { return iflet_depth(u.term); },
        [](const pattern::Compose& c) { return std::max(iflet_depth(c.outer), iflet_depth(c.inner)); },
        [](const pattern::Tensor& x) { return std::max(iflet_depth(x.left), iflet_depth(x.right)); },
    });
}
int iflet_depth(const Term& t) {
    return t.visit(detail::overloaded{
        [](const term::Phase&) { return 0; },
        [](const term::Identity&) { return 0; },
        [](const term::Seq& x) { return std::max(iflet_depth(x.first), iflet_depth(x.second)); },
        [](const term::Tensor& x) { return std::max(iflet_depth(x.left), iflet_depth(x.right)); },
        [](const term::IfLet& x) { return 1 + std::max(iflet_depth(x.pattern), iflet_depth(x.body)); },
    });
}
int phase_count(const Term& t);
int phase_count(const Pattern& p) {
    return p.visit(detail::overloaded{
        [](const pattern::Ket&) { return 0; },
        [](const pattern::Unitary& u) { return phase_count(u.term); },
        [](const pattern::Compose& c) { return phase_count(c.outer) + phase_count(c.inner); },
        [](const pattern::Tensor& x) { return phase_count(x.left) + phase_count(x.right); },
    });
}
int phase_count(const Term& t) {
    return t.visit(detail::overloaded{
        [](const term::Phase&) { return 1; },
        [](const term::Identity&) { return 0; },
        [](const term::Seq& x) { return phase_count(x.first) + phase_count(x.second); },
        [](const term::Tensor& x) { return phase_count(x.left) + phase_count(x.right); },
        [](const term::IfLet& x) { return phase_count(x.pattern) + phase_count(x.body); },
    });
}

TEST(Normalize, ClauseCountBound) {
    testing::Fuzzer f(43);
    for (int i = 0; i < 200; ++i) {
        Term t = f.term(f.below(5), 5);
        double bound = std::pow(3.0, iflet_depth(t)) * phase_count(t);
        EXPECT_LE(static_cast<double>(normalize(t).size()), bound);
    }
}

TEST(Normalize, SoundAgainstSemantics) {
    testing::Fuzzer f(44);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = f.below(5);
        Term t = f.term(n, 5);
        EXPECT_LT(max_abs_diff(matrix_of_clauses(normalize(t), n), sem_term(t)), 1e-9);
    }
}

TEST(Fuse, SpecExamples) {
    EXPECT_EQ(fuse_clauses({clause({S::One}, kPi / 4), clause({S::One}, kPi / 4)}), (ClauseList{clause({S::One}, kPi / 2)}));
    EXPECT_TRUE(fuse_clauses({clause({S::One}, kPi), clause({S::One}, -kPi)}).empty());
    ClauseList distinct{clause({S::One}, kPi), clause({S::Zero}, kPi)};
    EXPECT_EQ(fuse_clauses(distinct), distinct);
    EXPECT_TRUE(fuse_clauses({clause({S::Plus}, 2 * kPi)}).empty());
}

TEST(Fuse, PreservesSemantics) {
    testing::Fuzzer f(45);
    for (int i = 0; i < 150; ++i) {
        std::size_t n = f.below(4);
        Term t = f.term(n, 5);
        ClauseList cs = normalize(t);
        ClauseList fused = fuse_clauses(cs);
        EXPECT_LE(fused.size(), cs.size());
        EXPECT_LT(max_abs_diff(matrix_of_clauses(fused, n), matrix_of_clauses(cs, n)), 1e-10);
    }
    // SWAP;SWAP = I: merging cascades until every clause cancels.
    ClauseList sw = normalize(Term::seq(prelude_gate("SWAP"), prelude_gate("SWAP")));
    EXPECT_EQ(sw.size(), 6U);
    EXPECT_TRUE(fuse_clauses(sw).empty());
}

TEST(NormalTerm, ComposeClauses) {
    EXPECT_TRUE(structural_equal(compose_clauses({}, 3), id(3)));
    Term t = compose_clauses({clause({S::One, S::Id}, 0.5)}, 2);
    EXPECT_TRUE(structural_equal(
        t, Term::if_let(Pattern::tensor(ket1(), Pattern::unitary(id(1))), Term::tensor(ph(0.5), id(1)))));
    EXPECT_TRUE(structural_equal(clause_term(clause({}, 1.0)),
                                 Term::if_let(Pattern::unitary(id(0)), Term::tensor(ph(1.0), id(0)))));
}

}  // namespace
}  // namespace qphase
