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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qphase/ast.hpp"

namespace qphase {

struct UnitaryType {
    std::size_t qubits = 0;
    friend bool operator==(const UnitaryType&, const UnitaryType&) = default;
};

struct PatternType {
    std::size_t input = 0;
    std::size_t output = 0;
    friend bool operator==(const PatternType&, const PatternType&) = default;
};

enum class TypeErrorKind {
    SeqArityMismatch,
    IfLetBodyMismatch,
    PatternComposeMismatch,
    NonnegativeViolation,
};

inline const char* to_string(TypeErrorKind k) {
    switch (k) {
        case TypeErrorKind::SeqArityMismatch:
            return "seq-arity-mismatch";
        case TypeErrorKind::IfLetBodyMismatch:
            return "iflet-body-mismatch";
        case TypeErrorKind::PatternComposeMismatch:
            return "pattern-compose-mismatch";
        case TypeErrorKind::NonnegativeViolation:
            return "nonnegative-violation";
    }
    return "unknown";
}

/// Location is the list of child indices from the root. For a Seq / Tensor
/// / Compose node children are 0 and 1; for IfLet the pattern is 0 and the
/// body 1; a Unitary pattern's term is child 0.
struct TypeError {
    TypeErrorKind kind;
    std::vector<std::size_t> path;
    std::size_t expected = 0;
    std::size_t found = 0;

    std::string message() const {
        std::string where = "root";
        if (!path.empty()) {
            where.clear();
            for (std::size_t i = 0; i < path.size(); ++i) {
                where += (i ? "." : "") + std::to_string(path[i]);
            }
        }
        return std::string("type error (") + to_string(kind) + ") at " + where + ": expected " +
               std::to_string(expected) + " qubits, found " + std::to_string(found);
    }
};

class TypeCheckError : public std::runtime_error {
   public:
    explicit TypeCheckError(TypeError error) : std::runtime_error(error.message()), error_(std::move(error)) {}
    const TypeError& error() const { return error_; }

   private:
    TypeError error_;
};

namespace detail {

PatternType check_pattern(const Pattern& p, std::vector<std::size_t>& path);

inline UnitaryType check_term(const Term& t, std::vector<std::size_t>& path) {
    return t.visit(detail::overloaded{
        [](const term::Phase&) { return UnitaryType{0}; },
        [](const term::Identity& x) { return UnitaryType{x.qubits}; },
        [&](const term::Seq& x) {
            path.push_back(0);
            auto a = check_term(x.first, path);
            path.back() = 1;
            auto b = check_term(x.second, path);
            path.pop_back();
            if (a.qubits != b.qubits) {
                throw TypeCheckError({TypeErrorKind::SeqArityMismatch, path, a.qubits, b.qubits});
            }
            return a;
        },
        [&](const term::Tensor& x) {
            path.push_back(0);
            auto a = check_term(x.left, path);
            path.back() = 1;
            auto b = check_term(x.right, path);
            path.pop_back();
            return UnitaryType{a.qubits + b.qubits};
        },
        [&](const term::IfLet& x) {
            path.push_back(0);
            auto p = check_pattern(x.pattern, path);
            path.back() = 1;
            auto s = check_term(x.body, path);
            path.pop_back();
            if (p.input != s.qubits) {
                throw TypeCheckError({TypeErrorKind::IfLetBodyMismatch, path, p.input, s.qubits});
            }
            return UnitaryType{p.output};
        },
    });
}

inline PatternType check_pattern(const Pattern& p, std::vector<std::size_t>& path) {
    return p.visit(detail::overloaded{
        [](const pattern::Ket&) { return PatternType{0, 1}; },
        [&](const pattern::Unitary& u) {
            path.push_back(0);
            auto n = check_term(u.term, path).qubits;
            path.pop_back();
            return PatternType{n, n};
        },
        [&](const pattern::Compose& c) {
            path.push_back(0);
            auto outer = check_pattern(c.outer, path);
            path.back() = 1;
            auto inner = check_pattern(c.inner, path);
            path.pop_back();
            if (inner.output != outer.input) {
                throw TypeCheckError({TypeErrorKind::PatternComposeMismatch, path, outer.input, inner.output});
            }
            return PatternType{inner.input, outer.output};
        },
        [&](const pattern::Tensor& t) {
            path.push_back(0);
            auto a = check_pattern(t.left, path);
            path.back() = 1;
            auto b = check_pattern(t.right, path);
            path.pop_back();
            return PatternType{a.input + b.input, a.output + b.output};
        },
    });
}

}  // namespace detail

/// Throws TypeCheckError on ill-typed input.
inline UnitaryType type_of_term(const Term& t) {
    std::vector<std::size_t> path;
    return detail::check_term(t, path);
}

inline PatternType type_of_pattern(const Pattern& p) {
    std::vector<std::size_t> path;
    return detail::check_pattern(p, path);
}

inline bool is_well_typed(const Term& t) {
    try {
        type_of_term(t);
        return true;
    } catch (const TypeCheckError&) {
        return false;
    }
}

}  // namespace qphase
