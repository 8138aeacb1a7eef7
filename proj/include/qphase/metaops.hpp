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

// Structural inversion and exponentiation of terms.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qphase/ast.hpp"
#include "qphase/typecheck.hpp"

namespace qphase {

/// Raised when exponentiating a term with a ';' on its unitary spine.
class CompositionPresentError : public std::runtime_error {
   public:
    explicit CompositionPresentError(std::vector<std::size_t> path)
        : std::runtime_error("cannot exponentiate a term containing ';' (at " + render(path) + ")"),
          path_(std::move(path)) {}

    const std::vector<std::size_t>& path() const { return path_; }

   private:
    static std::string render(const std::vector<std::size_t>& path) {
        if (path.empty()) {
            return "root";
        }
        std::string s;
        for (std::size_t i = 0; i < path.size(); ++i) {
            s += (i ? "." : "") + std::to_string(path[i]);
        }
        return s;
    }

    std::vector<std::size_t> path_;
};

namespace detail {

inline Term invert_unchecked(const Term& t) {
    return t.visit(detail::overloaded{
        [](const term::Phase& x) { return Term::phase(-x.theta); },
        [&](const term::Identity&) { return t; },
        [](const term::Seq& x) { return Term::seq(invert_unchecked(x.second), invert_unchecked(x.first)); },
        [](const term::Tensor& x) { return Term::tensor(invert_unchecked(x.left), invert_unchecked(x.right)); },
        [](const term::IfLet& x) { return Term::if_let(x.pattern, invert_unchecked(x.body)); },
    });
}

inline Term exponentiate_unchecked(const Term& t, double alpha, std::vector<std::size_t>& path) {
    return t.visit(detail::overloaded{
        [&](const term::Phase& x) { return Term::phase(Angle(alpha * x.theta.radians())); },
        [&](const term::Identity&) { return t; },
        [&](const term::Seq&) -> Term { throw CompositionPresentError(path); },
        [&](const term::Tensor& x) {
            path.push_back(0);
            Term l = exponentiate_unchecked(x.left, alpha, path);
            path.back() = 1;
            Term r = exponentiate_unchecked(x.right, alpha, path);
            path.pop_back();
            return Term::tensor(l, r);
        },
        [&](const term::IfLet& x) {
            // Patterns are untouched, so a ';' inside an embedded unitary is fine.
            path.push_back(1);
            Term body = exponentiate_unchecked(x.body, alpha, path);
            path.pop_back();
            return Term::if_let(x.pattern, body);
        },
    });
}

}  // namespace detail

/// The structural dagger: phases negate, sequences reverse.
inline Term invert(const Term& t) {
    type_of_term(t);
    return detail::invert_unchecked(t);
}

/// Raises every phase on the unitary spine to `alpha`. The term must not
/// contain ';' outside of patterns.
inline Term exponentiate(const Term& t, double alpha) {
    if (!std::isfinite(alpha)) {
        throw std::domain_error("exponent must be finite");
    }
    type_of_term(t);
    std::vector<std::size_t> path;
    return detail::exponentiate_unchecked(t, alpha, path);
}

/// True when no Seq node appears on the unitary spine.
inline bool is_composition_free(const Term& t) {
    return t.visit(detail::overloaded{
        [](const term::Phase&) { return true; },
        [](const term::Identity&) { return true; },
        [](const term::Seq&) { return false; },
        [](const term::Tensor& x) { return is_composition_free(x.left) && is_composition_free(x.right); },
        [](const term::IfLet& x) { return is_composition_free(x.body); },
    });
}

}  // namespace qphase
