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

// Hamiltonian simulation input, as JSON:
//
//   {
//     "n": 2,                 // qubit count, integer >= 0
//     "t": 1.0,               // evolution time
//     "steps": 16,            // Trotter steps, integer >= 1
//     "terms": [              // spectral components
//       {"lambda": 1.0, "pattern": "|0> x |0>"},
//       {"lambda": -0.5, "pattern": "S . |+> x |1>"}
//     ]
//   }
//
// Patterns use the source grammar and may name prelude gates.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qphase/algorithms.hpp"
#include "qphase/prelude.hpp"
#include "qphase/typecheck.hpp"

namespace qphase {

struct HamiltonianFile {
    HamiltonianSpec spec;
    double t = 0.0;
    std::size_t steps = 1;
};

/// Error carrying the JSON field path at fault, e.g. "terms[2].pattern".
class HamiltonianFileError : public std::runtime_error {
   public:
    HamiltonianFileError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

   private:
    std::string path_;
};

namespace detail {

inline const nlohmann::json& require_field(const nlohmann::json& obj, const std::string& key,
                                           const std::string& path) {
    if (!obj.is_object()) {
        throw HamiltonianFileError(path.empty() ? "$" : path, "expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw HamiltonianFileError(path.empty() ? key : path + "." + key, "missing field");
    }
    return *it;
}

inline double require_real(const nlohmann::json& v, const std::string& path) {
    if (!v.is_number()) {
        throw HamiltonianFileError(path, "expected a number");
    }
    return v.get<double>();
}

inline std::size_t require_count(const nlohmann::json& v, const std::string& path, std::size_t min) {
    if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(min)) {
        throw HamiltonianFileError(path, "expected an integer >= " + std::to_string(min));
    }
    return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace detail

inline HamiltonianFile parse_hamiltonian_file(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw HamiltonianFileError("$", std::string("malformed JSON: ") + e.what());
    }
    HamiltonianFile out;
    out.spec.n = detail::require_count(detail::require_field(doc, "n", ""), "n", 0);
    out.t = detail::require_real(detail::require_field(doc, "t", ""), "t");
    out.steps = detail::require_count(detail::require_field(doc, "steps", ""), "steps", 1);
    const auto& terms = detail::require_field(doc, "terms", "");
    if (!terms.is_array()) {
        throw HamiltonianFileError("terms", "expected a list");
    }
    for (std::size_t i = 0; i < terms.size(); ++i) {
        std::string base = "terms[" + std::to_string(i) + "]";
        double lambda = detail::require_real(detail::require_field(terms[i], "lambda", base), base + ".lambda");
        const auto& pat = detail::require_field(terms[i], "pattern", base);
        if (!pat.is_string()) {
            throw HamiltonianFileError(base + ".pattern", "expected a pattern string");
        }
        Pattern p = [&] {
            try {
                return compile_pattern(pat.get<std::string>());
            } catch (const std::exception& e) {
                throw HamiltonianFileError(base + ".pattern", e.what());
            }
        }();
        PatternType ty;
        try {
            ty = type_of_pattern(p);
        } catch (const TypeCheckError& e) {
            throw HamiltonianFileError(base + ".pattern", e.what());
        }
        if (ty.output != out.spec.n) {
            throw HamiltonianFileError(base + ".pattern", "pattern acts on " + std::to_string(ty.output) +
                                                              " qubits, expected " + std::to_string(out.spec.n));
        }
        out.spec.components.push_back({lambda, p});
    }
    return out;
}

}  // namespace qphase
