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

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qphase/parser.hpp"

namespace qphase {

/// Standard gates, available to every source file.
inline constexpr std::string_view kPreludeSource = R"qph(// Standard gates.
def Z = if |1> { ph(pi) }
def S = if |1> { ph(pi/2) }
def T = if |1> { ph(pi/4) }
def X = if |-> { ph(pi) }
def V = X^0.5
def Y = if S . |-> { ph(pi) }
def H = if (Y^1/4) . |1> { ph(pi) }
def CZ = if |1> x |1> { ph(pi) }
def CX = if |1> x |-> { ph(pi) }
def XC = if |-> x |1> { ph(pi) }
def SWAP = if CX { XC }
def CCX = if |1> x |1> x |-> { ph(pi) }
)qph";

inline const SourceFile& prelude() {
    static const SourceFile lib = parse_library(std::string(kPreludeSource));
    return lib;
}

/// An elaborated prelude gate by name.
inline Term prelude_gate(const std::string& name) {
    static const std::map<std::string, Term> gates = [] {
        std::map<std::string, Term> m;
        for (auto& [n, t] : elaborate_definitions(prelude())) {
            m.insert_or_assign(n, t);
        }
        return m;
    }();
    auto it = gates.find(name);
    if (it == gates.end()) {
        throw std::out_of_range("no prelude gate named '" + name + "'");
    }
    return it->second;
}

/// Parses and elaborates a source file against the prelude.
inline Term compile_source(const std::string& text) { return elaborate(parse_file(text), prelude()); }

/// Parses and elaborates a standalone pattern against the prelude.
inline Pattern compile_pattern(const std::string& text) { return elaborate_pattern(*parse_pattern(text), prelude()); }

}  // namespace qphase
