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

#include "qphase/algorithms.hpp"
#include "qphase/ast.hpp"
#include "qphase/circuit.hpp"
#include "qphase/evaluator.hpp"
#include "qphase/hamiltonian_file.hpp"
#include "qphase/metaops.hpp"
#include "qphase/parser.hpp"
#include "qphase/prelude.hpp"
#include "qphase/semantics.hpp"
#include "qphase/typecheck.hpp"
