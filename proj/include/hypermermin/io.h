// Copyright 2026 The hypermermin Authors
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

#ifndef HYPERMERMIN_IO_H
#define HYPERMERMIN_IO_H

#include <filesystem>

#include "json.hpp"

#include "hypermermin/circuits.h"
#include "hypermermin/hyperstate.h"
#include "hypermermin/invariants.h"
#include "hypermermin/mermin.h"
#include "hypermermin/optimize.h"
#include "hypermermin/singular.h"

namespace hypermermin {

using Json = nlohmann::json;

/// {n, edges: [[1-based vertices], ...]}
Json to_json(const Hypergraph& graph);
Hypergraph hypergraph_from_json(const Json& j);

/// {n, amps: [[re, im], ...]}
Json to_json(const StateVector& state);
StateVector state_from_json(const Json& j);

/// {n, a: [[x, y, z], ...], a_prime: [...]}. Directions are renormalised on read.
Json to_json(const ObservableFamily& family);
ObservableFamily family_from_json(const Json& j);

/// {value, family, trace, seed}
Json to_json(const MuResult& result);

/// {verdict, points: [{chart, affine, projective, residual, corank, ...}],
///  corank_counts, unresolved_near_misses, charts: [...], seed, count_confirmed}
Json to_json(const SectionReport& report);

/// {hdet: [re, im], hdet_magnitude, hdet_zero, stratum, points, evidence?, diagnostics}
Json to_json(const StratumReport& report);

/// {qubits, ancillas, gates: [{kind, qubits, params?, cbit?}, ...]}
Json to_json(const Circuit& circuit);
Circuit circuit_from_json(const Json& j);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace hypermermin

#endif  // HYPERMERMIN_IO_H
