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

#ifndef HYPERMERMIN_SIMULATOR_H
#define HYPERMERMIN_SIMULATOR_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hypermermin/circuits.h"
#include "hypermermin/hyperstate.h"
#include "hypermermin/mermin.h"

namespace hypermermin {

/// Largest circuit (main qubits plus ancillas) `simulate` accepts.
inline constexpr int kMaxSimulatedQubits = 14;

/// Statevector of `circuit` applied to |0…0⟩, ignoring measurements. Qubit q
/// owns index bit N−1−q, so main qubits are the high bits and follow the
/// vertex convention of `StateVector`.
StateVector simulate(const Circuit& circuit);

struct AncillaCheck {
    /// Tr ρ² of the reduced ancilla state.
    double purity = 1.0;
    /// Probability that every ancilla reads 0.
    double zero_population = 1.0;
};

AncillaCheck check_ancillas(const StateVector& full, int num_ancillas);

/// Amplitudes with every ancilla equal to 0. Throws std::runtime_error if the
/// ancillas are not in |0…0⟩ to within `tolerance` in population.
StateVector main_register_state(const StateVector& full, int num_ancillas, double tolerance = 1e-10);

/// True iff a and b agree up to a global phase within `tolerance` (max-norm).
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tolerance);

/// Outcome counts. Character k of a key is classical bit k.
struct ShotCounts {
    int num_bits = 0;
    std::uint64_t total = 0;
    std::map<std::string, std::uint64_t> counts;

    bool operator==(const ShotCounts&) const = default;
};

/// Exact distribution of the measured classical bits. Throws
/// std::invalid_argument if the circuit has no measurements.
std::map<std::string, double> outcome_distribution(const Circuit& circuit);

/// `shots` draws from `outcome_distribution`; deterministic for a fixed seed.
ShotCounts sample(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed);

/// Σ_outcomes (−1)^{parity} · count / total. Throws on empty counts.
double estimate_monomial(const ShotCounts& counts);

/// Expected parity under the exact outcome distribution.
double exact_parity(const Circuit& circuit);

struct MonomialEstimate {
    std::size_t index = 0;
    double coefficient = 0.0;
    double estimate = 0.0;
};

struct MerminEstimate {
    double value = 0.0;
    std::vector<MonomialEstimate> terms;
};

/// ⟨M_n⟩ (or ⟨M_n′⟩) of the hypergraph state measured through circuits: one
/// measurement circuit per nonzero coefficient, each sampled with `shots`
/// shots from its own seed stream. shots = 0 replaces sampling by the exact
/// parity of each circuit.
MerminEstimate estimate_mermin(const Hypergraph& graph, const ObservableFamily& family, std::uint64_t shots,
                               std::uint64_t seed, bool use_prime = false);

}  // namespace hypermermin

#endif  // HYPERMERMIN_SIMULATOR_H
