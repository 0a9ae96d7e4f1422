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

#ifndef HYPERMERMIN_OPTIMIZE_H
#define HYPERMERMIN_OPTIMIZE_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "hypermermin/hyperstate.h"
#include "hypermermin/mermin.h"

namespace hypermermin {

/// Budget and schedule of the multistart random-walk optimizer.
struct OptimizationConfig {
    int restarts = 20;
    int iterations = 5000;
    /// Standard deviation (radians) of the first perturbation of each restart.
    double initial_step = 0.5;
    /// Step size multiplier applied after every iteration.
    double step_decay = 0.999;
    std::uint64_t seed = 1;
    /// A restart stops early once its step size falls below this value.
    double tolerance = 1e-9;
    /// Worker threads; restarts are distributed round-robin.
    int threads = 1;

    /// Throws std::invalid_argument on a non-positive budget or a decay
    /// outside (0, 1).
    void validate() const;
};

struct MuResult {
    double value = 0.0;
    ObservableFamily family{{BlochVector()}, {BlochVector()}};
    /// Best objective reached by each restart, in restart order.
    std::vector<double> trace;
    std::uint64_t seed = 0;
};

/// max over families of ⟨ψ|M_n|ψ⟩.
MuResult optimize_mu(const StateVector& state, const OptimizationConfig& config = {});

/// max over families of ⟨ψ|M_n|ψ⟩² + ⟨ψ|M_n′|ψ⟩².
MuResult optimize_mu_tilde(const StateVector& state, const OptimizationConfig& config = {});

/// 2^{(n−1)/2}, the largest value ⟨M_n⟩ can take on any n-qubit state.
double mermin_quantum_bound(int num_qubits);

enum class EntanglementWitness { Inconclusive, AtLeast3Entangled, Genuinely4Entangled };

/// Four-qubit entanglement depth implied by μ̃: μ̃ > 4 rules out every
/// biseparable state, μ̃ > 2 rules out states with at most 2-qubit
/// entanglement. Throws std::invalid_argument on a negative input.
EntanglementWitness entanglement_witness(double mu_tilde);

std::string_view to_string(EntanglementWitness witness);

}  // namespace hypermermin

#endif  // HYPERMERMIN_OPTIMIZE_H
