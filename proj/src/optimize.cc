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

#include "hypermermin/optimize.h"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "hypermermin/rng.h"

namespace hypermermin {
namespace {

enum class Objective { Mu, MuTilde };

struct RestartResult {
    double value = -1.0;
    std::vector<double> angles;
};

double objective_value(const MerminEvaluator& evaluator, std::span<const double> angles, Objective objective,
                       std::vector<Matrix2>& observables) {
    for (std::size_t k = 0; k < observables.size(); ++k) {
        observables[k] = observable_matrix(BlochVector::from_angles(angles[2 * k], angles[2 * k + 1]));
    }
    const bool tilde = objective == Objective::MuTilde;
    const MerminValues v = evaluator.evaluate(observables, tilde);
    return tilde ? v.m * v.m + v.m_prime * v.m_prime : v.m;
}

RestartResult run_restart(const MerminEvaluator& evaluator, const OptimizationConfig& config, Objective objective,
                          int restart) {
    const int n = evaluator.state().num_qubits();
    auto rng = make_stream(config.seed, static_cast<std::uint64_t>(restart));
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    // Angle layout: (θ, φ) of a_1, a_1′, a_2, a_2′, ...
    std::vector<double> current(4 * n);
    for (int k = 0; k < 2 * n; ++k) {
        current[2 * k] = std::acos(1.0 - 2.0 * uniform(rng));
        current[2 * k + 1] = 2.0 * std::numbers::pi * uniform(rng);
    }
    std::vector<Matrix2> observables(2 * n);
    double best = objective_value(evaluator, current, objective, observables);
    std::vector<double> trial(current.size());
    double step = config.initial_step;
    for (int it = 0; it < config.iterations && step >= config.tolerance; ++it) {
        for (std::size_t i = 0; i < current.size(); ++i) trial[i] = current[i] + step * gauss(rng);
        const double value = objective_value(evaluator, trial, objective, observables);
        if (value > best) {
            best = value;
            current.swap(trial);
        }
        step *= config.step_decay;
    }
    return {best, std::move(current)};
}

ObservableFamily family_from_angles(int n, std::span<const double> angles) {
    std::vector<BlochVector> a, a_prime;
    for (int j = 0; j < n; ++j) {
        a.push_back(BlochVector::from_angles(angles[4 * j], angles[4 * j + 1]));
        a_prime.push_back(BlochVector::from_angles(angles[4 * j + 2], angles[4 * j + 3]));
    }
    return ObservableFamily(std::move(a), std::move(a_prime));
}

MuResult optimize(const StateVector& state, const OptimizationConfig& config, Objective objective) {
    config.validate();
    if (state.num_qubits() > kMaxMerminQubits) {
        throw std::invalid_argument("optimize: too many qubits");
    }
    const MerminEvaluator prototype(state);
    std::vector<RestartResult> results(config.restarts);
    const int threads = std::min(config.threads, config.restarts);
    if (threads <= 1) {
        for (int r = 0; r < config.restarts; ++r) results[r] = run_restart(prototype, config, objective, r);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                const MerminEvaluator evaluator = prototype;
                for (int r = t; r < config.restarts; r += threads) {
                    results[r] = run_restart(evaluator, config, objective, r);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::size_t best = 0;
    MuResult out;
    out.seed = config.seed;
    for (std::size_t r = 0; r < results.size(); ++r) {
        out.trace.push_back(results[r].value);
        if (results[r].value > results[best].value) best = r;
    }
    out.value = results[best].value;
    out.family = family_from_angles(state.num_qubits(), results[best].angles);
    return out;
}

}  // namespace

void OptimizationConfig::validate() const {
    if (restarts <= 0 || iterations <= 0 || threads <= 0) {
        throw std::invalid_argument("OptimizationConfig: restarts, iterations and threads must be positive");
    }
    if (!(initial_step > 0.0) || !(tolerance > 0.0)) {
        throw std::invalid_argument("OptimizationConfig: initial_step and tolerance must be positive");
    }
    if (!(step_decay > 0.0 && step_decay < 1.0)) {
        throw std::invalid_argument("OptimizationConfig: step_decay must lie in (0, 1)");
    }
}

MuResult optimize_mu(const StateVector& state, const OptimizationConfig& config) {
    return optimize(state, config, Objective::Mu);
}

MuResult optimize_mu_tilde(const StateVector& state, const OptimizationConfig& config) {
    return optimize(state, config, Objective::MuTilde);
}

double mermin_quantum_bound(int num_qubits) { return std::pow(2.0, 0.5 * (num_qubits - 1)); }

EntanglementWitness entanglement_witness(double mu_tilde) {
    if (!(mu_tilde >= 0.0)) throw std::invalid_argument("entanglement_witness: mu_tilde must be non-negative");
    if (mu_tilde > 4.0) return EntanglementWitness::Genuinely4Entangled;
    if (mu_tilde > 2.0) return EntanglementWitness::AtLeast3Entangled;
    return EntanglementWitness::Inconclusive;
}

std::string_view to_string(EntanglementWitness witness) {
    switch (witness) {
        case EntanglementWitness::Genuinely4Entangled:
            return "genuinely 4-entangled";
        case EntanglementWitness::AtLeast3Entangled:
            return "at least 3-entangled";
        case EntanglementWitness::Inconclusive:
            break;
    }
    return "inconclusive";
}

}  // namespace hypermermin
