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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypermermin/catalog.h"
#include "oracles.h"

namespace hypermermin {
namespace {

StateVector catalog_state(std::string_view name) { return catalog_find(default_catalog(), name).state(); }

OptimizationConfig quick(std::uint64_t seed = 1) {
    OptimizationConfig c;
    c.restarts = 8;
    c.iterations = 3000;
    c.step_decay = 0.998;
    c.seed = seed;
    return c;
}

TEST(OptimizationConfig, Validation) {
    OptimizationConfig c;
    EXPECT_NO_THROW(c.validate());
    c.restarts = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.step_decay = 1.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.initial_step = -0.1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.tolerance = 0.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(OptimizeMu, IsDeterministicForASeed) {
    const auto s = catalog_state("G17");
    const auto a = optimize_mu(s, quick(5));
    const auto b = optimize_mu(s, quick(5));
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.trace, b.trace);
    EXPECT_EQ(a.family, b.family);
    EXPECT_EQ(a.seed, 5u);
    EXPECT_NE(optimize_mu(s, quick(6)).trace, a.trace);
}

TEST(OptimizeMu, ThreadCountDoesNotChangeTheResult) {
    const auto s = catalog_state("LC4");
    auto c = quick(3);
    const auto serial = optimize_mu(s, c);
    c.threads = 3;
    const auto parallel = optimize_mu(s, c);
    EXPECT_EQ(serial.value, parallel.value);
    EXPECT_EQ(serial.trace, parallel.trace);
    EXPECT_EQ(serial.family, parallel.family);
}

TEST(OptimizeMu, ReportedFamilyAchievesTheValue) {
    const auto s = catalog_state("G7");
    const auto r = optimize_mu(s, quick());
    EXPECT_NEAR(mermin_expectation(s, r.family), r.value, 1e-12);
    EXPECT_EQ(r.trace.size(), 8u);
    EXPECT_EQ(*std::max_element(r.trace.begin(), r.trace.end()), r.value);
}

TEST(OptimizeMu, ReferenceValues) {
    EXPECT_NEAR(optimize_mu(catalog_state("G7")).value, 1.5, 1e-2);
    EXPECT_NEAR(optimize_mu(catalog_state("G17")).value, 1.43329, 1e-2);
    EXPECT_NEAR(optimize_mu(build_hypergraph_state(k_uniform(5, 2))).value, 4.0, 1e-2);
}

TEST(OptimizeMu, GhzReachesTheQuantumBound) {
    std::vector<Complex> amps(16, 0.0);
    amps[0] = amps[15] = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(optimize_mu(StateVector(4, amps)).value, 2.82843, 1e-2);
}

TEST(OptimizeMuTilde, ReferenceValues) {
    EXPECT_NEAR(optimize_mu_tilde(catalog_state("LC4")).value, 2.0, 2e-2);
    EXPECT_NEAR(optimize_mu_tilde(catalog_state("S4")).value, 8.0, 2e-2);
    EXPECT_NEAR(optimize_mu_tilde(catalog_state("G7")).value, 2.28571, 2e-2);
}

TEST(OptimizeMuTilde, ObjectiveIsSumOfSquares) {
    const auto s = catalog_state("G17");
    const auto r = optimize_mu_tilde(s, quick());
    const double m = mermin_expectation(s, r.family, false);
    const double mp = mermin_expectation(s, r.family, true);
    EXPECT_NEAR(m * m + mp * mp, r.value, 1e-12);
}

TEST(OptimizeProperties, NeverExceedsTheQuantumBound) {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 5; ++n) {
        const auto s = oracle::random_state(n, rng);
        EXPECT_LE(optimize_mu(s, quick()).value, mermin_quantum_bound(n) + 1e-9);
    }
    for (const auto& e : default_catalog()) {
        EXPECT_LE(optimize_mu(e.state(), quick()).value, mermin_quantum_bound(e.num_qubits()) + 1e-9) << e.name;
    }
}

TEST(OptimizeProperties, LocalUnitariesDoNotChangeMu) {
    std::mt19937_64 rng(8);
    const auto s = catalog_state("G17");
    const double reference = optimize_mu(s).value;
    for (int t = 0; t < 3; ++t) {
        std::vector<oracle::Mat2> us;
        for (int j = 0; j < 4; ++j) us.push_back(oracle::random_unitary(rng));
        const StateVector twirled = StateVector::normalized(4, oracle::apply_local(us, s.amplitudes()));
        EXPECT_NEAR(optimize_mu(twirled).value, reference, 2e-2);
    }
}

TEST(EntanglementWitness, Thresholds) {
    EXPECT_EQ(entanglement_witness(8.0), EntanglementWitness::Genuinely4Entangled);
    EXPECT_EQ(entanglement_witness(2.07172), EntanglementWitness::AtLeast3Entangled);
    EXPECT_EQ(entanglement_witness(1.5), EntanglementWitness::Inconclusive);
    EXPECT_EQ(entanglement_witness(4.0), EntanglementWitness::AtLeast3Entangled);
    EXPECT_EQ(entanglement_witness(2.0), EntanglementWitness::Inconclusive);
    EXPECT_THROW(entanglement_witness(-1.0), std::invalid_argument);
    EXPECT_EQ(to_string(EntanglementWitness::Genuinely4Entangled), "genuinely 4-entangled");
}

TEST(QuantumBound, Values) {
    EXPECT_DOUBLE_EQ(mermin_quantum_bound(1), 1.0);
    EXPECT_DOUBLE_EQ(mermin_quantum_bound(5), 4.0);
    EXPECT_NEAR(mermin_quantum_bound(4), 2.82843, 1e-5);
}

}  // namespace
}  // namespace hypermermin
