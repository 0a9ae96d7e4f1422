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

#include "hypermermin/circuits.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypermermin/catalog.h"
#include "oracles.h"

namespace hypermermin {
namespace {

using oracle::Mat2;

double max_diff(const Mat2& a, const Mat2& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

Mat2 to_mat(const Matrix2& m) { return {m[0], m[1], m[2], m[3]}; }

TEST(Gate, Factories) {
    EXPECT_EQ(Gate::h(2).qubits, std::vector<int>{2});
    EXPECT_EQ(Gate::toffoli(0, 1, 4).kind, GateKind::Toffoli);
    EXPECT_EQ(Gate::u3(1, 0.1, 0.2, 0.3).params, (std::array<double, 3>{0.1, 0.2, 0.3}));
    EXPECT_EQ(Gate::measure(1, 0).cbit, 0);
    EXPECT_EQ(to_string(GateKind::Toffoli), "ccx");
    EXPECT_EQ(to_string(GateKind::CZ), "cz");
}

TEST(Circuit, Validation) {
    Circuit c(2, 1);
    EXPECT_EQ(c.total_qubits(), 3);
    c.add(Gate::toffoli(0, 1, 2));
    EXPECT_THROW(c.add(Gate::h(3)), std::invalid_argument);
    EXPECT_THROW(c.add(Gate::cz(1, 1)), std::invalid_argument);
    Gate bad = Gate::cz(0, 1);
    bad.qubits.push_back(2);
    EXPECT_THROW(c.add(bad), std::invalid_argument);
    c.add(Gate::measure(0, 0));
    EXPECT_THROW(c.add(Gate::measure(1, 0)), std::invalid_argument);
    EXPECT_THROW(c.add(Gate::h(1)), std::invalid_argument);
    c.add(Gate::measure(1, 1));
    EXPECT_EQ(c.num_cbits(), 2);
    EXPECT_TRUE(c.has_measurements());
    EXPECT_EQ(c.count(GateKind::Measure), 2);
}

TEST(HypergraphCircuit, GateCounts) {
    const auto g17 = hypergraph_circuit(catalog_find(default_catalog(), "G17").resolved_hypergraph());
    EXPECT_EQ(g17.num_ancillas(), 2);
    EXPECT_EQ(g17.count(GateKind::H), 4);
    EXPECT_EQ(g17.count(GateKind::Toffoli), 4);
    EXPECT_EQ(g17.count(GateKind::CZ), 1);

    const auto ccz = hypergraph_circuit(Hypergraph(3, {{1, 2, 3}}));
    EXPECT_EQ(ccz.num_ancillas(), 0);
    EXPECT_EQ(ccz.count(GateKind::H), 5);
    EXPECT_EQ(ccz.count(GateKind::Toffoli), 1);

    const auto mixed = hypergraph_circuit(Hypergraph(5, {{1}, {2, 3}, {1, 2, 3, 4, 5}, {2, 3, 4, 5}}));
    EXPECT_EQ(mixed.num_ancillas(), 3);
    EXPECT_EQ(mixed.count(GateKind::U3), 1);
    EXPECT_EQ(mixed.count(GateKind::CZ), 3);
    EXPECT_EQ(mixed.count(GateKind::Toffoli), 2 * 3 + 2 * 2);
}

TEST(U3, MatrixForm) {
    const auto id = u3_matrix({0.0, 0.0, 0.0});
    EXPECT_LT(max_diff(to_mat(id), oracle::kI), 1e-15);
    const auto z = u3_matrix({0.0, 0.0, std::numbers::pi});
    EXPECT_LT(max_diff(to_mat(z), oracle::kZ), 1e-15);
    const auto x = u3_matrix({std::numbers::pi, 0.0, std::numbers::pi});
    EXPECT_LT(max_diff(to_mat(x), oracle::kX), 1e-15);
}

TEST(U3Properties, BasisChangeMapsObservableToZ) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 1000; ++t) {
        const auto v = oracle::random_direction(rng);
        const Mat2 u = to_mat(u3_matrix(basis_change_u3(v)));
        const Mat2 obs = oracle::pauli_combination(v.x(), v.y(), v.z());
        const Mat2 conj = to_mat(multiply(multiply(u, obs), adjoint(u)));
        EXPECT_LT(max_diff(conj, oracle::kZ), 1e-12) << "trial " << t;
        EXPECT_LT(max_diff(to_mat(multiply(u, adjoint(u))), oracle::kI), 1e-12);
    }
    for (const auto& v : {BlochVector::from_components(0, 0, 1), BlochVector::from_components(0, 0, -1),
                          BlochVector::from_components(1, 0, 0), BlochVector::from_components(0, -1, 0)}) {
        const Mat2 u = to_mat(u3_matrix(basis_change_u3(v)));
        const Mat2 obs = oracle::pauli_combination(v.x(), v.y(), v.z());
        EXPECT_LT(max_diff(to_mat(multiply(multiply(u, obs), adjoint(u))), oracle::kZ), 1e-12);
    }
}

TEST(MeasurementCircuit, AppendsBasisChanges) {
    const auto base = hypergraph_circuit(Hypergraph(4, {{1, 2, 3, 4}}));
    std::vector<BlochVector> dirs(4, BlochVector::from_components(1, 0, 0));
    const auto m = measurement_circuit(base, dirs);
    EXPECT_EQ(m.count(GateKind::U3), 4);
    EXPECT_EQ(m.count(GateKind::Measure), 4);
    EXPECT_EQ(m.num_cbits(), 4);
    for (int q = 0; q < 4; ++q) {
        const auto& g = m.gates()[m.gates().size() - 4 + q];
        EXPECT_EQ(g.kind, GateKind::Measure);
        EXPECT_EQ(g.qubits[0], q);
        EXPECT_EQ(g.cbit, q);
    }
    EXPECT_THROW(measurement_circuit(base, std::vector<BlochVector>(3)), std::invalid_argument);
    EXPECT_THROW(measurement_circuit(m, dirs), std::invalid_argument);
}

}  // namespace
}  // namespace hypermermin
