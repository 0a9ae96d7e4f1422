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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hypermermin {

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::CZ:
            return "cz";
        case GateKind::Toffoli:
            return "ccx";
        case GateKind::U3:
            return "u3";
        case GateKind::Measure:
            break;
    }
    return "measure";
}

Gate Gate::h(int q) { return {GateKind::H, {q}, {}, -1}; }
Gate Gate::cz(int a, int b) { return {GateKind::CZ, {a, b}, {}, -1}; }
Gate Gate::toffoli(int c1, int c2, int t) { return {GateKind::Toffoli, {c1, c2, t}, {}, -1}; }
Gate Gate::u3(int q, double theta, double phi, double lambda) {
    return {GateKind::U3, {q}, {theta, phi, lambda}, -1};
}
Gate Gate::measure(int q, int cbit) { return {GateKind::Measure, {q}, {}, cbit}; }

Circuit::Circuit(int num_main_qubits, int num_ancillas) : num_main_(num_main_qubits), num_ancillas_(num_ancillas) {
    if (num_main_qubits < 1 || num_ancillas < 0) {
        throw std::invalid_argument("Circuit: need at least one main qubit and a non-negative ancilla count");
    }
}

void Circuit::add(Gate gate) {
    std::size_t arity = 1;
    if (gate.kind == GateKind::CZ) arity = 2;
    if (gate.kind == GateKind::Toffoli) arity = 3;
    if (gate.qubits.size() != arity) {
        throw std::invalid_argument("Circuit: " + std::string(to_string(gate.kind)) + " takes " +
                                    std::to_string(arity) + " qubit(s)");
    }
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        const int q = gate.qubits[i];
        if (q < 0 || q >= total_qubits()) throw std::invalid_argument("Circuit: qubit " + std::to_string(q) + " out of range");
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.qubits[j] == q) throw std::invalid_argument("Circuit: repeated operand");
        }
    }
    if (gate.kind == GateKind::Measure) {
        if (gate.cbit < 0) throw std::invalid_argument("Circuit: negative classical bit");
        for (const auto& g : gates_) {
            if (g.kind == GateKind::Measure && g.cbit == gate.cbit) {
                throw std::invalid_argument("Circuit: classical bit written twice");
            }
        }
        num_cbits_ = std::max(num_cbits_, gate.cbit + 1);
    } else {
        if (has_measurements()) throw std::invalid_argument("Circuit: gate after measurement");
        if (gate.kind != GateKind::U3) gate.params = {};
        gate.cbit = -1;
    }
    gates_.push_back(std::move(gate));
}

int Circuit::count(GateKind kind) const {
    return static_cast<int>(std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

Circuit hypergraph_circuit(const Hypergraph& graph) {
    const int n = graph.num_vertices();
    const int largest = static_cast<int>(graph.max_edge_size());
    Circuit circuit(n, largest >= 4 ? largest - 2 : 0);
    for (int q = 0; q < n; ++q) circuit.add(Gate::h(q));
    for (const auto& edge : graph.edges()) {
        const int k = static_cast<int>(edge.size());
        const auto q = [&](int i) { return edge[i] - 1; };
        const auto anc = [&](int i) { return n + i; };
        if (k == 1) {
            circuit.add(Gate::u3(q(0), 0.0, 0.0, std::numbers::pi));
        } else if (k == 2) {
            circuit.add(Gate::cz(q(0), q(1)));
        } else if (k == 3) {
            circuit.add(Gate::h(q(2)));
            circuit.add(Gate::toffoli(q(0), q(1), q(2)));
            circuit.add(Gate::h(q(2)));
        } else {
            std::vector<Gate> ladder;
            ladder.push_back(Gate::toffoli(q(0), q(1), anc(0)));
            for (int i = 1; i <= k - 3; ++i) ladder.push_back(Gate::toffoli(anc(i - 1), q(i + 1), anc(i)));
            for (const auto& g : ladder) circuit.add(g);
            circuit.add(Gate::cz(anc(k - 3), q(k - 1)));
            for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) circuit.add(*it);
        }
    }
    return circuit;
}

Matrix2 u3_matrix(const U3Angles& a) {
    const double c = std::cos(0.5 * a.theta);
    const double s = std::sin(0.5 * a.theta);
    return {Complex(c, 0.0), -std::polar(s, a.lambda), std::polar(s, a.phi), std::polar(c, a.phi + a.lambda)};
}

U3Angles basis_change_u3(const BlochVector& direction) {
    return {direction.theta(), std::numbers::pi, -direction.phi() - std::numbers::pi};
}

Circuit measurement_circuit(const Circuit& base, std::span<const BlochVector> directions) {
    if (static_cast<int>(directions.size()) != base.num_main_qubits()) {
        throw std::invalid_argument("measurement_circuit: " + std::to_string(directions.size()) +
                                    " directions for " + std::to_string(base.num_main_qubits()) + " main qubits");
    }
    if (base.has_measurements()) throw std::invalid_argument("measurement_circuit: base already measures");
    Circuit out = base;
    for (int q = 0; q < base.num_main_qubits(); ++q) {
        const U3Angles a = basis_change_u3(directions[q]);
        out.add(Gate::u3(q, a.theta, a.phi, a.lambda));
    }
    for (int q = 0; q < base.num_main_qubits(); ++q) out.add(Gate::measure(q, q));
    return out;
}

}  // namespace hypermermin
