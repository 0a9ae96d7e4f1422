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

#include "hypermermin/hyperstate.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace hypermermin {

namespace {

void check_qubit_range(int num_qubits, int max_qubits, const char* what) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw std::out_of_range(std::string(what) + ": qubit count " + std::to_string(num_qubits) +
                                " outside [1, " + std::to_string(max_qubits) + "]");
    }
}

}  // namespace

Hypergraph::Hypergraph(int num_vertices, std::vector<std::vector<int>> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    check_qubit_range(num_vertices, kMaxStateQubits, "Hypergraph");
    for (auto& edge : edges_) {
        if (edge.empty()) {
            throw std::invalid_argument("Hypergraph: empty edge");
        }
        std::sort(edge.begin(), edge.end());
        if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
            throw std::invalid_argument("Hypergraph: repeated vertex inside an edge");
        }
        if (edge.front() < 1 || edge.back() > num_vertices) {
            throw std::invalid_argument("Hypergraph: vertex out of range 1.." +
                                        std::to_string(num_vertices));
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("Hypergraph: duplicated edge");
    }
}

std::size_t Hypergraph::max_edge_size() const {
    std::size_t result = 0;
    for (const auto& edge : edges_) {
        result = std::max(result, edge.size());
    }
    return result;
}

std::string Hypergraph::edge_string() const {
    std::ostringstream out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        if (e > 0) out << ';';
        for (std::size_t k = 0; k < edges_[e].size(); ++k) {
            if (k > 0) out << ',';
            out << edges_[e][k];
        }
    }
    return out.str();
}

Hypergraph parse_edge_list(int num_vertices, std::string_view text) {
    std::vector<std::vector<int>> edges;
    std::vector<int> current;
    std::string number;
    auto flush_number = [&] {
        if (number.empty()) {
            throw std::invalid_argument("edge list: missing vertex in '" + std::string(text) + "'");
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(number, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != number.size()) {
            throw std::invalid_argument("edge list: bad vertex '" + number + "'");
        }
        current.push_back(value);
        number.clear();
    };
    bool any = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        any = true;
        if (ch == ',') {
            flush_number();
        } else if (ch == ';') {
            flush_number();
            edges.push_back(std::move(current));
            current.clear();
        } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
            number.push_back(ch);
        } else {
            throw std::invalid_argument(std::string("edge list: unexpected character '") + ch + "'");
        }
    }
    if (any) {
        flush_number();
        edges.push_back(std::move(current));
    }
    return Hypergraph(num_vertices, std::move(edges));
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_range(num_qubits, kMaxStateQubits, "StateVector");
    if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument("StateVector: expected " +
                                    std::to_string(std::size_t{1} << num_qubits) +
                                    " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
    double norm = 0.0;
    for (const auto& a : amplitudes_) norm += std::norm(a);
    if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "StateVector: squared norm " << norm << " is not 1";
        throw std::invalid_argument(msg.str());
    }
}

StateVector StateVector::normalized(int num_qubits, std::vector<Complex> amplitudes) {
    double norm = 0.0;
    for (const auto& a : amplitudes) norm += std::norm(a);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("StateVector::normalized: zero or non-finite vector");
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : amplitudes) a *= scale;
    return StateVector(num_qubits, std::move(amplitudes));
}

std::uint64_t edge_mask(int num_qubits, std::span<const int> edge) {
    std::uint64_t mask = 0;
    for (int v : edge) {
        if (v < 1 || v > num_qubits) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(num_qubits));
        }
        mask |= std::uint64_t{1} << vertex_bit(num_qubits, v);
    }
    return mask;
}

StateVector plus_state(int num_qubits) {
    check_qubit_range(num_qubits, kMaxHypergraphQubits, "plus_state");
    const std::size_t dim = std::size_t{1} << num_qubits;
    // 2^{-n/2} is exact for even n; for odd n the rounding keeps the sum of
    // squares within one ulp of 1.
    const double amp = std::pow(2.0, -0.5 * num_qubits);
    return StateVector(num_qubits, std::vector<Complex>(dim, Complex(amp, 0.0)));
}

StateVector apply_controlled_z(const StateVector& state, std::span<const int> edge) {
    if (edge.empty()) {
        throw std::invalid_argument("apply_controlled_z: empty edge");
    }
    const std::uint64_t mask = edge_mask(state.num_qubits(), edge);
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & mask) == mask) amps[i] = -amps[i];
    }
    return StateVector(state.num_qubits(), std::move(amps));
}

std::vector<int> hypergraph_signs(const Hypergraph& graph) {
    const int n = graph.num_vertices();
    check_qubit_range(n, kMaxHypergraphQubits, "hypergraph_signs");
    std::vector<std::uint64_t> masks;
    masks.reserve(graph.edges().size());
    for (const auto& edge : graph.edges()) masks.push_back(edge_mask(n, edge));
    std::vector<int> signs(std::size_t{1} << n, 1);
    for (std::size_t i = 0; i < signs.size(); ++i) {
        for (auto mask : masks) {
            if ((i & mask) == mask) signs[i] = -signs[i];
        }
    }
    return signs;
}

StateVector build_hypergraph_state(const Hypergraph& graph) {
    const auto signs = hypergraph_signs(graph);
    const double amp = std::pow(2.0, -0.5 * graph.num_vertices());
    std::vector<Complex> amps(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) amps[i] = Complex(signs[i] * amp, 0.0);
    return StateVector(graph.num_vertices(), std::move(amps));
}

Hypergraph infer_hypergraph(const StateVector& state) {
    const int n = state.num_qubits();
    if (n > kMaxHypergraphQubits) {
        throw std::out_of_range("infer_hypergraph: more than " +
                                std::to_string(kMaxHypergraphQubits) + " qubits");
    }
    const double expected = std::pow(2.0, -0.5 * n);
    const Complex phase = std::abs(state[0]) > 0.0 ? std::conj(state[0]) / std::abs(state[0])
                                                   : Complex(1.0, 0.0);
    std::vector<std::uint8_t> anf(state.dimension());
    for (std::size_t i = 0; i < anf.size(); ++i) {
        const Complex a = state[i] * phase;
        if (std::abs(a - expected) <= kHypergraphAmplitudeTolerance) {
            anf[i] = 0;
        } else if (std::abs(a + expected) <= kHypergraphAmplitudeTolerance) {
            anf[i] = 1;
        } else {
            std::ostringstream msg;
            msg << "amplitude " << i << " = " << state[i] << " is not ±" << expected
                << " (up to global phase)";
            throw NotHypergraphState(msg.str());
        }
    }
    // Möbius transform over the subset lattice: anf[S] = XOR_{T ⊆ S} f(T).
    for (std::size_t bit = 1; bit < anf.size(); bit <<= 1) {
        for (std::size_t i = 0; i < anf.size(); ++i) {
            if (i & bit) anf[i] ^= anf[i ^ bit];
        }
    }
    std::vector<std::vector<int>> edges;
    for (std::size_t mask = 1; mask < anf.size(); ++mask) {
        if (!anf[mask]) continue;
        std::vector<int> edge;
        for (int v = 1; v <= n; ++v) {
            if (mask >> vertex_bit(n, v) & 1) edge.push_back(v);
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, std::move(edges));
}

Hypergraph k_uniform(int num_vertices, int edge_size) {
    check_qubit_range(num_vertices, kMaxHypergraphQubits, "k_uniform");
    if (edge_size < 1 || edge_size > num_vertices) {
        throw std::out_of_range("k_uniform: edge size " + std::to_string(edge_size) +
                                " outside [1, " + std::to_string(num_vertices) + "]");
    }
    std::vector<std::vector<int>> edges;
    const unsigned limit = 1u << num_vertices;
    for (unsigned mask = 0; mask < limit; ++mask) {
        if (std::popcount(mask) != edge_size) continue;
        std::vector<int> edge;
        for (int v = 0; v < num_vertices; ++v) {
            if (mask >> v & 1) edge.push_back(v + 1);
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(num_vertices, std::move(edges));
}

bool is_connected(const Hypergraph& graph) {
    const int n = graph.num_vertices();
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& edge : graph.edges()) {
        for (std::size_t k = 1; k < edge.size(); ++k) {
            parent[find(edge[k])] = find(edge[0]);
        }
    }
    const int root = find(1);
    for (int v = 2; v <= n; ++v) {
        if (find(v) != root) return false;
    }
    return true;
}

}  // namespace hypermermin
