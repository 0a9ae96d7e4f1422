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

#ifndef HYPERMERMIN_HYPERSTATE_H
#define HYPERMERMIN_HYPERSTATE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hypermermin {

using Complex = std::complex<double>;

/// Largest register accepted by `plus_state` and the hypergraph builders.
inline constexpr int kMaxHypergraphQubits = 12;

/// Largest register a `StateVector` may describe (the circuit simulator needs
/// room for ancillas on top of the main register).
inline constexpr int kMaxStateQubits = 20;

/// Tolerance on Σ|amp|² − 1 for a `StateVector`.
inline constexpr double kNormTolerance = 1e-12;

/// Tolerance used when recognising ±1/√(2ⁿ) amplitudes.
inline constexpr double kHypergraphAmplitudeTolerance = 1e-9;

/// Raised when a state vector is not (up to global phase) a hypergraph state.
class NotHypergraphState : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A hypergraph on vertices 1..n.
///
/// Edges are non-empty vertex subsets of any size from 1 to n. The edge list is
/// kept canonical (each edge sorted ascending, edges sorted lexicographically)
/// so that two hypergraphs with the same edge set compare equal.
class Hypergraph {
   public:
    Hypergraph() = default;

    /// Throws std::invalid_argument on an out-of-range vertex, an empty edge,
    /// a repeated vertex inside an edge, or a duplicated edge.
    Hypergraph(int num_vertices, std::vector<std::vector<int>> edges);

    int num_vertices() const { return num_vertices_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    std::size_t max_edge_size() const;

    bool operator==(const Hypergraph&) const = default;

    /// Edges as "1,2,3;2,4" (empty string for no edges).
    std::string edge_string() const;

   private:
    int num_vertices_ = 0;
    std::vector<std::vector<int>> edges_;
};

/// Parses "1,2,3;3,4" style edge lists. Whitespace is ignored.
Hypergraph parse_edge_list(int num_vertices, std::string_view text);

/// Dense n-qubit amplitude vector of unit norm.
///
/// Basis index i = a_{n-1}2^{n-1} + ... + a_0. Vertex/qubit j (1-based) owns
/// bit a_{n-j}, so vertex 1 is the most significant bit.
class StateVector {
   public:
    StateVector() = default;

    /// Throws std::invalid_argument if the size is not 2ⁿ or the norm is off
    /// by more than kNormTolerance.
    StateVector(int num_qubits, std::vector<Complex> amplitudes);

    /// Rescales `amplitudes` to unit norm. Throws on a zero vector.
    static StateVector normalized(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

    bool operator==(const StateVector&) const = default;

   private:
    int num_qubits_ = 0;
    std::vector<Complex> amplitudes_;
};

/// Bit position (0 = least significant) of 1-based vertex `vertex` in an
/// n-qubit basis index.
constexpr int vertex_bit(int num_qubits, int vertex) { return num_qubits - vertex; }

/// Index mask selecting every vertex of `edge`.
std::uint64_t edge_mask(int num_qubits, std::span<const int> edge);

StateVector plus_state(int num_qubits);

/// Negates every amplitude whose index has all bits of `edge` set.
StateVector apply_controlled_z(const StateVector& state, std::span<const int> edge);

/// ∏_e C_eZ |+⟩^{⊗n}. All amplitudes are exactly ±2^{-n/2}.
StateVector build_hypergraph_state(const Hypergraph& graph);

/// Inverse of `build_hypergraph_state`, via the algebraic normal form of the
/// sign function. A global phase is removed first (the phase of amplitude 0).
/// Throws NotHypergraphState if any amplitude is off ±2^{-n/2} by more than
/// kHypergraphAmplitudeTolerance.
Hypergraph infer_hypergraph(const StateVector& state);

/// Sign vector (+1/−1 per basis index) of a hypergraph state.
std::vector<int> hypergraph_signs(const Hypergraph& graph);

/// All C(n, k) edges of size k.
Hypergraph k_uniform(int num_vertices, int edge_size);

/// True iff the edges join every vertex into one component.
bool is_connected(const Hypergraph& graph);

}  // namespace hypermermin

#endif  // HYPERMERMIN_HYPERSTATE_H
