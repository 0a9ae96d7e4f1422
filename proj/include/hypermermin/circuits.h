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

#ifndef HYPERMERMIN_CIRCUITS_H
#define HYPERMERMIN_CIRCUITS_H

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "hypermermin/hyperstate.h"
#include "hypermermin/matrix2.h"
#include "hypermermin/mermin.h"

namespace hypermermin {

enum class GateKind { H, CZ, Toffoli, U3, Measure };

std::string_view to_string(GateKind kind);

/// One gate. Qubits are circuit-wide indices: main qubits first, then ancillas.
struct Gate {
    GateKind kind = GateKind::H;
    std::vector<int> qubits;
    /// (θ, φ, λ) for U3, zero otherwise.
    std::array<double, 3> params{};
    /// Classical bit written by a Measure, −1 otherwise.
    int cbit = -1;

    static Gate h(int q);
    static Gate cz(int a, int b);
    static Gate toffoli(int control1, int control2, int target);
    static Gate u3(int q, double theta, double phi, double lambda);
    static Gate measure(int q, int cbit);

    bool operator==(const Gate&) const = default;
};

class Circuit {
   public:
    Circuit() = default;
    Circuit(int num_main_qubits, int num_ancillas = 0);

    int num_main_qubits() const { return num_main_; }
    int num_ancillas() const { return num_ancillas_; }
    int total_qubits() const { return num_main_ + num_ancillas_; }
    int num_cbits() const { return num_cbits_; }
    const std::vector<Gate>& gates() const { return gates_; }

    /// Throws std::invalid_argument on out-of-range or repeated operands, a
    /// classical bit already written, or a non-measurement after a measurement.
    void add(Gate gate);

    /// Number of gates of one kind.
    int count(GateKind kind) const;
    bool has_measurements() const { return count(GateKind::Measure) > 0; }

    bool operator==(const Circuit&) const = default;

   private:
    int num_main_ = 0;
    int num_ancillas_ = 0;
    int num_cbits_ = 0;
    std::vector<Gate> gates_;
};

/// H on every main qubit, then per edge (vertex j is qubit j−1):
/// size 1 → U3(0, 0, π) = Z; size 2 → CZ; size 3 → H–Toffoli–H on the last
/// vertex; size k ≥ 4 → Toffoli ladder computing the AND of the first k−1
/// vertices into k−2 ancillas, CZ from the last ancilla to the last vertex,
/// and the reversed ladder. Ancillas are shared between edges.
Circuit hypergraph_circuit(const Hypergraph& graph);

struct U3Angles {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
};

/// [[cos(θ/2), −e^{iλ} sin(θ/2)], [e^{iφ} sin(θ/2), e^{i(φ+λ)} cos(θ/2)]].
Matrix2 u3_matrix(const U3Angles& angles);

/// U3(θ, π, −φ − π) for the direction (sinθ cosφ, sinθ sinφ, cosθ): it maps
/// the observable v·σ to Z, so measuring Z after it measures v·σ.
U3Angles basis_change_u3(const BlochVector& direction);

/// Copy of `base` with one U3 basis change and one measurement (qubit q into
/// classical bit q) per main qubit. Ancillas are not measured.
Circuit measurement_circuit(const Circuit& base, std::span<const BlochVector> directions);

}  // namespace hypermermin

#endif  // HYPERMERMIN_CIRCUITS_H
