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

#ifndef HYPERMERMIN_MERMIN_H
#define HYPERMERMIN_MERMIN_H

#include <span>
#include <vector>

#include "hypermermin/hyperstate.h"
#include "hypermermin/matrix2.h"

namespace hypermermin {

/// Largest qubit count accepted by `expand_mermin`.
inline constexpr int kMaxMerminQubits = 12;

/// Unit direction on the Bloch sphere; the observable is xX + yY + zZ.
class BlochVector {
   public:
    /// +Z.
    BlochVector() = default;

    /// Renormalises (x, y, z). Throws std::invalid_argument on a zero or
    /// non-finite vector.
    static BlochVector from_components(double x, double y, double z);

    /// Polar angle `theta` from +Z, azimuth `phi` from +X:
    /// (sinθ cosφ, sinθ sinφ, cosθ).
    static BlochVector from_angles(double theta, double phi);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    /// Polar angle in [0, π].
    double theta() const;
    /// Azimuth in (−π, π].
    double phi() const;

    bool operator==(const BlochVector&) const = default;

   private:
    BlochVector(double x, double y, double z) : x_(x), y_(y), z_(z) {}
    double x_ = 0.0;
    double y_ = 0.0;
    double z_ = 1.0;
};

/// xX + yY + zZ. Hermitian, traceless, squares to the identity.
Matrix2 observable_matrix(const BlochVector& v);

/// The 2n directions (a_j, a_j′) that instantiate a Mermin polynomial.
struct ObservableFamily {
    std::vector<BlochVector> a;
    std::vector<BlochVector> a_prime;

    /// Throws std::invalid_argument unless both lists have the same non-zero length.
    ObservableFamily(std::vector<BlochVector> unprimed, std::vector<BlochVector> primed);

    int num_qubits() const { return static_cast<int>(a.size()); }

    /// Directions of the monomial with expansion index `index`: qubit j takes
    /// a_j′ iff bit n−j of `index` is set.
    std::vector<BlochVector> monomial_directions(std::size_t index) const;

    bool operator==(const ObservableFamily&) const = default;
};

/// Monomial coefficients of M_n and M_n′.
///
/// Index i encodes c_1 … c_n with c_j primed iff bit n−j of i is 1 (qubit 1
/// is the most significant bit, as for amplitudes). All coefficients are
/// dyadic rationals, so they are exact in double precision.
struct MerminExpansion {
    int num_qubits = 0;
    std::vector<double> coeffs;
    std::vector<double> coeffs_prime;

    std::size_t nonzero_terms() const;
};

/// Unrolls M_1 = a_1, M_n = ½M_{n−1}(a_n + a_n′) + ½M′_{n−1}(a_n − a_n′).
MerminExpansion expand_mermin(int num_qubits);

/// ⟨ψ| c_1 ⊗ … ⊗ c_n |ψ⟩ by applying each 2×2 observable to a copy of the
/// amplitudes. Returns the full complex value (the imaginary part is rounding).
Complex monomial_expectation_complex(const StateVector& state, std::span<const BlochVector> directions);

/// Real part of `monomial_expectation_complex`.
double monomial_expectation(const StateVector& state, std::span<const BlochVector> directions);

/// ⟨ψ|M_n|ψ⟩ (or ⟨ψ|M_n′|ψ⟩ when `use_prime`), summed monomial by monomial.
double mermin_expectation(const StateVector& state, const ObservableFamily& family, bool use_prime = false);

struct MerminValues {
    double m = 0.0;
    double m_prime = 0.0;
};

/// Evaluates ⟨M_n⟩ and ⟨M_n′⟩ for one state over many observable families.
///
/// Monomials are visited as a binary prefix tree: the operator for qubit j is
/// applied once per prefix c_1 … c_{j−1} rather than once per monomial, which
/// makes an evaluation O(4ⁿ) instead of O(n·4ⁿ). Subtrees whose coefficients
/// all vanish are skipped.
class MerminEvaluator {
   public:
    explicit MerminEvaluator(StateVector state);

    const StateVector& state() const { return state_; }
    const MerminExpansion& expansion() const { return expansion_; }

    /// Both expectations. When `need_prime` is false, `m_prime` is left at 0
    /// and subtrees that only feed M_n′ are skipped.
    MerminValues evaluate(const ObservableFamily& family, bool need_prime = true) const;

    /// Same, with the family given as per-qubit observable matrices
    /// (index 2j for a_{j+1}, 2j+1 for a_{j+1}′).
    MerminValues evaluate(std::span<const Matrix2> observables, bool need_prime) const;

   private:
    void visit(std::span<const Matrix2> observables, int depth, std::size_t prefix, bool need_prime,
               MerminValues& out) const;

    StateVector state_;
    MerminExpansion expansion_;
    // live_[d][p]: some monomial with prefix p (of length d) has a nonzero
    // coefficient in M_n; live_prime_ likewise for M_n or M_n′.
    std::vector<std::vector<bool>> live_;
    std::vector<std::vector<bool>> live_prime_;
    mutable std::vector<std::vector<Complex>> buffers_;
};

}  // namespace hypermermin

#endif  // HYPERMERMIN_MERMIN_H
