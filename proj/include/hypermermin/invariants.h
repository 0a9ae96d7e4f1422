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

#ifndef HYPERMERMIN_INVARIANTS_H
#define HYPERMERMIN_INVARIANTS_H

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "hypermermin/hyperstate.h"
#include "hypermermin/singular.h"

namespace hypermermin {

/// Relative threshold below which the 2×2×2×2 hyperdeterminant counts as zero.
inline constexpr double kHdetZeroTolerance = 1e-10;

/// 2×2×2 tensor, entry t_{ijk} stored at 4i + 2j + k.
struct Tensor222 {
    std::array<Complex, 8> t{};

    Complex& operator()(int i, int j, int k) { return t[4 * i + 2 * j + k]; }
    const Complex& operator()(int i, int j, int k) const { return t[4 * i + 2 * j + k]; }
};

/// Cayley's hyperdeterminant of format 2×2×2 (degree 4).
template <class T>
T cayley_hyperdet_222_generic(const std::array<T, 8>& t) {
    const T &a000 = t[0], &a001 = t[1], &a010 = t[2], &a011 = t[3];
    const T &a100 = t[4], &a101 = t[5], &a110 = t[6], &a111 = t[7];
    const T squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                      a100 * a100 * a011 * a011;
    const T paired = a000 * a001 * a110 * a111 + a000 * a010 * a101 * a111 + a000 * a100 * a011 * a111 +
                     a001 * a010 * a101 * a110 + a001 * a100 * a011 * a110 + a010 * a100 * a011 * a101;
    const T quads = a000 * a011 * a101 * a110 + a001 * a010 * a100 * a111;
    return squares - 2.0 * paired + 4.0 * quads;
}

Complex cayley_hyperdet_222(const Tensor222& tensor);

/// q(z₀, z₁) = Σ_k c_k z₀^{4−k} z₁^k.
struct BinaryQuartic {
    std::array<Complex, 5> c{};

    Complex operator()(Complex z0, Complex z1) const;
};

/// Cayley's 2×2×2 hyperdeterminant of b_{ijk} = a_{ijk0} z₀ + a_{ijk1} z₁ as a
/// binary quartic. Requires n = 4.
BinaryQuartic schlafli_quartic(std::span<const Complex> amplitudes);
BinaryQuartic schlafli_quartic(const StateVector& state);

/// I = 12c₀c₄ − 3c₁c₃ + c₂², J = 72c₀c₂c₄ + 9c₁c₂c₃ − 27c₀c₃² − 27c₁²c₄ − 2c₂³.
template <class T>
std::array<T, 2> quartic_invariants_generic(const std::array<T, 5>& c) {
    const T i = 12.0 * (c[0] * c[4]) - 3.0 * (c[1] * c[3]) + c[2] * c[2];
    const T j = 72.0 * (c[0] * c[2] * c[4]) + 9.0 * (c[1] * c[2] * c[3]) - 27.0 * (c[0] * c[3] * c[3]) -
                27.0 * (c[1] * c[1] * c[4]) - 2.0 * (c[2] * c[2] * c[2]);
    return {i, j};
}

/// Δ = 4I³ − J². For the roots r of q(1, t) = c₀ + c₁t + … + c₄t⁴ this is
/// 27·c₄⁶·∏_{i<j}(r_i − r_j)², so Δ = 0 iff q has a repeated root.
template <class T>
T quartic_discriminant_generic(const std::array<T, 5>& c) {
    const auto [i, j] = quartic_invariants_generic(c);
    return 4.0 * (i * i * i) - j * j;
}

Complex quartic_discriminant(const BinaryQuartic& q);

struct HdetEvaluation {
    Complex value;
    /// Same polynomial evaluated on |amplitudes| with every sign made positive:
    /// a bound on the size of the terms that cancel in `value`.
    double magnitude = 0.0;
    bool is_zero = true;
};

/// Hyperdeterminant of format 2×2×2×2 as the discriminant of the Schläfli
/// quartic, evaluated in long double, with the zero test
/// |value| ≤ kHdetZeroTolerance·magnitude.
HdetEvaluation evaluate_hdet_2222(std::span<const Complex> amplitudes);
HdetEvaluation evaluate_hdet_2222(const StateVector& state);

Complex hdet_2222(const StateVector& state);

enum class Stratum { Generic, Node, CuspCandidate, Undetermined };

std::string_view to_string(Stratum stratum);

struct StratumReport {
    Complex hdet_value;
    double hdet_magnitude = 0.0;
    bool hdet_zero = false;
    Stratum stratum = Stratum::Generic;
    /// Section analysis; absent for generic states.
    std::optional<SectionReport> evidence;
    std::string diagnostics;
};

/// Generic iff HDet ≠ 0. Otherwise the section is analysed: Node when it has
/// at least two singular points, all with full-rank Hessian; CuspCandidate
/// when some point has a degenerate Hessian; Undetermined otherwise.
StratumReport classify_stratum(const StateVector& state, const SectionConfig& config = {});

}  // namespace hypermermin

#endif  // HYPERMERMIN_INVARIANTS_H
