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

#ifndef HYPERMERMIN_MATRIX2_H
#define HYPERMERMIN_MATRIX2_H

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace hypermermin {

/// Row-major 2×2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<std::complex<double>, 4>;

inline Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Matrix2 adjoint(const Matrix2& m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

/// out = (I ⊗ … ⊗ m ⊗ … ⊗ I) in, with `m` acting on index bit `bit`.
/// `out` and `in` must not alias.
inline void apply_on_bit(const Matrix2& m, int bit, std::span<const std::complex<double>> in,
                         std::span<std::complex<double>> out) {
    const std::size_t stride = std::size_t{1} << bit;
    const std::size_t size = in.size();
    for (std::size_t block = 0; block < size; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const auto a0 = in[i];
            const auto a1 = in[i + stride];
            out[i] = m[0] * a0 + m[1] * a1;
            out[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

/// In-place variant of `apply_on_bit`.
inline void apply_on_bit_inplace(const Matrix2& m, int bit, std::span<std::complex<double>> amps) {
    const std::size_t stride = std::size_t{1} << bit;
    for (std::size_t block = 0; block < amps.size(); block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const auto a0 = amps[i];
            const auto a1 = amps[i + stride];
            amps[i] = m[0] * a0 + m[1] * a1;
            amps[i + stride] = m[2] * a0 + m[3] * a1;
        }
    }
}

}  // namespace hypermermin

#endif  // HYPERMERMIN_MATRIX2_H
