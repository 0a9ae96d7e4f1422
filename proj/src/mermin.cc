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

#include "hypermermin/mermin.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypermermin {

BlochVector BlochVector::from_components(double x, double y, double z) {
    const double norm = std::sqrt(x * x + y * y + z * z);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw std::invalid_argument("BlochVector: zero or non-finite direction");
    }
    return BlochVector(x / norm, y / norm, z / norm);
}

BlochVector BlochVector::from_angles(double theta, double phi) {
    const double s = std::sin(theta);
    return BlochVector(s * std::cos(phi), s * std::sin(phi), std::cos(theta));
}

double BlochVector::theta() const { return std::acos(std::clamp(z_, -1.0, 1.0)); }

double BlochVector::phi() const { return std::atan2(y_, x_); }

Matrix2 observable_matrix(const BlochVector& v) {
    return {Complex(v.z(), 0.0), Complex(v.x(), -v.y()), Complex(v.x(), v.y()), Complex(-v.z(), 0.0)};
}

ObservableFamily::ObservableFamily(std::vector<BlochVector> unprimed, std::vector<BlochVector> primed)
    : a(std::move(unprimed)), a_prime(std::move(primed)) {
    if (a.empty() || a.size() != a_prime.size()) {
        throw std::invalid_argument("ObservableFamily: need n unprimed and n primed directions, got " +
                                    std::to_string(a.size()) + " and " + std::to_string(a_prime.size()));
    }
}

std::vector<BlochVector> ObservableFamily::monomial_directions(std::size_t index) const {
    const int n = num_qubits();
    std::vector<BlochVector> out;
    out.reserve(n);
    for (int j = 1; j <= n; ++j) {
        const bool primed = (index >> vertex_bit(n, j)) & 1;
        out.push_back(primed ? a_prime[j - 1] : a[j - 1]);
    }
    return out;
}

std::size_t MerminExpansion::nonzero_terms() const {
    return static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](double c) { return c != 0.0; }));
}

MerminExpansion expand_mermin(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxMerminQubits) {
        throw std::out_of_range("expand_mermin: qubit count " + std::to_string(num_qubits) + " outside [1, " +
                                std::to_string(kMaxMerminQubits) + "]");
    }
    // M_1 = a_1 and its primed swap M_1' = a_1'.
    std::vector<double> m = {1.0, 0.0};
    std::vector<double> mp = {0.0, 1.0};
    for (int k = 2; k <= num_qubits; ++k) {
        // Qubit k becomes the new least significant bit.
        std::vector<double> next(2 * m.size());
        std::vector<double> next_prime(2 * m.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            next[2 * i] = 0.5 * (m[i] + mp[i]);
            next[2 * i + 1] = 0.5 * (m[i] - mp[i]);
            next_prime[2 * i] = 0.5 * (mp[i] - m[i]);
            next_prime[2 * i + 1] = 0.5 * (mp[i] + m[i]);
        }
        m = std::move(next);
        mp = std::move(next_prime);
    }
    return MerminExpansion{num_qubits, std::move(m), std::move(mp)};
}

Complex monomial_expectation_complex(const StateVector& state, std::span<const BlochVector> directions) {
    const int n = state.num_qubits();
    if (static_cast<int>(directions.size()) != n) {
        throw std::invalid_argument("monomial_expectation: " + std::to_string(directions.size()) +
                                    " directions for " + std::to_string(n) + " qubits");
    }
    std::vector<Complex> work(state.amplitudes().begin(), state.amplitudes().end());
    for (int j = 1; j <= n; ++j) {
        apply_on_bit_inplace(observable_matrix(directions[j - 1]), vertex_bit(n, j), work);
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < work.size(); ++i) sum += std::conj(state[i]) * work[i];
    return sum;
}

double monomial_expectation(const StateVector& state, std::span<const BlochVector> directions) {
    return monomial_expectation_complex(state, directions).real();
}

double mermin_expectation(const StateVector& state, const ObservableFamily& family, bool use_prime) {
    if (family.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("mermin_expectation: family has " + std::to_string(family.num_qubits()) +
                                    " qubits, state has " + std::to_string(state.num_qubits()));
    }
    const auto expansion = expand_mermin(state.num_qubits());
    const auto& coeffs = use_prime ? expansion.coeffs_prime : expansion.coeffs;
    double total = 0.0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        total += coeffs[i] * monomial_expectation(state, family.monomial_directions(i));
    }
    return total;
}

MerminEvaluator::MerminEvaluator(StateVector state)
    : state_(std::move(state)), expansion_(expand_mermin(state_.num_qubits())) {
    const int n = state_.num_qubits();
    live_.resize(n + 1);
    live_prime_.resize(n + 1);
    live_[n].resize(expansion_.coeffs.size());
    live_prime_[n].resize(expansion_.coeffs.size());
    for (std::size_t i = 0; i < expansion_.coeffs.size(); ++i) {
        live_[n][i] = expansion_.coeffs[i] != 0.0;
        live_prime_[n][i] = live_[n][i] || expansion_.coeffs_prime[i] != 0.0;
    }
    for (int d = n - 1; d >= 0; --d) {
        live_[d].resize(std::size_t{1} << d);
        live_prime_[d].resize(std::size_t{1} << d);
        for (std::size_t p = 0; p < live_[d].size(); ++p) {
            live_[d][p] = live_[d + 1][2 * p] || live_[d + 1][2 * p + 1];
            live_prime_[d][p] = live_prime_[d + 1][2 * p] || live_prime_[d + 1][2 * p + 1];
        }
    }
    buffers_.assign(n + 1, std::vector<Complex>(state_.dimension()));
    std::copy(state_.amplitudes().begin(), state_.amplitudes().end(), buffers_[0].begin());
}

MerminValues MerminEvaluator::evaluate(const ObservableFamily& family, bool need_prime) const {
    const int n = state_.num_qubits();
    if (family.num_qubits() != n) {
        throw std::invalid_argument("MerminEvaluator: family has " + std::to_string(family.num_qubits()) +
                                    " qubits, state has " + std::to_string(n));
    }
    std::vector<Matrix2> observables(2 * n);
    for (int j = 0; j < n; ++j) {
        observables[2 * j] = observable_matrix(family.a[j]);
        observables[2 * j + 1] = observable_matrix(family.a_prime[j]);
    }
    return evaluate(observables, need_prime);
}

MerminValues MerminEvaluator::evaluate(std::span<const Matrix2> observables, bool need_prime) const {
    if (observables.size() != 2 * static_cast<std::size_t>(state_.num_qubits())) {
        throw std::invalid_argument("MerminEvaluator: expected 2n observables");
    }
    MerminValues out;
    visit(observables, 0, 0, need_prime, out);
    return out;
}

void MerminEvaluator::visit(std::span<const Matrix2> observables, int depth, std::size_t prefix, bool need_prime,
                            MerminValues& out) const {
    const int n = state_.num_qubits();
    const auto& live = need_prime ? live_prime_ : live_;
    if (depth == n) {
        const auto& v = buffers_[n];
        double e = 0.0;
        const auto amps = state_.amplitudes();
        for (std::size_t i = 0; i < v.size(); ++i) {
            e += amps[i].real() * v[i].real() + amps[i].imag() * v[i].imag();
        }
        out.m += expansion_.coeffs[prefix] * e;
        if (need_prime) out.m_prime += expansion_.coeffs_prime[prefix] * e;
        return;
    }
    const int bit = n - 1 - depth;
    for (std::size_t choice = 0; choice < 2; ++choice) {
        const std::size_t child = 2 * prefix + choice;
        if (!live[depth + 1][child]) continue;
        apply_on_bit(observables[2 * depth + choice], bit, buffers_[depth], buffers_[depth + 1]);
        visit(observables, depth + 1, child, need_prime, out);
    }
}

}  // namespace hypermermin
