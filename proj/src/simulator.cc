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

#include "hypermermin/simulator.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hypermermin/rng.h"

namespace hypermermin {
namespace {

const Matrix2 kHadamard = {Complex(M_SQRT1_2), Complex(M_SQRT1_2), Complex(M_SQRT1_2), Complex(-M_SQRT1_2)};

// (index bit, classical bit) of every measurement.
std::vector<std::pair<int, int>> measured_bits(const Circuit& circuit) {
    std::vector<std::pair<int, int>> out;
    const int total = circuit.total_qubits();
    for (const auto& g : circuit.gates()) {
        if (g.kind == GateKind::Measure) out.emplace_back(total - 1 - g.qubits[0], g.cbit);
    }
    return out;
}

}  // namespace

StateVector simulate(const Circuit& circuit) {
    const int total = circuit.total_qubits();
    if (total < 1 || total > kMaxSimulatedQubits) {
        throw std::invalid_argument("simulate: " + std::to_string(total) + " qubits exceed the budget of " +
                                    std::to_string(kMaxSimulatedQubits));
    }
    std::vector<Complex> amps(std::size_t{1} << total, Complex(0.0));
    amps[0] = 1.0;
    const auto bit = [total](int q) { return total - 1 - q; };
    for (const auto& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::H:
                apply_on_bit_inplace(kHadamard, bit(g.qubits[0]), amps);
                break;
            case GateKind::U3:
                apply_on_bit_inplace(u3_matrix({g.params[0], g.params[1], g.params[2]}), bit(g.qubits[0]), amps);
                break;
            case GateKind::CZ: {
                const std::size_t mask = (std::size_t{1} << bit(g.qubits[0])) | (std::size_t{1} << bit(g.qubits[1]));
                for (std::size_t i = 0; i < amps.size(); ++i) {
                    if ((i & mask) == mask) amps[i] = -amps[i];
                }
                break;
            }
            case GateKind::Toffoli: {
                const std::size_t controls =
                    (std::size_t{1} << bit(g.qubits[0])) | (std::size_t{1} << bit(g.qubits[1]));
                const std::size_t target = std::size_t{1} << bit(g.qubits[2]);
                for (std::size_t i = 0; i < amps.size(); ++i) {
                    if ((i & controls) == controls && !(i & target)) std::swap(amps[i], amps[i | target]);
                }
                break;
            }
            case GateKind::Measure:
                break;
        }
    }
    return StateVector(total, std::move(amps));
}

AncillaCheck check_ancillas(const StateVector& full, int num_ancillas) {
    if (num_ancillas < 0 || num_ancillas >= full.num_qubits()) throw std::invalid_argument("check_ancillas: bad count");
    const std::size_t adim = std::size_t{1} << num_ancillas;
    const std::size_t mdim = full.dimension() / adim;
    std::vector<Complex> rho(adim * adim, Complex(0.0));
    for (std::size_t m = 0; m < mdim; ++m) {
        for (std::size_t a = 0; a < adim; ++a) {
            for (std::size_t b = 0; b < adim; ++b) {
                rho[a * adim + b] += full[m * adim + a] * std::conj(full[m * adim + b]);
            }
        }
    }
    AncillaCheck out;
    out.purity = 0.0;
    for (const auto& x : rho) out.purity += std::norm(x);
    out.zero_population = rho[0].real();
    return out;
}

StateVector main_register_state(const StateVector& full, int num_ancillas, double tolerance) {
    const AncillaCheck check = check_ancillas(full, num_ancillas);
    if (std::abs(1.0 - check.zero_population) > tolerance) {
        throw std::runtime_error("main_register_state: ancillas not returned to |0>");
    }
    const std::size_t adim = std::size_t{1} << num_ancillas;
    std::vector<Complex> amps(full.dimension() / adim);
    for (std::size_t m = 0; m < amps.size(); ++m) amps[m] = full[m * adim];
    return StateVector::normalized(full.num_qubits() - num_ancillas, std::move(amps));
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tolerance) {
    if (a.num_qubits() != b.num_qubits()) return false;
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) overlap += std::conj(b[i]) * a[i];
    if (std::abs(overlap) == 0.0) return false;
    const Complex phase = overlap / std::abs(overlap);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (std::abs(a[i] - phase * b[i]) > tolerance) return false;
    }
    return true;
}

std::map<std::string, double> outcome_distribution(const Circuit& circuit) {
    const auto bits = measured_bits(circuit);
    if (bits.empty()) throw std::invalid_argument("outcome_distribution: circuit has no measurements");
    const StateVector state = simulate(circuit);
    std::map<std::string, double> dist;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const double p = std::norm(state[i]);
        if (p == 0.0) continue;
        std::string key(circuit.num_cbits(), '0');
        for (const auto& [b, c] : bits) key[c] = ((i >> b) & 1) ? '1' : '0';
        dist[key] += p;
    }
    return dist;
}

ShotCounts sample(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed) {
    const auto dist = outcome_distribution(circuit);
    std::vector<std::string> keys;
    std::vector<double> weights;
    for (const auto& [k, p] : dist) {
        keys.push_back(k);
        weights.push_back(p);
    }
    auto rng = make_stream(seed, 0);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    std::vector<std::uint64_t> tally(keys.size(), 0);
    for (std::uint64_t s = 0; s < shots; ++s) ++tally[pick(rng)];
    ShotCounts out;
    out.num_bits = circuit.num_cbits();
    out.total = shots;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (tally[i] > 0) out.counts[keys[i]] = tally[i];
    }
    return out;
}

double estimate_monomial(const ShotCounts& counts) {
    if (counts.total == 0) throw std::invalid_argument("estimate_monomial: no shots");
    double sum = 0.0;
    for (const auto& [key, n] : counts.counts) {
        const auto ones = std::count(key.begin(), key.end(), '1');
        sum += (ones % 2 ? -1.0 : 1.0) * static_cast<double>(n);
    }
    return sum / static_cast<double>(counts.total);
}

double exact_parity(const Circuit& circuit) {
    double sum = 0.0;
    for (const auto& [key, p] : outcome_distribution(circuit)) {
        sum += (std::count(key.begin(), key.end(), '1') % 2 ? -1.0 : 1.0) * p;
    }
    return sum;
}

MerminEstimate estimate_mermin(const Hypergraph& graph, const ObservableFamily& family, std::uint64_t shots,
                               std::uint64_t seed, bool use_prime) {
    if (family.num_qubits() != graph.num_vertices()) {
        throw std::invalid_argument("estimate_mermin: family has " + std::to_string(family.num_qubits()) +
                                    " qubits, hypergraph has " + std::to_string(graph.num_vertices()));
    }
    const MerminExpansion expansion = expand_mermin(graph.num_vertices());
    const auto& coeffs = use_prime ? expansion.coeffs_prime : expansion.coeffs;
    const Circuit base = hypergraph_circuit(graph);
    MerminEstimate out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0.0) continue;
        const Circuit c = measurement_circuit(base, family.monomial_directions(i));
        const double e = shots == 0 ? exact_parity(c) : estimate_monomial(sample(c, shots, split_seed(seed, i)));
        out.terms.push_back({i, coeffs[i], e});
        out.value += coeffs[i] * e;
    }
    return out;
}

}  // namespace hypermermin
