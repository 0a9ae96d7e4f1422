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

#include "hypermermin/invariants.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hypermermin {
namespace {

using ComplexL = std::complex<long double>;

// A value together with the same expression evaluated on absolute values,
// both in extended precision.
struct Tracked {
    ComplexL v;
    long double m = 0.0L;
};

Tracked operator+(const Tracked& a, const Tracked& b) { return {a.v + b.v, a.m + b.m}; }
Tracked operator-(const Tracked& a, const Tracked& b) { return {a.v - b.v, a.m + b.m}; }
Tracked operator*(const Tracked& a, const Tracked& b) { return {a.v * b.v, a.m * b.m}; }
Tracked operator*(double s, const Tracked& a) {
    const long double ls = s;
    return {ls * a.v, std::abs(ls) * a.m};
}

// Polynomial in t of degree ≤ 4.
template <class T>
struct Poly {
    std::array<T, 5> c{};
};

template <class T>
Poly<T> operator+(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] + b.c[k];
    return r;
}

template <class T>
Poly<T> operator-(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r;
    for (int k = 0; k < 5; ++k) r.c[k] = a.c[k] - b.c[k];
    return r;
}

template <class T>
Poly<T> operator*(double s, const Poly<T>& a) {
    Poly<T> r;
    for (int k = 0; k < 5; ++k) r.c[k] = s * a.c[k];
    return r;
}

template <class T>
Poly<T> operator*(const Poly<T>& a, const Poly<T>& b) {
    Poly<T> r;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; i + j < 5; ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    return r;
}

template <class T, class Lift>
std::array<T, 5> schlafli_coefficients(std::span<const Complex> amps, Lift lift) {
    if (amps.size() != 16) throw std::invalid_argument("schlafli_quartic: need a 4-qubit state");
    std::array<Poly<T>, 8> b;
    for (int ijk = 0; ijk < 8; ++ijk) {
        b[ijk].c[0] = lift(amps[2 * ijk]);
        b[ijk].c[1] = lift(amps[2 * ijk + 1]);
    }
    return cayley_hyperdet_222_generic(b).c;
}

}  // namespace

Complex cayley_hyperdet_222(const Tensor222& tensor) { return cayley_hyperdet_222_generic(tensor.t); }

Complex BinaryQuartic::operator()(Complex z0, Complex z1) const {
    Complex total = 0.0;
    for (int k = 0; k < 5; ++k) total += c[k] * std::pow(z0, 4 - k) * std::pow(z1, k);
    return total;
}

BinaryQuartic schlafli_quartic(std::span<const Complex> amplitudes) {
    return {schlafli_coefficients<Complex>(amplitudes, [](Complex a) { return a; })};
}

BinaryQuartic schlafli_quartic(const StateVector& state) { return schlafli_quartic(state.amplitudes()); }

Complex quartic_discriminant(const BinaryQuartic& q) { return quartic_discriminant_generic(q.c); }

HdetEvaluation evaluate_hdet_2222(std::span<const Complex> amplitudes) {
    const auto c = schlafli_coefficients<Tracked>(
        amplitudes, [](Complex a) { return Tracked{ComplexL(a.real(), a.imag()), std::abs(ComplexL(a))}; });
    const Tracked delta = quartic_discriminant_generic(c);
    const Complex value(static_cast<double>(delta.v.real()), static_cast<double>(delta.v.imag()));
    const double magnitude = static_cast<double>(delta.m);
    return {value, magnitude, std::abs(value) <= kHdetZeroTolerance * magnitude};
}

HdetEvaluation evaluate_hdet_2222(const StateVector& state) { return evaluate_hdet_2222(state.amplitudes()); }

Complex hdet_2222(const StateVector& state) { return evaluate_hdet_2222(state).value; }

std::string_view to_string(Stratum stratum) {
    switch (stratum) {
        case Stratum::Generic:
            return "Generic";
        case Stratum::Node:
            return "Node";
        case Stratum::CuspCandidate:
            return "CuspCandidate";
        case Stratum::Undetermined:
            break;
    }
    return "Undetermined";
}

StratumReport classify_stratum(const StateVector& state, const SectionConfig& config) {
    if (state.num_qubits() != 4) throw std::invalid_argument("classify_stratum: need a 4-qubit state");
    const HdetEvaluation hdet = evaluate_hdet_2222(state);
    StratumReport report;
    report.hdet_value = hdet.value;
    report.hdet_magnitude = hdet.magnitude;
    report.hdet_zero = hdet.is_zero;
    if (!hdet.is_zero) {
        report.stratum = Stratum::Generic;
        return report;
    }
    try {
        report.evidence = confirm_section(state, config);
    } catch (const std::exception& e) {
        report.stratum = Stratum::Undetermined;
        report.diagnostics = std::string("section analysis failed: ") + e.what();
        return report;
    }
    const SectionReport& section = *report.evidence;
    const auto& points = section.points;
    const bool degenerate =
        std::any_of(points.begin(), points.end(), [](const SingularPoint& p) { return p.hessian_corank > 0; });
    if (degenerate) {
        report.stratum = Stratum::CuspCandidate;
    } else if (points.size() >= 2 && section.verdict == SectionVerdict::IsolatedSingular) {
        report.stratum = Stratum::Node;
    } else {
        report.stratum = Stratum::Undetermined;
        report.diagnostics = "HDet vanishes but the section shows " + std::to_string(points.size()) +
                             " singular point(s), verdict " + std::string(to_string(section.verdict));
    }
    if (!section.count_confirmed) {
        if (!report.diagnostics.empty()) report.diagnostics += "; ";
        report.diagnostics += "point count differs between seeds";
    }
    return report;
}

}  // namespace hypermermin
