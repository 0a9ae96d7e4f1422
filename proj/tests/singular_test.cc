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

#include "hypermermin/singular.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypermermin/catalog.h"
#include "oracles.h"

namespace hypermermin {
namespace {

StateVector catalog_state(std::string_view name) { return catalog_find(default_catalog(), name).state(); }

// Σ_i conj(a_i) ∏_j x_j[i_j] over the full multilinear form.
Complex multilinear_form(const StateVector& state, const std::vector<std::array<Complex, 2>>& x) {
    const int n = state.num_qubits();
    Complex total = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        Complex term = std::conj(state[i]);
        for (int j = 1; j <= n; ++j) term *= x[j - 1][(i >> (n - j)) & 1];
        total += term;
    }
    return total;
}

std::vector<Complex> random_point(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> p(n);
    for (auto& z : p) z = Complex(g(rng), g(rng));
    return p;
}

SectionConfig quick_config() {
    SectionConfig c;
    c.starts_per_chart = 150;
    return c;
}

TEST(SectionPolynomial, RejectsWrongSize) {
    EXPECT_THROW(SectionPolynomial(3, std::vector<Complex>(7)), std::invalid_argument);
}

TEST(SectionPolynomial, TaylorShiftMatchesDirect) {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < 10; ++t) {
            const auto coeffs = oracle::random_amplitudes(n, rng);
            const SectionPolynomial poly(n, coeffs);
            const auto p = random_point(n, rng);
            const auto d = poly.derivatives(p);
            const double scale = 1.0 + std::abs(poly.evaluate_direct(p));
            EXPECT_NEAR(std::abs(d.value - poly.evaluate_direct(p)), 0.0, 1e-10 * scale);
            const auto grad = poly.gradient_direct(p);
            for (int j = 0; j < n; ++j) EXPECT_NEAR(std::abs(d.gradient[j] - grad[j]), 0.0, 1e-9 * scale);
            // Hessian by central differences of the direct gradient.
            const double h = 1e-5;
            for (int j = 0; j < n; ++j) {
                auto plus = p, minus = p;
                plus[j] += h;
                minus[j] -= h;
                const auto gp = poly.gradient_direct(plus);
                const auto gm = poly.gradient_direct(minus);
                for (int k = 0; k < n; ++k) {
                    const Complex fd = (gp[k] - gm[k]) / (2.0 * h);
                    EXPECT_NEAR(std::abs(d.hessian[j * n + k] - fd), 0.0, 1e-5 * scale);
                }
                EXPECT_EQ(d.hessian[j * n + j], Complex(0.0));
            }
        }
    }
}

TEST(SectionPolynomial, MatchesMultilinearFormInEveryChart) {
    std::mt19937_64 rng(12);
    for (int n : {3, 4}) {
        const auto psi = oracle::random_state(n, rng);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            const Chart chart{n, mask};
            const auto poly = section_polynomial(psi, chart);
            const auto p = random_point(n, rng);
            std::vector<std::array<Complex, 2>> x(n);
            for (int j = 1; j <= n; ++j) {
                x[j - 1][chart.fixed_coordinate(j)] = 1.0;
                x[j - 1][1 - chart.fixed_coordinate(j)] = p[j - 1];
            }
            EXPECT_NEAR(std::abs(poly.evaluate_direct(p) - multilinear_form(psi, x)), 0.0, 1e-10);
        }
    }
}

TEST(SectionPolynomial, CatalogCoefficients) {
    const auto g24 = catalog_state("G24");
    const auto poly = section_polynomial(g24, Chart{4, 0});
    for (std::size_t s = 0; s < 16; ++s) EXPECT_EQ(poly.coeffs()[s], std::conj(g24[s]));
    // The signs of the section coefficients are the amplitude signs.
    std::vector<std::size_t> negative;
    for (std::size_t s = 0; s < 16; ++s) {
        if (poly.coeffs()[s].real() < 0) negative.push_back(s);
    }
    EXPECT_EQ(negative, (std::vector<std::size_t>{3, 6, 9, 12, 15}));

    std::vector<Complex> zero(16, 0.0);
    zero[0] = 1.0;
    const auto constant = section_polynomial(StateVector(4, zero), Chart{4, 0});
    EXPECT_EQ(constant.coeffs()[0], Complex(1.0));
    for (std::size_t s = 1; s < 16; ++s) EXPECT_EQ(constant.coeffs()[s], Complex(0.0));
    EXPECT_THROW(section_polynomial(g24, Chart{3, 0}), std::invalid_argument);
}

TEST(LiftToProjective, ScalesAndDistances) {
    const Chart chart{2, 0b10};
    const std::vector<Complex> p = {Complex(4.0), Complex(0.5)};
    const auto x = lift_to_projective(chart, p);
    // Factor 1 fixes coordinate 1, factor 2 fixes coordinate 0.
    EXPECT_EQ(x[0][0], Complex(1.0));
    EXPECT_EQ(x[0][1], Complex(0.25));
    EXPECT_EQ(x[1][0], Complex(1.0));
    EXPECT_EQ(x[1][1], Complex(0.5));
    EXPECT_EQ(projective_distance(x, x), 0.0);
    auto y = x;
    for (auto& pair : y) {
        pair[0] *= Complex(0.0, 2.0);
        pair[1] *= Complex(0.0, 2.0);
    }
    EXPECT_NEAR(projective_distance(x, y), 0.0, 1e-15);
}

TEST(ClassifyPoint, Coranks) {
    // wx + yz: node at the origin.
    std::vector<Complex> node(16, 0.0);
    node[0b1100] = node[0b0011] = 1.0;
    const SectionPolynomial a(4, node);
    const std::vector<Complex> origin(4, 0.0);
    const auto pa = classify_point(a, origin);
    EXPECT_EQ(pa.hessian_corank, 0);
    EXPECT_EQ(pa.residual, 0.0);
    EXPECT_EQ(pa.hessian_singular_values.size(), 4u);

    // wxy: Hessian vanishes at the origin.
    std::vector<Complex> cubic(8, 0.0);
    cubic[0b111] = 1.0;
    const SectionPolynomial b(3, cubic);
    EXPECT_EQ(classify_point(b, std::vector<Complex>(3, 0.0)).hessian_corank, 3);

    // wx at (0, 0, 1): corank 1 along the free direction.
    std::vector<Complex> degenerate(8, 0.0);
    degenerate[0b110] = 1.0;
    const SectionPolynomial c(3, degenerate);
    EXPECT_EQ(classify_point(c, std::vector<Complex>{0.0, 0.0, 1.0}).hessian_corank, 1);
}

TEST(FindCriticalPoints, SingleNode) {
    std::vector<Complex> node(16, 0.0);
    node[0b1100] = node[0b0011] = 1.0;
    const auto search = find_critical_points(SectionPolynomial(4, node), quick_config());
    ASSERT_EQ(search.points.size(), 1u);
    for (const auto& z : search.points[0]) EXPECT_LT(std::abs(z), 1e-8);
    EXPECT_EQ(search.diagnostics.starts, quick_config().starts_per_chart);
}

TEST(FindCriticalPoints, Deterministic) {
    const auto poly = section_polynomial(catalog_state("G17"), Chart{4, 0});
    const auto a = find_critical_points(poly, quick_config(), 3);
    const auto b = find_critical_points(poly, quick_config(), 3);
    ASSERT_EQ(a.points.size(), b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i], b.points[i]);
}

TEST(AnalyzeSection, Verdicts) {
    const auto g24 = analyze_section(catalog_state("G24"));
    EXPECT_EQ(g24.verdict, SectionVerdict::Smooth);
    EXPECT_TRUE(g24.points.empty());
    EXPECT_EQ(g24.charts.size(), 16u);

    const auto g17 = analyze_section(catalog_state("G17"));
    EXPECT_EQ(g17.verdict, SectionVerdict::IsolatedSingular);
    EXPECT_EQ(g17.points.size(), 6u);
    ASSERT_FALSE(g17.corank_counts.empty());
    EXPECT_EQ(g17.corank_counts[0], 6);

    std::vector<Complex> ghz(32, 0.0);
    ghz[0] = ghz[31] = 1.0 / std::sqrt(2.0);
    EXPECT_EQ(analyze_section(StateVector(5, ghz)).verdict, SectionVerdict::NonIsolatedCandidate);

    std::vector<Complex> product(16, 0.0);
    product[0] = 1.0;
    EXPECT_EQ(analyze_section(StateVector(4, product)).verdict, SectionVerdict::NonIsolatedCandidate);
}

TEST(AnalyzeSectionProperties, PointsAreCriticalInTheirOwnChart) {
    for (const auto& name : {"G7", "G17", "S4", "LC4"}) {
        const auto psi = catalog_state(name);
        const auto report = analyze_section(psi);
        ASSERT_FALSE(report.points.empty()) << name;
        for (const auto& p : report.points) {
            EXPECT_LE(p.residual, 1e-8) << name;
            // Independent check through the full multilinear form: F and every
            // partial derivative vanish at the lifted point.
            const auto x = lift_to_projective(p.chart, p.affine);
            EXPECT_LT(std::abs(multilinear_form(psi, x)), 1e-8) << name;
            const int n = psi.num_qubits();
            for (int j = 0; j < n; ++j) {
                for (int c = 0; c < 2; ++c) {
                    auto e = x;
                    e[j] = {0.0, 0.0};
                    e[j][c] = 1.0;
                    EXPECT_LT(std::abs(multilinear_form(psi, e)), 1e-7) << name << " factor " << j;
                }
            }
        }
    }
}

TEST(AnalyzeSectionProperties, IndependentOfSeed) {
    const auto psi = catalog_state("LC4");
    SectionConfig a, b;
    b.seed = 99;
    const auto ra = analyze_section(psi, a);
    const auto rb = analyze_section(psi, b);
    ASSERT_EQ(ra.points.size(), rb.points.size());
    for (const auto& p : ra.points) {
        bool found = false;
        for (const auto& q : rb.points) found = found || projective_distance(p.projective, q.projective) < 1e-6;
        EXPECT_TRUE(found);
    }
}

TEST(AnalyzeSectionProperties, ChartsAgree) {
    // Each isolated point of G17 lies in several charts and is found in each of them.
    const auto report = analyze_section(catalog_state("G17"));
    for (const auto& p : report.points) EXPECT_GE(p.charts_seen, 1);
    int multi = 0;
    for (const auto& p : report.points) multi += p.charts_seen > 1;
    EXPECT_GT(multi, 0);
}

TEST(ConfirmSection, ConfirmsCounts) {
    const auto r = confirm_section(catalog_state("G17"));
    EXPECT_TRUE(r.count_confirmed);
    EXPECT_EQ(r.points.size(), 6u);
    EXPECT_THROW(confirm_section(catalog_state("G17"), {}, 0), std::invalid_argument);
}

TEST(SectionConfig, Validation) {
    SectionConfig c;
    c.starts_per_chart = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = {};
    c.merge_tolerance = -1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    EXPECT_THROW(analyze_section(plus_state(8)), std::invalid_argument);
}

TEST(KUniformSurvey, FiveQubits) {
    const auto rows = kuniform_section_survey(5, 2, 5);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].report.verdict, SectionVerdict::NonIsolatedCandidate);
    EXPECT_EQ(rows[1].report.verdict, SectionVerdict::Smooth);
    EXPECT_EQ(rows[2].report.verdict, SectionVerdict::IsolatedSingular);
    EXPECT_EQ(rows[2].report.points.size(), 10u);
    EXPECT_EQ(rows[3].report.verdict, SectionVerdict::NonIsolatedCandidate);
}

}  // namespace
}  // namespace hypermermin
