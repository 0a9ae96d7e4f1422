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

#ifndef HYPERMERMIN_SINGULAR_H
#define HYPERMERMIN_SINGULAR_H

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hypermermin/hyperstate.h"

namespace hypermermin {

/// Largest register accepted by `analyze_section` (2ⁿ charts, n×n Newton).
inline constexpr int kMaxSectionQubits = 7;

/// Affine chart of (P¹)ⁿ. Bit n−j of `mask` is the homogeneous coordinate of
/// factor j that is fixed to 1; the other coordinate is the affine variable
/// u_j. Mask 0 is the chart x₀^{(j)} = 1 for every j.
struct Chart {
    int num_factors = 0;
    std::uint32_t mask = 0;

    /// Which coordinate (0 or 1) of factor j (1-based) is fixed to 1.
    int fixed_coordinate(int factor) const { return (mask >> (num_factors - factor)) & 1; }
    bool operator==(const Chart&) const = default;
};

/// Value, gradient and Hessian of a section polynomial at one point.
struct SectionDerivatives {
    Complex value;
    std::vector<Complex> gradient;
    /// Row-major n×n.
    std::vector<Complex> hessian;
};

/// Multilinear polynomial f(u_1, …, u_n) = Σ_S c_S ∏_{j∈S} u_j.
///
/// Subset S is encoded like a basis index: u_j ∈ S iff bit n−j is set.
class SectionPolynomial {
   public:
    SectionPolynomial() = default;
    /// Throws std::invalid_argument unless coeffs.size() == 2ⁿ.
    SectionPolynomial(int num_variables, std::vector<Complex> coeffs);

    int num_variables() const { return num_variables_; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    /// f, ∇f and the Hessian from one Taylor shift of the coefficient table,
    /// O(n·2ⁿ).
    SectionDerivatives derivatives(std::span<const Complex> point) const;

    /// f by summing every monomial directly.
    Complex evaluate_direct(std::span<const Complex> point) const;

    /// ∇f by differentiating every monomial directly.
    std::vector<Complex> gradient_direct(std::span<const Complex> point) const;

   private:
    int num_variables_ = 0;
    std::vector<Complex> coeffs_;
};

/// Σ conj(a_i) ∏_j x^{(j)}_{i_j} restricted to `chart`: the coefficient of u_S
/// is conj(a[chart.mask XOR S]).
SectionPolynomial section_polynomial(const StateVector& state, const Chart& chart);

struct SectionConfig {
    int starts_per_chart = 500;
    /// Start components are uniform in the complex disk of this radius.
    double start_radius = 3.0;
    int max_iterations = 50;
    /// Newton stops once ‖δ‖ ≤ step_tolerance·max(1, ‖u‖).
    double step_tolerance = 1e-12;
    /// Acceptance: ‖∇f‖ ≤ gradient_tolerance and |f| ≤ value_tolerance.
    double gradient_tolerance = 1e-10;
    double value_tolerance = 1e-8;
    /// Points failing acceptance but within these bounds are near misses.
    double near_miss_gradient = 1e-6;
    double near_miss_value = 1e-4;
    /// Affine duplicates within one chart.
    double dedup_radius = 1e-6;
    /// Projective merge across charts.
    double merge_tolerance = 1e-6;
    /// Singular values below corank_cutoff × largest count towards the corank.
    double corank_cutoff = 1e-7;
    /// Verdict heuristics for non-isolated singular loci.
    int max_isolated_points = 20;
    double cluster_radius = 1e-2;
    /// Iterates leaving this radius are treated as diverging to infinity.
    double divergence_radius = 1e8;
    std::uint64_t seed = 1;

    void validate() const;
};

struct NewtonDiagnostics {
    int starts = 0;
    int converged = 0;
    int accepted = 0;
    int near_misses = 0;
    int diverged = 0;
};

struct CriticalPointSearch {
    /// Accepted points, deduplicated.
    std::vector<std::vector<Complex>> points;
    /// Near-miss points, deduplicated.
    std::vector<std::vector<Complex>> near_misses;
    NewtonDiagnostics diagnostics;
};

/// Multistart damped Newton on ∇f = 0 over complex coordinates; keeps points
/// where f vanishes as well. `stream` selects the RNG sub-stream of config.seed.
CriticalPointSearch find_critical_points(const SectionPolynomial& poly, const SectionConfig& config,
                                         std::uint64_t stream = 0);

struct SingularPoint {
    Chart chart;
    std::vector<Complex> affine;
    /// (x₀, x₁) per factor, scaled so the larger modulus is 1.
    std::vector<std::array<Complex, 2>> projective;
    /// max(|f|, ‖∇f‖) at `affine`.
    double residual = 0.0;
    int hessian_corank = 0;
    std::vector<double> hessian_singular_values;
    /// Number of charts in which the point was found.
    int charts_seen = 1;
};

/// Hessian corank and residual of `point`.
SingularPoint classify_point(const SectionPolynomial& poly, std::span<const Complex> point,
                             const SectionConfig& config = {});

/// Lifts an affine point of `chart` to normalized projective coordinates.
/// True if some Hessian kernel direction at `point` (a kernel basis vector
/// or the kernel projection of a coordinate axis) leads, after a step of
/// 5 × cluster_radius and a Newton polish, to another critical point at
/// least half that distance away.
bool continues_along_kernel(const SectionPolynomial& poly, std::span<const Complex> point,
                            const SectionConfig& config = {});

std::vector<std::array<Complex, 2>> lift_to_projective(const Chart& chart, std::span<const Complex> point);

/// Largest per-factor phase-invariant distance |p₀q₁ − p₁q₀| / (‖p‖‖q‖).
double projective_distance(std::span<const std::array<Complex, 2>> p, std::span<const std::array<Complex, 2>> q);

enum class SectionVerdict { Smooth, IsolatedSingular, NonIsolatedCandidate, Inconclusive };

std::string_view to_string(SectionVerdict verdict);

struct ChartDiagnostics {
    Chart chart;
    NewtonDiagnostics newton;
};

struct SectionReport {
    SectionVerdict verdict = SectionVerdict::Smooth;
    std::vector<SingularPoint> points;
    /// corank_counts[c] = number of points with Hessian corank c.
    std::vector<int> corank_counts;
    /// Near misses not explained by an accepted point.
    int unresolved_near_misses = 0;
    /// Degenerate points from which Newton, restarted a short distance along
    /// a Hessian kernel direction, lands on a different critical point.
    int kernel_continuations = 0;
    std::vector<ChartDiagnostics> charts;
    std::uint64_t seed = 0;
    /// Set by `confirm_section` when every seed produced the same point set.
    bool count_confirmed = false;
};

/// All 2ⁿ charts, merged projectively. NonIsolatedCandidate if a kernel
/// continuation exists, more than max_isolated_points points were found, or
/// two points lie within cluster_radius; otherwise Inconclusive if near
/// misses remain unresolved. Throws std::invalid_argument for
/// n > kMaxSectionQubits.
SectionReport analyze_section(const StateVector& state, const SectionConfig& config = {});

/// `analyze_section` under `seeds` independent seeds derived from
/// config.seed. Returns the first report, with count_confirmed set iff every
/// run merged to the same verdict and point set.
SectionReport confirm_section(const StateVector& state, const SectionConfig& config = {}, int seeds = 3);

struct SurveyRow {
    int num_qubits = 0;
    int edge_size = 0;
    SectionReport report;
};

/// `analyze_section` of each k-uniform state on n qubits, k in [k_min, k_max].
std::vector<SurveyRow> kuniform_section_survey(int num_qubits, int k_min, int k_max,
                                               const SectionConfig& config = {});

}  // namespace hypermermin

#endif  // HYPERMERMIN_SINGULAR_H
