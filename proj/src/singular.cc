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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "hypermermin/rng.h"

namespace hypermermin {
namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
using EigenVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

double distance(std::span<const Complex> a, std::span<const Complex> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

void insert_unique(std::vector<std::vector<Complex>>& points, std::vector<Complex> p, double radius) {
    for (const auto& q : points) {
        if (distance(p, q) <= radius) return;
    }
    points.push_back(std::move(p));
}

EigenMatrix hessian_matrix(const SectionDerivatives& d, int n) {
    EigenMatrix h(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) h(r, c) = d.hessian[r * n + c];
    }
    return h;
}

struct MergedPoint {
    SingularPoint point;
    std::set<std::uint32_t> charts;
};

bool same_point_sets(const SectionReport& a, const SectionReport& b, double tolerance) {
    if (a.verdict != b.verdict || a.points.size() != b.points.size()) return false;
    for (const auto& p : a.points) {
        const bool found = std::any_of(b.points.begin(), b.points.end(), [&](const SingularPoint& q) {
            return projective_distance(p.projective, q.projective) <= tolerance;
        });
        if (!found) return false;
    }
    return true;
}

}  // namespace

SectionPolynomial::SectionPolynomial(int num_variables, std::vector<Complex> coeffs)
    : num_variables_(num_variables), coeffs_(std::move(coeffs)) {
    if (num_variables < 1 || num_variables > 20 || coeffs_.size() != (std::size_t{1} << num_variables)) {
        throw std::invalid_argument("SectionPolynomial: need 2^n coefficients");
    }
}

SectionDerivatives SectionPolynomial::derivatives(std::span<const Complex> point) const {
    const int n = num_variables_;
    if (static_cast<int>(point.size()) != n) throw std::invalid_argument("SectionPolynomial: point dimension");
    // Coefficients of f(u + x) in x.
    std::vector<Complex> c = coeffs_;
    for (int j = 1; j <= n; ++j) {
        const std::size_t bit = std::size_t{1} << (n - j);
        const Complex u = point[j - 1];
        for (std::size_t s = 0; s < c.size(); ++s) {
            if (s & bit) c[s ^ bit] += u * c[s];
        }
    }
    SectionDerivatives d;
    d.value = c[0];
    d.gradient.resize(n);
    d.hessian.assign(static_cast<std::size_t>(n) * n, Complex(0.0));
    for (int j = 1; j <= n; ++j) {
        const std::size_t bj = std::size_t{1} << (n - j);
        d.gradient[j - 1] = c[bj];
        for (int k = j + 1; k <= n; ++k) {
            const Complex v = c[bj | (std::size_t{1} << (n - k))];
            d.hessian[(j - 1) * n + (k - 1)] = v;
            d.hessian[(k - 1) * n + (j - 1)] = v;
        }
    }
    return d;
}

Complex SectionPolynomial::evaluate_direct(std::span<const Complex> point) const {
    const int n = num_variables_;
    Complex total = 0.0;
    for (std::size_t s = 0; s < coeffs_.size(); ++s) {
        Complex term = coeffs_[s];
        for (int j = 1; j <= n; ++j) {
            if ((s >> (n - j)) & 1) term *= point[j - 1];
        }
        total += term;
    }
    return total;
}

std::vector<Complex> SectionPolynomial::gradient_direct(std::span<const Complex> point) const {
    const int n = num_variables_;
    std::vector<Complex> grad(n);
    for (int k = 1; k <= n; ++k) {
        const std::size_t bk = std::size_t{1} << (n - k);
        for (std::size_t s = 0; s < coeffs_.size(); ++s) {
            if (!(s & bk)) continue;
            Complex term = coeffs_[s];
            for (int j = 1; j <= n; ++j) {
                if (j != k && ((s >> (n - j)) & 1)) term *= point[j - 1];
            }
            grad[k - 1] += term;
        }
    }
    return grad;
}

SectionPolynomial section_polynomial(const StateVector& state, const Chart& chart) {
    const int n = state.num_qubits();
    if (chart.num_factors != n) throw std::invalid_argument("section_polynomial: chart has wrong factor count");
    std::vector<Complex> coeffs(state.dimension());
    for (std::size_t s = 0; s < coeffs.size(); ++s) coeffs[s] = std::conj(state[chart.mask ^ s]);
    return SectionPolynomial(n, std::move(coeffs));
}

void SectionConfig::validate() const {
    if (starts_per_chart <= 0 || max_iterations <= 0 || max_isolated_points < 0) {
        throw std::invalid_argument("SectionConfig: budgets must be positive");
    }
    for (double v : {start_radius, step_tolerance, gradient_tolerance, value_tolerance, near_miss_gradient,
                     near_miss_value, dedup_radius, merge_tolerance, corank_cutoff, cluster_radius,
                     divergence_radius}) {
        if (!(v > 0.0)) throw std::invalid_argument("SectionConfig: tolerances must be positive");
    }
}

namespace {

enum class NewtonStatus { Converged, Stalled, Diverged };

struct NewtonRun {
    NewtonStatus status = NewtonStatus::Stalled;
    std::vector<Complex> point;
    SectionDerivatives derivatives;
};

NewtonRun newton(const SectionPolynomial& poly, std::vector<Complex> u, const SectionConfig& config) {
    const int n = poly.num_variables();
    std::vector<Complex> trial(n);
    NewtonRun run;
    SectionDerivatives d = poly.derivatives(u);
    for (int it = 0; it < config.max_iterations; ++it) {
        const double gnorm = norm2(d.gradient);
        if (gnorm == 0.0) {
            run.status = NewtonStatus::Converged;
            break;
        }
        EigenVector g(n);
        for (int j = 0; j < n; ++j) g(j) = d.gradient[j];
        const EigenVector delta = hessian_matrix(d, n).completeOrthogonalDecomposition().solve(-g);
        if (!delta.allFinite()) break;
        // Backtrack until the gradient shrinks; keep the shortest step otherwise.
        double t = 1.0;
        SectionDerivatives next;
        for (int halving = 0; halving < 12; ++halving, t *= 0.5) {
            for (int j = 0; j < n; ++j) trial[j] = u[j] + t * delta(j);
            next = poly.derivatives(trial);
            if (norm2(next.gradient) < gnorm) break;
        }
        const double step = t * delta.norm();
        u.swap(trial);
        d = std::move(next);
        if (norm2(u) > config.divergence_radius) {
            run.status = NewtonStatus::Diverged;
            break;
        }
        if (step <= config.step_tolerance * std::max(1.0, norm2(u))) {
            run.status = NewtonStatus::Converged;
            break;
        }
    }
    run.point = std::move(u);
    run.derivatives = std::move(d);
    return run;
}

bool accepted(const SectionDerivatives& d, const SectionConfig& config) {
    return norm2(d.gradient) <= config.gradient_tolerance && std::abs(d.value) <= config.value_tolerance;
}

}  // namespace

CriticalPointSearch find_critical_points(const SectionPolynomial& poly, const SectionConfig& config,
                                         std::uint64_t stream) {
    config.validate();
    const int n = poly.num_variables();
    auto rng = make_stream(config.seed, stream);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    CriticalPointSearch out;
    std::vector<Complex> u(n);
    for (int start = 0; start < config.starts_per_chart; ++start) {
        ++out.diagnostics.starts;
        for (int j = 0; j < n; ++j) {
            const double r = config.start_radius * std::sqrt(uniform(rng));
            u[j] = std::polar(r, 2.0 * std::numbers::pi * uniform(rng));
        }
        const NewtonRun run = newton(poly, u, config);
        if (run.status == NewtonStatus::Diverged) {
            ++out.diagnostics.diverged;
            continue;
        }
        if (run.status == NewtonStatus::Converged) ++out.diagnostics.converged;
        const double gnorm = norm2(run.derivatives.gradient);
        const double fabs = std::abs(run.derivatives.value);
        if (accepted(run.derivatives, config)) {
            ++out.diagnostics.accepted;
            insert_unique(out.points, run.point, config.dedup_radius);
        } else if (gnorm <= config.near_miss_gradient && fabs <= config.near_miss_value) {
            ++out.diagnostics.near_misses;
            insert_unique(out.near_misses, run.point, config.dedup_radius);
        }
    }
    return out;
}

bool continues_along_kernel(const SectionPolynomial& poly, std::span<const Complex> point,
                            const SectionConfig& config) {
    const int n = poly.num_variables();
    const SectionDerivatives d = poly.derivatives(point);
    const Eigen::JacobiSVD<EigenMatrix> svd(hessian_matrix(d, n), Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double largest = sv.size() > 0 ? sv(0) : 0.0;
    const double radius = 5.0 * config.cluster_radius;
    std::vector<int> kernel;
    for (int i = 0; i < sv.size(); ++i) {
        if (largest == 0.0 || sv(i) < config.corank_cutoff * largest) kernel.push_back(i);
    }
    // Kernel basis vectors, plus the kernel projections of coordinate axes
    // that lie mostly inside the kernel.
    std::vector<EigenVector> directions;
    for (int i : kernel) directions.push_back(svd.matrixV().col(i));
    for (int j = 0; j < n; ++j) {
        EigenVector projected = EigenVector::Zero(n);
        for (int i : kernel) projected += std::conj(svd.matrixV()(j, i)) * svd.matrixV().col(i);
        if (projected.norm() > 0.5) directions.push_back(projected / projected.norm());
    }
    for (const auto& v : directions) {
        for (double sign : {1.0, -1.0}) {
            std::vector<Complex> probe(point.begin(), point.end());
            for (int j = 0; j < n; ++j) probe[j] += sign * radius * v(j);
            const NewtonRun run = newton(poly, probe, config);
            if (run.status == NewtonStatus::Diverged || !accepted(run.derivatives, config)) continue;
            double dist = 0.0;
            for (int j = 0; j < n; ++j) dist = std::max(dist, std::abs(run.point[j] - point[j]));
            if (dist >= 0.5 * radius) return true;
        }
    }
    return false;
}

SingularPoint classify_point(const SectionPolynomial& poly, std::span<const Complex> point,
                             const SectionConfig& config) {
    const int n = poly.num_variables();
    const SectionDerivatives d = poly.derivatives(point);
    SingularPoint out;
    out.affine.assign(point.begin(), point.end());
    out.residual = std::max(std::abs(d.value), norm2(d.gradient));
    const Eigen::JacobiSVD<EigenMatrix> svd(hessian_matrix(d, n));
    const auto& sv = svd.singularValues();
    out.hessian_singular_values.assign(sv.data(), sv.data() + sv.size());
    const double largest = sv.size() > 0 ? sv(0) : 0.0;
    if (largest == 0.0) {
        out.hessian_corank = n;
    } else {
        for (int i = 0; i < sv.size(); ++i) {
            if (sv(i) < config.corank_cutoff * largest) ++out.hessian_corank;
        }
    }
    return out;
}

std::vector<std::array<Complex, 2>> lift_to_projective(const Chart& chart, std::span<const Complex> point) {
    std::vector<std::array<Complex, 2>> out(point.size());
    for (int j = 1; j <= chart.num_factors; ++j) {
        const int fixed = chart.fixed_coordinate(j);
        std::array<Complex, 2> pair;
        pair[fixed] = 1.0;
        pair[1 - fixed] = point[j - 1];
        const double scale = std::max(std::abs(pair[0]), std::abs(pair[1]));
        pair[0] /= scale;
        pair[1] /= scale;
        out[j - 1] = pair;
    }
    return out;
}

double projective_distance(std::span<const std::array<Complex, 2>> p, std::span<const std::array<Complex, 2>> q) {
    double worst = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const double cross = std::abs(p[j][0] * q[j][1] - p[j][1] * q[j][0]);
        const double np = std::hypot(std::abs(p[j][0]), std::abs(p[j][1]));
        const double nq = std::hypot(std::abs(q[j][0]), std::abs(q[j][1]));
        worst = std::max(worst, cross / (np * nq));
    }
    return worst;
}

std::string_view to_string(SectionVerdict verdict) {
    switch (verdict) {
        case SectionVerdict::Smooth:
            return "Smooth";
        case SectionVerdict::IsolatedSingular:
            return "IsolatedSingular";
        case SectionVerdict::NonIsolatedCandidate:
            return "NonIsolatedCandidate";
        case SectionVerdict::Inconclusive:
            break;
    }
    return "Inconclusive";
}

SectionReport analyze_section(const StateVector& state, const SectionConfig& config) {
    config.validate();
    const int n = state.num_qubits();
    if (n < 1 || n > kMaxSectionQubits) {
        throw std::invalid_argument("analyze_section: qubit count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(kMaxSectionQubits) + "]");
    }
    SectionReport report;
    report.seed = config.seed;
    std::vector<MergedPoint> merged;
    std::vector<std::vector<std::array<Complex, 2>>> near_misses;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const Chart chart{n, mask};
        const SectionPolynomial poly = section_polynomial(state, chart);
        CriticalPointSearch search = find_critical_points(poly, config, mask);
        report.charts.push_back({chart, search.diagnostics});
        for (const auto& p : search.points) {
            auto projective = lift_to_projective(chart, p);
            auto it = std::find_if(merged.begin(), merged.end(), [&](const MergedPoint& m) {
                return projective_distance(m.point.projective, projective) <= config.merge_tolerance;
            });
            if (it != merged.end()) {
                it->charts.insert(mask);
                continue;
            }
            MergedPoint m{classify_point(poly, p, config), {mask}};
            if (m.point.hessian_corank > 0 && continues_along_kernel(poly, p, config)) ++report.kernel_continuations;
            m.point.chart = chart;
            m.point.projective = std::move(projective);
            merged.push_back(std::move(m));
        }
        for (const auto& p : search.near_misses) near_misses.push_back(lift_to_projective(chart, p));
    }
    for (auto& m : merged) {
        m.point.charts_seen = static_cast<int>(m.charts.size());
        report.points.push_back(std::move(m.point));
    }
    report.corank_counts.assign(n + 1, 0);
    for (const auto& p : report.points) ++report.corank_counts[p.hessian_corank];

    std::vector<std::vector<std::array<Complex, 2>>> unresolved;
    for (const auto& q : near_misses) {
        const auto close = [&](const auto& p) { return projective_distance(p, q) <= config.cluster_radius; };
        const bool explained = std::any_of(report.points.begin(), report.points.end(),
                                           [&](const SingularPoint& p) { return close(p.projective); });
        if (!explained && std::none_of(unresolved.begin(), unresolved.end(), close)) unresolved.push_back(q);
    }
    report.unresolved_near_misses = static_cast<int>(unresolved.size());

    bool clustered = report.kernel_continuations > 0 ||
                     static_cast<int>(report.points.size()) > config.max_isolated_points;
    for (std::size_t i = 0; i < report.points.size() && !clustered; ++i) {
        for (std::size_t j = i + 1; j < report.points.size() && !clustered; ++j) {
            clustered = projective_distance(report.points[i].projective, report.points[j].projective) <=
                        config.cluster_radius;
        }
    }
    if (clustered) {
        report.verdict = SectionVerdict::NonIsolatedCandidate;
    } else if (report.unresolved_near_misses > 0) {
        report.verdict = SectionVerdict::Inconclusive;
    } else {
        report.verdict = report.points.empty() ? SectionVerdict::Smooth : SectionVerdict::IsolatedSingular;
    }
    return report;
}

SectionReport confirm_section(const StateVector& state, const SectionConfig& config, int seeds) {
    if (seeds < 1) throw std::invalid_argument("confirm_section: need at least one seed");
    SectionReport first = analyze_section(state, config);
    bool agree = true;
    for (int s = 1; s < seeds; ++s) {
        SectionConfig other = config;
        other.seed = split_seed(config.seed, static_cast<std::uint64_t>(s));
        agree = same_point_sets(first, analyze_section(state, other), config.merge_tolerance) && agree;
    }
    first.count_confirmed = agree;
    return first;
}

std::vector<SurveyRow> kuniform_section_survey(int num_qubits, int k_min, int k_max, const SectionConfig& config) {
    if (k_min < 1 || k_max > num_qubits || k_min > k_max) {
        throw std::invalid_argument("kuniform_section_survey: edge sizes out of range");
    }
    std::vector<SurveyRow> rows;
    for (int k = k_min; k <= k_max; ++k) {
        rows.push_back({num_qubits, k, analyze_section(build_hypergraph_state(k_uniform(num_qubits, k)), config)});
    }
    return rows;
}

}  // namespace hypermermin
