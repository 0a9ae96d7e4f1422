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

// Acceptance checks. Prints detail lines, then one "CRITERION n: PASS|FAIL"
// line per criterion; exits nonzero if any criterion fails.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypermermin/catalog.h"
#include "hypermermin/circuits.h"
#include "hypermermin/invariants.h"
#include "hypermermin/io.h"
#include "hypermermin/mermin.h"
#include "hypermermin/optimize.h"
#include "hypermermin/simulator.h"
#include "hypermermin/singular.h"
#include "oracles.h"

namespace hm = hypermermin;
using hm::Complex;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
    int id;
    const char* title;
    bool ok = true;
    std::vector<std::string> failures;

    void check(bool condition, const std::string& what) {
        std::printf("  [%s] %s\n", condition ? "ok" : "FAIL", what.c_str());
        if (!condition) {
            ok = false;
            failures.push_back(what);
        }
    }
};

std::string format(const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

hm::StateVector catalog_state(std::string_view name) {
    return hm::catalog_find(hm::default_catalog(), name).state();
}

// Every optimizer result seen, for the quantum-bound property.
struct BoundRecord {
    std::string label;
    int n;
    bool tilde;
    hm::MuResult result;
};
std::vector<BoundRecord> g_optimizer_outputs;

hm::MuResult run_mu(const std::string& label, const hm::StateVector& psi, const hm::OptimizationConfig& config,
                    bool tilde) {
    auto r = tilde ? hm::optimize_mu_tilde(psi, config) : hm::optimize_mu(psi, config);
    g_optimizer_outputs.push_back({label, psi.num_qubits(), tilde, r});
    return r;
}

hm::Hypergraph random_hypergraph(int n, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<std::vector<int>> edges;
    for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
        if (!keep(rng)) continue;
        std::vector<int> e;
        for (int j = 1; j <= n; ++j) {
            if (subset >> (j - 1) & 1) e.push_back(j);
        }
        edges.push_back(e);
    }
    return hm::Hypergraph(n, edges);
}

std::vector<std::vector<int>> sorted_edges(const hm::Hypergraph& g) {
    auto e = g.edges();
    for (auto& x : e) std::sort(x.begin(), x.end());
    std::sort(e.begin(), e.end());
    return e;
}

void criterion_1(Criterion& c) {
    const std::pair<const char*, double> rows[] = {
        {"G7", 1.50000}, {"G17", 1.43329}, {"G24", 1.71310}, {"S4", 2.82843}, {"LC4", 1.41421}};
    for (const auto& [name, target] : rows) {
        const auto psi = catalog_state(name);
        const auto start = Clock::now();
        for (std::uint64_t seed : {1, 2, 3}) {
            hm::OptimizationConfig config;
            config.seed = seed;
            const auto r = run_mu(std::string("mu ") + name, psi, config, false);
            c.check(r.value >= target - 1e-2,
                    format("mu(%s) seed %llu = %.6f, target %.5f (reach within 1e-2)", name, (unsigned long long)seed,
                           r.value, target));
        }
        const double t = seconds_since(start);
        c.check(t <= 30.0, format("mu(%s) three seeds took %.2f s (limit 30 s)", name, t));
    }
}

void criterion_2(Criterion& c) {
    const std::pair<const char*, double> rows[] = {{"G7", 2.28571}, {"G17", 2.07172}, {"S4", 8.0}, {"LC4", 2.0}};
    for (const auto& [name, target] : rows) {
        const auto psi = catalog_state(name);
        for (std::uint64_t seed : {1, 2, 3}) {
            hm::OptimizationConfig config;
            config.seed = seed;
            const auto r = run_mu(std::string("mu_tilde ") + name, psi, config, true);
            c.check(r.value >= target - 2e-2, format("mu_tilde(%s) seed %llu = %.6f, target %.5f (reach within 2e-2)",
                                                     name, (unsigned long long)seed, r.value, target));
        }
    }
}

void criterion_3(Criterion& c) {
    struct Row {
        int n, k;
        double target;
    };
    const Row rows[] = {{5, 2, 4.0},      {5, 3, 2.45751},  {5, 4, 2.02319},  {5, 5, 1.29200}, {6, 2, 5.65685},
                        {6, 3, 2.85947}, {6, 4, 3.29038}, {6, 5, 3.20848}, {6, 6, 1.14326}};
    const auto start = Clock::now();
    for (const auto& row : rows) {
        hm::OptimizationConfig config;
        double tolerance = 1e-2;
        if (row.n == 6) {
            config.iterations = 10000;
            config.step_decay = 0.9995;
            if (row.k != 2) tolerance = 2e-2;
        }
        const auto psi = hm::build_hypergraph_state(hm::k_uniform(row.n, row.k));
        const auto r = run_mu(format("mu k-uniform (%d,%d)", row.n, row.k), psi, config, false);
        const double bound = hm::mermin_quantum_bound(row.n);
        c.check(r.value >= row.target - tolerance && r.value <= bound + 1e-9,
                format("mu(n=%d, k=%d) = %.6f, target %.5f (reach within %.0e), bound %.5f", row.n, row.k, r.value,
                       row.target, tolerance, bound));
    }
    const double t = seconds_since(start);
    c.check(t <= 300.0, format("k-uniform rows took %.1f s (limit 300 s)", t));
}

void criterion_4(Criterion& c) {
    const auto g24 = hm::evaluate_hdet_2222(catalog_state("G24"));
    c.check(!g24.is_zero, format("HDet(G24) = %.6e (magnitude %.3g) is nonzero", g24.value.real(), g24.magnitude));
    std::vector<Complex> zero(16, 0.0);
    zero[0] = 1.0;
    const std::pair<const char*, hm::StateVector> vanishing[] = {
        {"G17", catalog_state("G17")}, {"G7", catalog_state("G7")}, {"|0000>", hm::StateVector(4, zero)}};
    for (const auto& [name, psi] : vanishing) {
        const auto h = hm::evaluate_hdet_2222(psi);
        c.check(h.is_zero, format("HDet(%s) = %.3e, |HDet| <= 1e-10 * %.3g", name, std::abs(h.value), h.magnitude));
    }

    std::mt19937_64 rng(4);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto psi = oracle::random_amplitudes(4, rng);
        std::vector<oracle::Mat2> g;
        for (int j = 0; j < 4; ++j) g.push_back(oracle::random_sl2(rng));
        const Complex before = hm::evaluate_hdet_2222(psi).value;
        const Complex after = hm::evaluate_hdet_2222(oracle::apply_local(g, psi)).value;
        worst = std::max(worst, std::abs(after - before) / std::abs(before));
    }
    c.check(worst <= 1e-8, format("SL invariance over 100 random transforms: max relative change %.2e", worst));

    std::normal_distribution<double> gauss;
    worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        auto psi = oracle::random_amplitudes(4, rng);
        const Complex lambda = 1.0 + 0.5 * Complex(gauss(rng), gauss(rng));
        const Complex before = hm::evaluate_hdet_2222(psi).value;
        for (auto& a : psi) a *= lambda;
        const Complex expected = std::pow(lambda, 24) * before;
        worst = std::max(worst, std::abs(hm::evaluate_hdet_2222(psi).value - expected) / std::abs(expected));
    }
    c.check(worst <= 1e-8, format("degree-24 scaling over 100 cases: max relative error %.2e", worst));
}

void criterion_5(Criterion& c) {
    const auto start = Clock::now();
    const hm::SectionConfig config;

    const auto g7 = hm::confirm_section(catalog_state("G7"), config);
    const int g7_corank0 = g7.corank_counts.empty() ? 0 : g7.corank_counts[0];
    c.check(g7.points.size() == 4 && g7_corank0 == 4,
            format("G7: %zu merged points (%d corank 0), expected exactly 4 corank-0 points", g7.points.size(),
                   g7_corank0));
    const double r2 = std::sqrt(2.0);
    const std::array<std::array<double, 4>, 3> chart_points = {
        {{1 + r2, 0, -1, 1 + r2}, {1 - r2, 0, -1, 1 - r2}, {1, 1, 1, 1}}};
    for (const auto& expected : chart_points) {
        double best = INFINITY;
        for (const auto& p : g7.points) {
            double diff = 0.0;
            for (int j = 0; j < 4; ++j) {
                const auto& x = p.projective[j];
                if (std::abs(x[0]) < 1e-12) {
                    diff = INFINITY;
                    break;
                }
                diff = std::max(diff, std::abs(x[1] / x[0] - expected[j]));
            }
            best = std::min(best, diff);
        }
        c.check(best <= 1e-8, format("G7 chart point (%.6f, %.0f, %.0f, %.6f): nearest found at distance %.2e",
                                     expected[0], expected[1], expected[2], expected[3], best));
    }

    const auto g24 = hm::analyze_section(catalog_state("G24"), config);
    c.check(g24.verdict == hm::SectionVerdict::Smooth,
            format("G24: verdict %s with %d starts per chart", std::string(hm::to_string(g24.verdict)).c_str(),
                   config.starts_per_chart));

    const auto g17 = hm::confirm_section(catalog_state("G17"), config, 3);
    const int g17_corank0 = g17.corank_counts.empty() ? 0 : g17.corank_counts[0];
    c.check(g17.points.size() == 6 && g17_corank0 == 6 && g17.count_confirmed,
            format("G17: %zu points (%d corank 0), confirmed across 3 seeds: %s", g17.points.size(), g17_corank0,
                   g17.count_confirmed ? "yes" : "no"));

    const auto rows = hm::kuniform_section_survey(5, 2, 5, config);
    const hm::SectionVerdict expected[] = {hm::SectionVerdict::NonIsolatedCandidate, hm::SectionVerdict::Smooth,
                                           hm::SectionVerdict::IsolatedSingular,
                                           hm::SectionVerdict::NonIsolatedCandidate};
    for (std::size_t i = 0; i < rows.size() && i < 4; ++i) {
        const auto& r = rows[i].report;
        bool ok = r.verdict == expected[i];
        if (expected[i] == hm::SectionVerdict::IsolatedSingular) {
            const int corank0 = r.corank_counts.empty() ? 0 : r.corank_counts[0];
            ok = ok && corank0 == static_cast<int>(r.points.size());
        }
        c.check(ok, format("n=5 k=%d: %s (%zu points), expected %s", rows[i].edge_size,
                           std::string(hm::to_string(r.verdict)).c_str(), r.points.size(),
                           std::string(hm::to_string(expected[i])).c_str()));
    }
    c.check(rows.size() == 4, format("n=5 survey produced %zu rows", rows.size()));
    const double t = seconds_since(start);
    c.check(t <= 600.0, format("singularity analysis took %.1f s (limit 600 s)", t));
}

void criterion_6(Criterion& c) {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> size(1, 5);
    int tested = 0, failures = 0;
    double worst_amp = 0.0, worst_purity = 0.0;
    while (tested < 200) {
        const int n = size(rng);
        const auto graph = random_hypergraph(n, rng, 0.25);
        if (!hm::is_connected(graph)) continue;
        ++tested;
        const auto circuit = hm::hypergraph_circuit(graph);
        const auto full = hm::simulate(circuit);
        const auto check = hm::check_ancillas(full, circuit.num_ancillas());
        worst_purity = std::max(worst_purity, std::abs(check.purity - 1.0));
        const auto main = hm::main_register_state(full, circuit.num_ancillas(), 1e-10);
        const auto direct = hm::build_hypergraph_state(graph);
        double diff = 0.0;
        for (std::size_t i = 0; i < direct.dimension(); ++i) diff = std::max(diff, std::abs(main[i] - direct[i]));
        worst_amp = std::max(worst_amp, diff);
        if (diff > 1e-12 || std::abs(check.purity - 1.0) > 1e-10) ++failures;
    }
    c.check(failures == 0, format("%d random connected hypergraphs (n <= 5): %d mismatches, max amplitude error "
                                  "%.2e, max purity defect %.2e",
                                  tested, failures, worst_amp, worst_purity));
}

void criterion_7(Criterion& c) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> size(1, 4);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const int n = size(rng);
        const auto psi = oracle::random_amplitudes(n, rng);
        std::vector<hm::BlochVector> dirs;
        std::vector<hm::Matrix2> rotations;
        for (int q = 0; q < n; ++q) {
            dirs.push_back(oracle::random_direction(rng));
            rotations.push_back(hm::u3_matrix(hm::basis_change_u3(dirs.back())));
        }
        // Rotate each qubit, then read the Z parity.
        std::vector<Complex> rotated = psi;
        for (int q = 0; q < n; ++q) hm::apply_on_bit_inplace(rotations[q], n - 1 - q, rotated);
        double z_parity = 0.0;
        for (std::size_t i = 0; i < rotated.size(); ++i) {
            z_parity += (std::popcount(i) % 2 ? -1.0 : 1.0) * std::norm(rotated[i]);
        }
        oracle::Dense op = oracle::observable(dirs[0]);
        for (int q = 1; q < n; ++q) op = oracle::kron(op, oracle::observable(dirs[q]));
        const double direct = oracle::expectation(op, psi).real();
        worst = std::max(worst, std::abs(z_parity - direct));
    }
    c.check(worst <= 1e-12, format("1000 random (state, directions) pairs: max |rotated Z - direct| = %.2e", worst));
}

void criterion_8(Criterion& c) {
    const auto family = hm::family_from_json(
        hm::read_json_file(std::filesystem::path(HYPERMERMIN_DATA_DIR) / "sec53_family.json"));
    const auto graph = hm::catalog_find(hm::default_catalog(), "CCZ3").resolved_hypergraph();
    const double exact = hm::estimate_mermin(graph, family, 0, 0).value;
    c.check(std::abs(exact - 1.52) <= 0.02, format("exact <M_3> on CCZ3 = %.6f, expected 1.52 +- 0.02", exact));
    int within = 0;
    double worst = 0.0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const double v = hm::estimate_mermin(graph, family, 8192, seed).value;
        worst = std::max(worst, std::abs(v - exact));
        within += std::abs(v - exact) <= 0.1;
    }
    c.check(within >= 99, format("8192-shot estimates within 0.1 of exact: %d/100 (max deviation %.4f)", within, worst));
}

void criterion_9(Criterion& c) {
    int violations = 0;
    for (const auto& rec : g_optimizer_outputs) {
        const double bound = hm::mermin_quantum_bound(rec.n);
        const double limit = rec.tilde ? 2.0 * bound * bound : bound;
        bool ok = rec.result.value <= limit + 1e-9;
        for (double v : rec.result.trace) ok = ok && v <= limit + 1e-9;
        if (!ok) {
            ++violations;
            std::printf("  bound exceeded: %s value %.9f limit %.9f\n", rec.label.c_str(), rec.result.value, limit);
        }
    }
    c.check(violations == 0, format("quantum bound respected by %zu optimizer outputs (%d violations)",
                                    g_optimizer_outputs.size(), violations));

    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> size(1, 5);
    int anf_failures = 0;
    for (int t = 0; t < 500; ++t) {
        const auto graph = random_hypergraph(size(rng), rng, 0.3);
        if (sorted_edges(hm::infer_hypergraph(hm::build_hypergraph_state(graph))) != sorted_edges(graph)) {
            ++anf_failures;
        }
    }
    c.check(anf_failures == 0, format("ANF round trip over 500 random hypergraphs (n <= 5): %d failures", anf_failures));

    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const int n = 1 + t % 4;
        const auto psi = oracle::random_state(n, rng);
        const auto family = oracle::random_family(n, rng);
        const auto [m, mp] = oracle::dense_mermin(family);
        worst = std::max(worst, std::abs(hm::mermin_expectation(psi, family, false) -
                                         oracle::expectation(m, psi.amplitudes()).real()));
        worst = std::max(worst, std::abs(hm::mermin_expectation(psi, family, true) -
                                         oracle::expectation(mp, psi.amplitudes()).real()));
    }
    c.check(worst <= 1e-10, format("expansion vs dense operator, 200 cases (n <= 4): max difference %.2e", worst));

    const auto g7 = catalog_state("G7");
    const double reference = run_mu("mu G7 reference", g7, {}, false).value;
    double spread = 0.0;
    for (int t = 0; t < 20; ++t) {
        std::vector<oracle::Mat2> u;
        for (int j = 0; j < 4; ++j) u.push_back(oracle::random_unitary(rng));
        const hm::StateVector twirled(4, oracle::apply_local(u, g7.amplitudes()));
        spread = std::max(spread, std::abs(run_mu("mu G7 twirl", twirled, {}, false).value - reference));
    }
    c.check(spread <= 2e-2,
            format("mu over 20 local-unitary twirls of G7: max deviation %.4f from %.5f", spread, reference));
}

}  // namespace

int main() {
    Criterion criteria[] = {
        {1, "mu reproduction (catalog rows)", true, {}},
        {2, "mu_tilde reproduction", true, {}},
        {3, "k-uniform mu (n <= 6)", true, {}},
        {4, "hyperdeterminant", true, {}},
        {5, "singularity analysis", true, {}},
        {6, "circuit equivalence", true, {}},
        {7, "measurement lemma", true, {}},
        {8, "CCZ3 case study", true, {}},
        {9, "property suites", true, {}},
    };
    const std::function<void(Criterion&)> runners[] = {criterion_1, criterion_2, criterion_3,
                                                       criterion_4, criterion_5, criterion_6,
                                                       criterion_7, criterion_8, criterion_9};
    for (std::size_t i = 0; i < std::size(criteria); ++i) {
        auto& c = criteria[i];
        std::printf("criterion %d: %s\n", c.id, c.title);
        std::fflush(stdout);
        const auto start = Clock::now();
        try {
            runners[i](c);
        } catch (const std::exception& e) {
            c.check(false, std::string("exception: ") + e.what());
        }
        std::printf("  (%.1f s)\n", seconds_since(start));
        std::fflush(stdout);
    }
    bool all = true;
    std::printf("\n");
    for (const auto& c : criteria) {
        std::string summary = c.title;
        if (!c.ok) summary += ": " + c.failures.front();
        std::printf("CRITERION %d: %s %s\n", c.id, c.ok ? "PASS" : "FAIL", summary.c_str());
        all = all && c.ok;
    }
    return all ? 0 : 1;
}
