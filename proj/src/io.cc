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

#include "hypermermin/io.h"

#include <fstream>
#include <stdexcept>

namespace hypermermin {
namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json directions_json(const std::vector<BlochVector>& v) {
    Json out = Json::array();
    for (const auto& d : v) out.push_back({d.x(), d.y(), d.z()});
    return out;
}

std::vector<BlochVector> directions_from_json(const Json& j) {
    std::vector<BlochVector> out;
    for (const auto& d : j) {
        if (!d.is_array() || d.size() != 3) throw std::invalid_argument("expected [x, y, z]");
        out.push_back(BlochVector::from_components(d[0].get<double>(), d[1].get<double>(), d[2].get<double>()));
    }
    return out;
}

Json point_json(const SingularPoint& p) {
    Json affine = Json::array();
    for (const auto& z : p.affine) affine.push_back(complex_json(z));
    Json projective = Json::array();
    for (const auto& pair : p.projective) projective.push_back({complex_json(pair[0]), complex_json(pair[1])});
    return {{"chart", p.chart.mask},
            {"affine", affine},
            {"projective", projective},
            {"residual", p.residual},
            {"corank", p.hessian_corank},
            {"hessian_singular_values", p.hessian_singular_values},
            {"charts_seen", p.charts_seen}};
}

GateKind gate_kind_from_string(const std::string& s) {
    for (GateKind k : {GateKind::H, GateKind::CZ, GateKind::Toffoli, GateKind::U3, GateKind::Measure}) {
        if (s == to_string(k)) return k;
    }
    throw std::invalid_argument("unknown gate kind '" + s + "'");
}

}  // namespace

Json to_json(const Hypergraph& graph) { return {{"n", graph.num_vertices()}, {"edges", graph.edges()}}; }

Hypergraph hypergraph_from_json(const Json& j) {
    return Hypergraph(j.at("n").get<int>(), j.at("edges").get<std::vector<std::vector<int>>>());
}

Json to_json(const StateVector& state) {
    Json amps = Json::array();
    for (const auto& a : state.amplitudes()) amps.push_back(complex_json(a));
    return {{"n", state.num_qubits()}, {"amps", amps}};
}

StateVector state_from_json(const Json& j) {
    std::vector<Complex> amps;
    for (const auto& a : j.at("amps")) amps.push_back(complex_from_json(a));
    return StateVector(j.at("n").get<int>(), std::move(amps));
}

Json to_json(const ObservableFamily& family) {
    return {{"n", family.num_qubits()}, {"a", directions_json(family.a)}, {"a_prime", directions_json(family.a_prime)}};
}

ObservableFamily family_from_json(const Json& j) {
    ObservableFamily family(directions_from_json(j.at("a")), directions_from_json(j.at("a_prime")));
    if (j.contains("n") && j.at("n").get<int>() != family.num_qubits()) {
        throw std::invalid_argument("observable family: n does not match the direction count");
    }
    return family;
}

Json to_json(const MuResult& result) {
    return {{"value", result.value}, {"family", to_json(result.family)}, {"trace", result.trace}, {"seed", result.seed}};
}

Json to_json(const SectionReport& report) {
    Json points = Json::array();
    for (const auto& p : report.points) points.push_back(point_json(p));
    Json charts = Json::array();
    for (const auto& c : report.charts) {
        charts.push_back({{"chart", c.chart.mask},
                          {"starts", c.newton.starts},
                          {"converged", c.newton.converged},
                          {"accepted", c.newton.accepted},
                          {"near_misses", c.newton.near_misses},
                          {"diverged", c.newton.diverged}});
    }
    return {{"verdict", std::string(to_string(report.verdict))},
            {"points", points},
            {"corank_counts", report.corank_counts},
            {"unresolved_near_misses", report.unresolved_near_misses},
            {"kernel_continuations", report.kernel_continuations},
            {"charts", charts},
            {"seed", report.seed},
            {"count_confirmed", report.count_confirmed}};
}

Json to_json(const StratumReport& report) {
    Json out = {{"hdet", complex_json(report.hdet_value)},
                {"hdet_magnitude", report.hdet_magnitude},
                {"hdet_zero", report.hdet_zero},
                {"stratum", std::string(to_string(report.stratum))},
                {"points", Json::array()},
                {"diagnostics", report.diagnostics}};
    if (report.evidence) {
        for (const auto& p : report.evidence->points) out["points"].push_back(point_json(p));
        out["evidence"] = to_json(*report.evidence);
    }
    return out;
}

Json to_json(const Circuit& circuit) {
    Json gates = Json::array();
    for (const auto& g : circuit.gates()) {
        Json gj = {{"kind", std::string(to_string(g.kind))}, {"qubits", g.qubits}};
        if (g.kind == GateKind::U3) gj["params"] = g.params;
        if (g.kind == GateKind::Measure) gj["cbit"] = g.cbit;
        gates.push_back(gj);
    }
    return {{"qubits", circuit.num_main_qubits()}, {"ancillas", circuit.num_ancillas()}, {"gates", gates}};
}

Circuit circuit_from_json(const Json& j) {
    Circuit circuit(j.at("qubits").get<int>(), j.value("ancillas", 0));
    for (const auto& gj : j.at("gates")) {
        Gate g;
        g.kind = gate_kind_from_string(gj.at("kind").get<std::string>());
        g.qubits = gj.at("qubits").get<std::vector<int>>();
        if (gj.contains("params")) g.params = gj.at("params").get<std::array<double, 3>>();
        if (gj.contains("cbit")) g.cbit = gj.at("cbit").get<int>();
        circuit.add(std::move(g));
    }
    return circuit;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << "\n";
}

}  // namespace hypermermin
