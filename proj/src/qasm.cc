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

#include "hypermermin/qasm.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <regex>
#include <sstream>
#include <vector>

namespace hypermermin {
namespace {

std::string format_angle(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

struct Statement {
    std::string text;
    int line;
};

std::vector<Statement> split_statements(std::string_view text) {
    std::vector<Statement> out;
    std::string current;
    int line = 1;
    int start_line = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i < text.size()) ++line;
            continue;
        }
        if (ch == '\n') ++line;
        if (ch == ';') {
            out.push_back({trim(current), start_line});
            current.clear();
            continue;
        }
        if (trim(current).empty() && !std::isspace(static_cast<unsigned char>(ch))) start_line = line;
        current += ch;
    }
    if (!trim(current).empty()) throw QasmError(start_line, "missing ';'");
    return out;
}

double parse_angle(const std::string& token, int line) {
    static const std::regex pi_form(R"((-?)pi(?:/([0-9.eE+-]+))?)");
    const std::string t = trim(token);
    std::smatch m;
    if (std::regex_match(t, m, pi_form)) {
        double v = std::numbers::pi;
        if (m[2].matched) v /= std::stod(m[2].str());
        return m[1].length() ? -v : v;
    }
    double v = 0.0;
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (ec != std::errc() || ptr != end) throw QasmError(line, "bad angle '" + t + "'");
    return v;
}

}  // namespace

QasmError::QasmError(int line, const std::string& message)
    : std::runtime_error("qasm line " + std::to_string(line) + ": " + message), line_(line) {}

std::string emit_qasm(const Circuit& circuit) {
    std::ostringstream out;
    const int n = circuit.num_main_qubits();
    const auto reg = [n](int q) {
        return q < n ? "q[" + std::to_string(q) + "]" : "anc[" + std::to_string(q - n) + "]";
    };
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << n << "];\n";
    if (circuit.num_ancillas() > 0) out << "qreg anc[" << circuit.num_ancillas() << "];\n";
    if (circuit.num_cbits() > 0) out << "creg c[" << circuit.num_cbits() << "];\n";
    for (const auto& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::U3:
                out << "u3(" << format_angle(g.params[0]) << "," << format_angle(g.params[1]) << ","
                    << format_angle(g.params[2]) << ") " << reg(g.qubits[0]) << ";\n";
                break;
            case GateKind::Measure:
                out << "measure " << reg(g.qubits[0]) << " -> c[" << g.cbit << "];\n";
                break;
            default:
                out << to_string(g.kind) << " ";
                for (std::size_t i = 0; i < g.qubits.size(); ++i) out << (i ? "," : "") << reg(g.qubits[i]);
                out << ";\n";
        }
    }
    return out.str();
}

Circuit parse_qasm(std::string_view text) {
    static const std::regex header(R"(OPENQASM\s+2\.0)");
    static const std::regex include(R"(include\s+"qelib1\.inc")");
    static const std::regex qreg(R"(qreg\s+(q|anc)\s*\[\s*(\d+)\s*\])");
    static const std::regex creg(R"(creg\s+c\s*\[\s*(\d+)\s*\])");
    static const std::regex gate(R"((h|cz|ccx|u3)\s*(?:\(([^)]*)\))?\s+(.+))");
    static const std::regex measure(R"(measure\s+(\S+)\s*->\s*c\s*\[\s*(\d+)\s*\])");
    static const std::regex operand(R"((q|anc)\s*\[\s*(\d+)\s*\])");

    const auto statements = split_statements(text);
    std::optional<int> main_qubits;
    int ancillas = 0;
    int cbits = 0;
    std::optional<Circuit> circuit;
    bool saw_header = false;

    const auto ensure_circuit = [&](int line) -> Circuit& {
        if (!circuit) {
            if (!main_qubits) throw QasmError(line, "gate before 'qreg q'");
            circuit.emplace(*main_qubits, ancillas);
        }
        return *circuit;
    };
    const auto resolve = [&](const std::string& token, int line) {
        std::smatch m;
        const std::string t = trim(token);
        if (!std::regex_match(t, m, operand)) throw QasmError(line, "bad operand '" + t + "'");
        const int index = std::stoi(m[2].str());
        if (m[1] == "q") {
            if (index >= *main_qubits) throw QasmError(line, "q index out of range");
            return index;
        }
        if (index >= ancillas) throw QasmError(line, "anc index out of range");
        return *main_qubits + index;
    };

    for (const auto& [s, line] : statements) {
        std::smatch m;
        if (s.empty()) continue;
        if (!saw_header) {
            if (!std::regex_match(s, header)) throw QasmError(line, "expected 'OPENQASM 2.0'");
            saw_header = true;
        } else if (std::regex_match(s, include)) {
            continue;
        } else if (std::regex_match(s, m, qreg)) {
            if (circuit) throw QasmError(line, "register declared after gates");
            const int size = std::stoi(m[2].str());
            if (m[1] == "q") {
                if (main_qubits) throw QasmError(line, "duplicate qreg q");
                main_qubits = size;
            } else {
                ancillas = size;
            }
        } else if (std::regex_match(s, m, creg)) {
            cbits = std::stoi(m[1].str());
        } else if (std::regex_match(s, m, measure)) {
            Circuit& c = ensure_circuit(line);
            const int cbit = std::stoi(m[2].str());
            if (cbit >= cbits) throw QasmError(line, "c index out of range");
            try {
                c.add(Gate::measure(resolve(m[1].str(), line), cbit));
            } catch (const std::invalid_argument& e) {
                throw QasmError(line, e.what());
            }
        } else if (std::regex_match(s, m, gate)) {
            Circuit& c = ensure_circuit(line);
            std::vector<int> qubits;
            std::stringstream ops(m[3].str());
            for (std::string tok; std::getline(ops, tok, ',');) qubits.push_back(resolve(tok, line));
            const std::string name = m[1].str();
            const bool has_params = m[2].matched;
            if ((name == "u3") != has_params) throw QasmError(line, "parameter list mismatch for " + name);
            Gate g;
            if (name == "h") g.kind = GateKind::H;
            if (name == "cz") g.kind = GateKind::CZ;
            if (name == "ccx") g.kind = GateKind::Toffoli;
            if (name == "u3") {
                g.kind = GateKind::U3;
                std::stringstream ps(m[2].str());
                std::vector<double> params;
                for (std::string tok; std::getline(ps, tok, ',');) params.push_back(parse_angle(tok, line));
                if (params.size() != 3) throw QasmError(line, "u3 takes three angles");
                g.params = {params[0], params[1], params[2]};
            }
            g.qubits = std::move(qubits);
            try {
                c.add(std::move(g));
            } catch (const std::invalid_argument& e) {
                throw QasmError(line, e.what());
            }
        } else {
            throw QasmError(line, "unsupported statement '" + s + "'");
        }
    }
    if (!saw_header) throw QasmError(1, "empty program");
    if (!main_qubits) throw QasmError(1, "missing 'qreg q'");
    return circuit ? *circuit : Circuit(*main_qubits, ancillas);
}

}  // namespace hypermermin
