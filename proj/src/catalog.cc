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

#include "hypermermin/catalog.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hypermermin {

namespace internal {
std::string_view default_catalog_text();
}  // namespace internal

namespace {

using nlohmann::json;

int log2_exact(std::size_t size) {
    int n = 0;
    while ((std::size_t{1} << n) < size) ++n;
    if ((std::size_t{1} << n) != size || n == 0) return -1;
    return n;
}

CatalogEntry entry_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("entry is not a JSON object");
    CatalogEntry entry;
    if (!doc.contains("name") || !doc["name"].is_string()) {
        throw std::invalid_argument("entry needs a string 'name'");
    }
    entry.name = doc["name"].get<std::string>();
    for (const auto& [key, value] : doc.items()) {
        if (key != "name" && key != "hypergraph" && key != "signs" && key != "expected") {
            throw std::invalid_argument("unknown field '" + key + "'");
        }
    }
    if (doc.contains("hypergraph")) {
        const auto& hg = doc["hypergraph"];
        entry.hypergraph = Hypergraph(hg.at("n").get<int>(),
                                      hg.at("edges").get<std::vector<std::vector<int>>>());
    }
    if (doc.contains("signs")) {
        auto signs = doc["signs"].get<std::vector<int>>();
        if (log2_exact(signs.size()) < 0) {
            throw std::invalid_argument("'signs' length " + std::to_string(signs.size()) +
                                        " is not a power of two ≥ 2");
        }
        for (int s : signs) {
            if (s != 1 && s != -1) throw std::invalid_argument("'signs' entries must be +1 or -1");
        }
        entry.signs = std::move(signs);
    }
    if (!entry.hypergraph && !entry.signs) {
        throw std::invalid_argument("entry '" + entry.name + "' needs 'hypergraph' or 'signs'");
    }
    if (entry.hypergraph && entry.signs) {
        if (hypergraph_signs(*entry.hypergraph) != *entry.signs) {
            throw std::invalid_argument("entry '" + entry.name +
                                        "': hypergraph and sign vector disagree");
        }
    }
    if (doc.contains("expected")) {
        const auto& ex = doc["expected"];
        if (ex.contains("mu")) entry.expected.mu = ex["mu"].get<double>();
        if (ex.contains("mu_tilde")) entry.expected.mu_tilde = ex["mu_tilde"].get<double>();
        if (ex.contains("singular")) entry.expected.singular = ex["singular"].get<std::string>();
    }
    return entry;
}

}  // namespace

Hypergraph CatalogEntry::resolved_hypergraph() const {
    if (hypergraph) return *hypergraph;
    const int n = log2_exact(signs->size());
    const double amp = std::pow(2.0, -0.5 * n);
    std::vector<Complex> amps(signs->size());
    for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = Complex((*signs)[i] * amp, 0.0);
    return infer_hypergraph(StateVector(n, std::move(amps)));
}

StateVector CatalogEntry::state() const { return build_hypergraph_state(resolved_hypergraph()); }

int CatalogEntry::num_qubits() const {
    return hypergraph ? hypergraph->num_vertices() : log2_exact(signs->size());
}

CatalogError::CatalogError(std::string source, int line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

std::vector<CatalogEntry> catalog_parse(std::string_view text, std::string_view source) {
    std::vector<CatalogEntry> entries;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            auto entry = entry_from_json(json::parse(line));
            for (const auto& existing : entries) {
                if (existing.name == entry.name) {
                    throw std::invalid_argument("duplicate entry name '" + entry.name + "'");
                }
            }
            entries.push_back(std::move(entry));
        } catch (const json::exception& e) {
            throw CatalogError(std::string(source), line_number, e.what());
        } catch (const std::invalid_argument& e) {
            throw CatalogError(std::string(source), line_number, e.what());
        } catch (const std::out_of_range& e) {
            throw CatalogError(std::string(source), line_number, e.what());
        }
    }
    return entries;
}

std::vector<CatalogEntry> catalog_load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw CatalogError(path.string(), 0, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return catalog_parse(buffer.str(), path.string());
}

const std::vector<CatalogEntry>& default_catalog() {
    static const std::vector<CatalogEntry> catalog =
        catalog_parse(internal::default_catalog_text(), "default_catalog.jsonl");
    return catalog;
}

const CatalogEntry& catalog_find(const std::vector<CatalogEntry>& catalog, std::string_view name) {
    for (const auto& entry : catalog) {
        if (entry.name == name) return entry;
    }
    throw std::out_of_range("no catalog entry named '" + std::string(name) + "'");
}

}  // namespace hypermermin
