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

#ifndef HYPERMERMIN_CATALOG_H
#define HYPERMERMIN_CATALOG_H

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypermermin/hyperstate.h"

namespace hypermermin {

/// Reference values attached to a catalog entry.
struct ExpectedValues {
    std::optional<double> mu;
    std::optional<double> mu_tilde;
    /// Singularity descriptor of the hyperplane section: "Smooth", "nonisolated",
    /// or "<count>A1" (e.g. "6A1").
    std::optional<std::string> singular;

    bool operator==(const ExpectedValues&) const = default;
};

/// A named reference state. At least one of `hypergraph` and `signs` is set;
/// when both are present they agree.
struct CatalogEntry {
    std::string name;
    std::optional<Hypergraph> hypergraph;
    /// ±1 per basis index, length 2ⁿ.
    std::optional<std::vector<int>> signs;
    ExpectedValues expected;

    /// The stated hypergraph, or the one inferred from the sign vector.
    Hypergraph resolved_hypergraph() const;
    StateVector state() const;
    int num_qubits() const;
};

/// Parse failure, with the 1-based line of the offending entry.
class CatalogError : public std::runtime_error {
   public:
    CatalogError(std::string source, int line, const std::string& message);
    int line() const { return line_; }
    const std::string& source() const { return source_; }

   private:
    std::string source_;
    int line_;
};

/// Parses a catalog: one JSON object per line, blank lines and lines starting
/// with '#' ignored. Each object has `name`, optionally `hypergraph`
/// ({"n": ..., "edges": [[...], ...]}) and/or `signs` ([±1, ...]), and an
/// optional `expected` object with `mu`, `mu_tilde`, `singular`.
std::vector<CatalogEntry> catalog_parse(std::string_view text, std::string_view source = "<catalog>");

std::vector<CatalogEntry> catalog_load(const std::filesystem::path& path);

/// The catalog compiled into the library (data/default_catalog.jsonl).
const std::vector<CatalogEntry>& default_catalog();

/// Looks an entry up by name; throws std::out_of_range if absent.
const CatalogEntry& catalog_find(const std::vector<CatalogEntry>& catalog, std::string_view name);

}  // namespace hypermermin

#endif  // HYPERMERMIN_CATALOG_H
