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

#ifndef HYPERMERMIN_RNG_H
#define HYPERMERMIN_RNG_H

#include <cstdint>
#include <random>

namespace hypermermin {

/// SplitMix64 finaliser. Used to derive independent, reproducible seeds for
/// restarts, charts and shot batches from one master seed.
std::uint64_t mix_seed(std::uint64_t value);

/// Seed for sub-stream `stream` of `master`.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// Engine for sub-stream `stream` of `master`.
std::mt19937_64 make_stream(std::uint64_t master, std::uint64_t stream);

}  // namespace hypermermin

#endif  // HYPERMERMIN_RNG_H
