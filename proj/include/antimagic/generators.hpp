// Copyright 2026 The antimagic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "antimagic/graph.hpp"

namespace antimagic {

/// Random simple k-regular bipartite graph on parts of size n, built as the
/// union of k random permutation matchings. Each permutation is resampled
/// when it would repeat an edge; once the resample cap is reached the
/// remaining matchings are drawn as randomized perfect matchings of the
/// complement. Same (n, k, seed) always yields the same graph.
BipartiteGraph gen_regular_bipartite(std::uint32_t n, std::uint32_t k,
                                     std::uint64_t seed);

enum class Family { kCycle, kCompleteBipartite, kHypercube3, kCrown };

std::optional<Family> family_from_name(std::string_view name);

/// cycle: C_{2n}; complete_bipartite: K_{n,n}; hypercube3: Q3 (n must be 4);
/// crown: K_{n,n} minus a perfect matching (n >= 3).
BipartiteGraph gen_named(Family family, std::uint32_t n);

}  // namespace antimagic
