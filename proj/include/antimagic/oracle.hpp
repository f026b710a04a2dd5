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
#include <span>
#include <utility>
#include <vector>

#include "antimagic/graph.hpp"

// Exhaustive search over labelings of tiny graphs. Sums are computed here
// from scratch so the oracle can cross-check the verifier.
namespace antimagic::oracle {

/// Any simple graph; edge i is edges[i].
struct SimpleGraph {
  std::uint32_t vertex_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  /// A vertices first (0..n-1), then B vertices (n..2n-1); edges by id.
  static SimpleGraph from_bipartite(const BipartiteGraph& graph);
};

/// True when `labels` (edge-indexed, 1..|E|) is a bijection with distinct
/// vertex sums.
bool is_antimagic(const SimpleGraph& graph, std::span<const Label> labels);

/// First antimagic labeling in lexicographic order of the label sequence,
/// or nullopt once the whole space is ruled out. `budget` caps the number of
/// search nodes (partial labelings) visited; running out throws
/// kBudgetExhausted.
std::optional<std::vector<Label>> brute_force_search(const SimpleGraph& graph,
                                                     std::uint64_t budget);

/// Exact number of antimagic labelings. Throws kInstanceTooLarge when the
/// graph has more than 9 edges.
std::uint64_t count_antimagic(const SimpleGraph& graph);

inline constexpr std::size_t kMaxCountEdges = 9;

}  // namespace antimagic::oracle
