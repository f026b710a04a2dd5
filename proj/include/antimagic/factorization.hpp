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

#include <cstddef>
#include <span>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

/// A perfect matching, stored from both sides: by_a[a] is the edge covering
/// vertex a of A, by_b[b] the edge covering b of B.
struct PerfectMatching {
  std::vector<EdgeId> by_a;
  std::vector<EdgeId> by_b;

  std::size_t size() const noexcept { return by_a.size(); }
  /// Edge ids in increasing order.
  std::vector<EdgeId> edge_ids() const;
};

/// k pairwise edge-disjoint perfect matchings partitioning the edge set.
struct Factorization {
  std::vector<PerfectMatching> factors;
};

/// One even cycle of a 2-factor, traversed from its lowest-indexed A vertex
/// along the lower edge id:
///   a[0] -e[0]- b[0] -e[1]- a[1] -e[2]- ... - b[L-1] -e[2L-1]- a[0]
/// so e[2j] is the edge leaving a[j] and e[2j-1] (cyclically) the edge
/// entering it.
struct Cycle {
  std::vector<std::uint32_t> a_vertices;
  std::vector<std::uint32_t> b_vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  EdgeId out_edge(std::size_t j) const { return edges[2 * j]; }
  EdgeId in_edge(std::size_t j) const {
    return edges[(2 * j + edges.size() - 1) % edges.size()];
  }
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;
};

/// Augmenting-path matching that scans A and adjacency in index order.
/// Every regular bipartite graph has one, so this never fails on a Subgraph.
PerfectMatching find_perfect_matching(const Subgraph& graph);

/// Peels perfect matchings one at a time from the remaining regular graph.
Factorization one_factorize(const Subgraph& graph);

/// Union of the chosen factors as a spanning subgraph keeping host edge ids.
/// Throws on duplicate or out-of-range positions.
Subgraph combine_factors(const Subgraph& host, const Factorization& fact,
                         std::span<const std::size_t> indices);

/// Splits a 2-regular bipartite graph into its cycles; throws kNotRegular for
/// any other degree.
CycleDecomposition cycle_decomposition(const Subgraph& two_factor);

}  // namespace antimagic
