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

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "antimagic/constructions.hpp"
#include "antimagic/factorization.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/verification.hpp"

namespace antimagic::detail {

inline Subgraph union_of(const Subgraph& host, const Factorization& fact,
                         std::size_t first, std::size_t count) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), first);
  return combine_factors(host, fact, idx);
}

/// Indices of `sums` ordered by increasing value, ties by index.
inline std::vector<std::uint32_t> order_by_sum(const std::vector<Sum>& sums) {
  std::vector<std::uint32_t> order(sums.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return sums[x] < sums[y]; });
  return order;
}

/// Copies the labels of `sub`'s edges from `src` into `dst`, adding `offset`.
inline void copy_shifted(Labeling& dst, const Labeling& src, const Subgraph& sub,
                         Label offset) {
  for (const Edge& e : sub.edges()) dst.assign(e.id, src[e.id] + offset);
}

inline Sum mod(Sum value, Sum modulus) {
  return ((value % modulus) + modulus) % modulus;
}

inline void record_stage(ConstructionReport* report, const Subgraph& graph,
                         const Labeling& labeling, std::string name,
                         const StageInvariant& invariant) {
  if (report == nullptr) return;
  report->stages.push_back(
      verify_stage(graph, labeling, std::move(name), invariant));
}

}  // namespace antimagic::detail
