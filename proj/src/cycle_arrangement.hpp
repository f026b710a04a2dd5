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

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace antimagic::detail {

// Places label pairs on the A vertices of one cycle of a 2-factor. Each pair
// has a kind (0 or 1) and an orientation; kind k with orientation 0 puts
// residue first[k] on the edge entering the A vertex and second[k] on the
// edge leaving it, orientation 1 the reverse. B vertex j (between A vertices
// j and j+1) receives out(state_j) + in(state_{j+1}), and allowed[j] is the
// bitmask of residues it may receive.
struct PairKinds {
  std::uint32_t modulus = 3;
  std::array<std::uint32_t, 2> first{};
  std::array<std::uint32_t, 2> second{};

  static constexpr int kStates = 4;
  static int kind_of(int state) { return state / 2; }
  std::uint32_t in_residue(int state) const {
    const int k = state / 2;
    return state % 2 == 0 ? first[k] : second[k];
  }
  std::uint32_t out_residue(int state) const {
    const int k = state / 2;
    return state % 2 == 0 ? second[k] : first[k];
  }
};

// result[c] is true iff the cycle can be arranged with exactly c kind-0 pairs.
std::vector<bool> feasible_kind0_counts(const PairKinds& kinds,
                                        const std::vector<std::uint32_t>& allowed);

// A concrete arrangement (one state per A position) using exactly `count`
// kind-0 pairs, or nullopt if none exists.
std::optional<std::vector<int>> arrange_cycle(
    const PairKinds& kinds, const std::vector<std::uint32_t>& allowed,
    std::uint32_t count);

// Picks one feasible count per cycle so that the counts add up to `total`.
// Among solutions it prefers, cycle by cycle, counts closest to `preferred`.
std::optional<std::vector<std::uint32_t>> distribute_counts(
    const std::vector<std::vector<bool>>& feasible,
    const std::vector<std::uint32_t>& preferred, std::uint32_t total);

}  // namespace antimagic::detail
