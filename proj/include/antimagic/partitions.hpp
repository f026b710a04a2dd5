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
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

/// The n smallest positive integers congruent to `residue` mod `modulus`,
/// ascending. modulus must be 3 or 4.
std::vector<Label> residue_labels(std::uint32_t n, std::uint32_t residue,
                                  std::uint32_t modulus);

enum class PairKind { kLike, kSplit };

/// (low, high) with low + high = m + 1. With m + 1 = 2a (mod 3), a like-pair
/// has both entries = a (mod 3); a split-pair covers the other two classes.
struct LabelPair {
  Label low = 0;
  Label high = 0;
  PairKind kind = PairKind::kSplit;
  std::uint32_t residue_a = 0;
};

/// Residue a (mod 3) with m + 1 = 2a (mod 3).
std::uint32_t like_residue(std::uint32_t m);

/// Pairs (i, m+1-i) for i = 1..m/2, in order of i. Throws for odd m.
std::vector<LabelPair> pair_partition(std::uint32_t m);

struct LabelTriple {
  std::array<Label, 3> labels{};
  Sum target_sum = 0;
  /// Residues of `labels` under the partition's modulus, in label order.
  std::array<std::uint32_t, 3> residue_signature{};
  std::uint32_t modulus = 3;
  /// 1 for the first family of the construction, 2 for the second.
  int family = 1;

  /// The member of the triple in residue class `residue`.
  Label with_residue(std::uint32_t residue) const;
};

/// Partition of {1..3n} into n triples with one label per class mod 3 and
/// sums {6n+3, 3n} (n even) or {6n, 3n} (n odd). First family first.
std::vector<LabelTriple> triple_partition_mod3(std::uint32_t n);

/// Partition of {1..4n-1} minus the multiples of 4 into n triples with one
/// label per nonzero class mod 4 and sums {8n+2, 4n-2} (n even) or
/// {8n-2, 4n-2} (n odd). First family first.
std::vector<LabelTriple> triple_partition_mod4(std::uint32_t n);

}  // namespace antimagic
