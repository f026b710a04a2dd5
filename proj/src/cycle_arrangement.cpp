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

#include "cycle_arrangement.hpp"

#include <cstdlib>

namespace antimagic::detail {
namespace {

bool transition_ok(const PairKinds& kinds, std::uint32_t allowed_mask, int from,
                   int to) {
  const std::uint32_t r =
      (kinds.out_residue(from) + kinds.in_residue(to)) % kinds.modulus;
  return (allowed_mask >> r) & 1u;
}

// reach[j][s][c]: positions 0..j can be filled, state s at j, c kind-0 pairs
// used, given state `start` at position 0.
class Table {
 public:
  Table(std::size_t length, int start, const PairKinds& kinds,
        const std::vector<std::uint32_t>& allowed)
      : length_(length), data_(length * PairKinds::kStates * (length + 1), 0) {
    at(0, start, PairKinds::kind_of(start) == 0 ? 1 : 0) = 1;
    for (std::size_t j = 1; j < length; ++j) {
      for (int p = 0; p < PairKinds::kStates; ++p) {
        for (int s = 0; s < PairKinds::kStates; ++s) {
          if (!transition_ok(kinds, allowed[j - 1], p, s)) continue;
          const std::size_t add = PairKinds::kind_of(s) == 0 ? 1 : 0;
          for (std::size_t c = 0; c + add <= j + 1 && c <= j; ++c) {
            if (at(j - 1, p, c)) at(j, s, c + add) = 1;
          }
        }
      }
    }
  }

  unsigned char& at(std::size_t j, int s, std::size_t c) {
    return data_[(j * PairKinds::kStates + static_cast<std::size_t>(s)) *
                     (length_ + 1) +
                 c];
  }

 private:
  std::size_t length_;
  std::vector<unsigned char> data_;
};

}  // namespace

std::vector<bool> feasible_kind0_counts(const PairKinds& kinds,
                                        const std::vector<std::uint32_t>& allowed) {
  const std::size_t len = allowed.size();
  std::vector<bool> out(len + 1, false);
  for (int start = 0; start < PairKinds::kStates; ++start) {
    Table t(len, start, kinds, allowed);
    for (int s = 0; s < PairKinds::kStates; ++s) {
      if (!transition_ok(kinds, allowed[len - 1], s, start)) continue;
      for (std::size_t c = 0; c <= len; ++c) {
        if (t.at(len - 1, s, c)) out[c] = true;
      }
    }
  }
  return out;
}

std::optional<std::vector<int>> arrange_cycle(
    const PairKinds& kinds, const std::vector<std::uint32_t>& allowed,
    std::uint32_t count) {
  const std::size_t len = allowed.size();
  if (count > len) return std::nullopt;
  for (int start = 0; start < PairKinds::kStates; ++start) {
    Table t(len, start, kinds, allowed);
    int last = -1;
    for (int s = 0; s < PairKinds::kStates && last < 0; ++s) {
      if (t.at(len - 1, s, count) &&
          transition_ok(kinds, allowed[len - 1], s, start)) {
        last = s;
      }
    }
    if (last < 0) continue;

    std::vector<int> states(len);
    states[len - 1] = last;
    std::size_t c = count;
    for (std::size_t j = len - 1; j > 0; --j) {
      const int s = states[j];
      c -= PairKinds::kind_of(s) == 0 ? 1 : 0;
      int prev = -1;
      for (int p = 0; p < PairKinds::kStates && prev < 0; ++p) {
        if (t.at(j - 1, p, c) && transition_ok(kinds, allowed[j - 1], p, s)) {
          prev = p;
        }
      }
      states[j - 1] = prev;
    }
    return states;
  }
  return std::nullopt;
}

std::optional<std::vector<std::uint32_t>> distribute_counts(
    const std::vector<std::vector<bool>>& feasible,
    const std::vector<std::uint32_t>& preferred, std::uint32_t total) {
  const std::size_t cycles = feasible.size();
  // suffix[i][s]: cycles i.. can absorb exactly s.
  std::vector<std::vector<bool>> suffix(cycles + 1,
                                        std::vector<bool>(total + 1, false));
  suffix[cycles][0] = true;
  for (std::size_t i = cycles; i-- > 0;) {
    for (std::uint32_t s = 0; s <= total; ++s) {
      for (std::uint32_t c = 0; c < feasible[i].size() && c <= s; ++c) {
        if (feasible[i][c] && suffix[i + 1][s - c]) {
          suffix[i][s] = true;
          break;
        }
      }
    }
  }
  if (!suffix[0][total]) return std::nullopt;

  std::vector<std::uint32_t> out(cycles);
  std::uint32_t left = total;
  for (std::size_t i = 0; i < cycles; ++i) {
    long best = -1;
    long best_gap = 0;
    for (std::uint32_t c = 0; c < feasible[i].size() && c <= left; ++c) {
      if (!feasible[i][c] || !suffix[i + 1][left - c]) continue;
      const long gap = std::labs(static_cast<long>(c) -
                                 static_cast<long>(preferred[i]));
      if (best < 0 || gap < best_gap) {
        best = c;
        best_gap = gap;
      }
    }
    out[i] = static_cast<std::uint32_t>(best);
    left -= out[i];
  }
  return out;
}

}  // namespace antimagic::detail
