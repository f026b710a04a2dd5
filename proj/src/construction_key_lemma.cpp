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

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "antimagic/constructions.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/partitions.hpp"
#include "construction_util.hpp"
#include "cycle_arrangement.hpp"

namespace antimagic {
namespace {

// Arrangement states (see detail::PairKinds): kind 0 = like-pair, kind 1 =
// split-pair; orientation 0 of a split-pair enters with the a+1 label.
constexpr int kLike = 0;
constexpr int kSplitForward = 2;

using Layer = std::vector<std::vector<int>>;  // [cycle][position] -> state

struct LowerPlan {
  std::vector<Layer> layers;
  std::optional<std::uint32_t> x, y;
};

// Fills the 2l-factor: whole cycles of like-pairs while they fit, all other
// cycles with forward split-pairs, and at most one cycle with a leading run
// of like-pairs. Every B vertex then receives 2a per layer except the two
// vertices where that run starts and ends.
LowerPlan plan_lower(const std::vector<CycleDecomposition>& layers,
                     std::size_t lower_count, std::uint32_t likes) {
  LowerPlan plan;
  plan.layers.resize(lower_count);
  for (std::size_t j = 0; j < lower_count; ++j) {
    for (const Cycle& c : layers[j].cycles) {
      const std::size_t len = c.a_vertices.size();
      if (likes >= len) {
        plan.layers[j].emplace_back(len, kLike);
        likes -= static_cast<std::uint32_t>(len);
      } else {
        plan.layers[j].emplace_back(len, kSplitForward);
      }
    }
  }
  for (std::size_t j = 0; j < lower_count && likes > 0; ++j) {
    for (std::size_t ci = 0; ci < layers[j].cycles.size() && likes > 0; ++ci) {
      std::vector<int>& states = plan.layers[j][ci];
      if (states.front() != kSplitForward || states.size() <= likes) continue;
      std::fill(states.begin(), states.begin() + likes, kLike);
      const Cycle& c = layers[j].cycles[ci];
      plan.x = c.b_vertices.back();
      plan.y = c.b_vertices[likes - 1];
      likes = 0;
    }
  }
  if (likes > 0) throw Error(ErrorCode::kInternal, "like-pairs do not fit the 2l-factor");
  return plan;
}

void add_contributions(const detail::PairKinds& kinds, const Cycle& c,
                       const std::vector<int>& states,
                       std::vector<std::uint32_t>& residue_b) {
  const std::size_t len = states.size();
  for (std::size_t j = 0; j < len; ++j) {
    const int next = states[(j + 1) % len];
    residue_b[c.b_vertices[j]] =
        (residue_b[c.b_vertices[j]] + kinds.out_residue(states[j]) +
         kinds.in_residue(next)) % kinds.modulus;
  }
}

}  // namespace

KeyLemmaResult label_key_lemma(const Subgraph& h) {
  if (h.degree() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "key lemma needs an even-degree subgraph");
  }
  const std::uint32_t n = h.part_size();
  const std::uint32_t l = h.degree() / 2 - 1;
  KeyLemmaState state;
  state.l = l;
  state.m = h.degree() * n;
  state.a = like_residue(state.m);
  state.t = static_cast<Sum>(state.m + 1) * (l + 1);
  const std::uint32_t a = state.a;
  const detail::PairKinds kinds{3, {a, (a + 1) % 3}, {a, (a + 2) % 3}};

  const Factorization fact = one_factorize(h);
  std::vector<CycleDecomposition> layers;
  for (std::uint32_t j = 0; j <= l; ++j) {
    layers.push_back(cycle_decomposition(detail::union_of(h, fact, 2 * j, 2)));
  }
  const std::vector<Cycle>& top = layers[l].cycles;

  std::deque<LabelPair> likes, splits;
  std::uint32_t default_lower_likes = 0;
  for (const LabelPair& p : pair_partition(state.m)) {
    if (p.kind == PairKind::kLike) {
      likes.push_back(p);
      if (p.low <= l * n) ++default_lower_likes;
    } else {
      splits.push_back(p);
    }
  }
  const auto total_likes = static_cast<std::int64_t>(likes.size());
  const auto total_splits = static_cast<std::int64_t>(splits.size());
  const std::int64_t lower_slots = static_cast<std::int64_t>(l) * n;
  const std::int64_t lo =
      std::max<std::int64_t>({0, total_likes - n, lower_slots - total_splits});
  const std::int64_t hi = std::min<std::int64_t>(total_likes, lower_slots);

  // Try the like-pair count among the ln smallest pairs first, then the
  // nearest alternatives, until the top 2-factor admits an arrangement.
  std::vector<std::int64_t> candidates;
  for (std::int64_t delta = 0; delta <= hi - lo; ++delta) {
    for (std::int64_t c : {static_cast<std::int64_t>(default_lower_likes) - delta,
                           static_cast<std::int64_t>(default_lower_likes) + delta}) {
      if (c >= lo && c <= hi &&
          std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
        candidates.push_back(c);
      }
    }
  }

  const std::uint32_t t_residue = static_cast<std::uint32_t>(state.t % 3);
  std::optional<LowerPlan> lower;
  Layer top_states;
  for (std::int64_t lower_likes : candidates) {
    LowerPlan plan = plan_lower(layers, l, static_cast<std::uint32_t>(lower_likes));
    std::vector<std::uint32_t> residue_b(n, 0);
    for (std::uint32_t j = 0; j < l; ++j) {
      for (std::size_t ci = 0; ci < layers[j].cycles.size(); ++ci) {
        add_contributions(kinds, layers[j].cycles[ci], plan.layers[j][ci], residue_b);
      }
    }

    const auto top_likes = static_cast<std::uint32_t>(total_likes - lower_likes);
    std::vector<std::vector<std::uint32_t>> allowed(top.size());
    std::vector<std::vector<bool>> feasible;
    std::vector<std::uint32_t> preferred;
    for (std::size_t ci = 0; ci < top.size(); ++ci) {
      for (std::uint32_t b : top[ci].b_vertices) {
        const std::uint32_t forbidden = (t_residue + 3 - residue_b[b]) % 3;
        allowed[ci].push_back(0b111u & ~(1u << forbidden));
      }
      feasible.push_back(detail::feasible_kind0_counts(kinds, allowed[ci]));
      preferred.push_back(static_cast<std::uint32_t>(
          top[ci].a_vertices.size() * top_likes / n));
    }
    auto counts = detail::distribute_counts(feasible, preferred, top_likes);
    if (!counts) continue;

    top_states.clear();
    for (std::size_t ci = 0; ci < top.size(); ++ci) {
      top_states.push_back(*detail::arrange_cycle(kinds, allowed[ci], (*counts)[ci]));
    }
    lower = std::move(plan);
    break;
  }

  if (!lower) {
    // No arrangement meets the residue condition; label plainly and let the
    // caller's verification and repair take over.
    state.invariant_met = false;
    lower = plan_lower(layers, l, default_lower_likes);
    auto top_likes = static_cast<std::uint32_t>(total_likes - default_lower_likes);
    top_states.clear();
    for (const Cycle& c : top) {
      std::vector<int> states;
      for (std::size_t j = 0; j < c.a_vertices.size(); ++j) {
        if (top_likes > 0 && j % 2 == 0) {
          states.push_back(kLike);
          --top_likes;
        } else {
          states.push_back(kSplitForward + static_cast<int>(j % 2));
        }
      }
      top_states.push_back(std::move(states));
    }
    // Leftover like-pairs replace split slots from the front.
    for (auto& states : top_states) {
      for (int& s : states) {
        if (top_likes == 0) break;
        if (s != kLike) {
          s = kLike;
          --top_likes;
        }
      }
    }
  }

  if (lower->x) {
    std::vector<std::uint32_t> residue_b(n, 0);
    for (std::uint32_t j = 0; j < l; ++j) {
      for (std::size_t ci = 0; ci < layers[j].cycles.size(); ++ci) {
        add_contributions(kinds, layers[j].cycles[ci], lower->layers[j][ci], residue_b);
      }
    }
    const std::uint32_t base = (2 * a * l) % 3;
    state.x = lower->x;
    state.y = lower->y;
    state.t1 = static_cast<int>((residue_b[*lower->x] + 3 - base) % 3);
    state.t2 = static_cast<int>((residue_b[*lower->y] + 3 - base) % 3);
  }

  Labeling labeling(h.id_space());
  auto place = [&](const Cycle& c, const std::vector<int>& states) {
    for (std::size_t j = 0; j < states.size(); ++j) {
      const int s = states[j];
      std::deque<LabelPair>& pool =
          detail::PairKinds::kind_of(s) == 0 ? likes : splits;
      if (pool.empty()) throw Error(ErrorCode::kInternal, "pair pool exhausted");
      const LabelPair p = pool.front();
      pool.pop_front();
      Label enter = p.low, leave = p.high;
      if (p.kind == PairKind::kSplit) {
        const Label first = p.low % 3 == (a + 1) % 3 ? p.low : p.high;
        const Label second = first == p.low ? p.high : p.low;
        enter = s % 2 == 0 ? first : second;
        leave = s % 2 == 0 ? second : first;
      }
      labeling.assign(c.in_edge(j), enter);
      labeling.assign(c.out_edge(j), leave);
    }
  };
  for (std::uint32_t j = 0; j < l; ++j) {
    for (std::size_t ci = 0; ci < layers[j].cycles.size(); ++ci) {
      place(layers[j].cycles[ci], lower->layers[j][ci]);
    }
  }
  for (std::size_t ci = 0; ci < top.size(); ++ci) place(top[ci], top_states[ci]);

  const SumProfile sums = partial_sums(h, labeling);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (sums.sums_a[v] != state.t || detail::mod(sums.sums_b[v], 3) == t_residue) {
      state.invariant_met = false;
    }
  }
  return {std::move(labeling), state};
}

}  // namespace antimagic
