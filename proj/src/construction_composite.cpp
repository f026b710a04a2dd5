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

#include <string>

#include "antimagic/constructions.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/partitions.hpp"
#include "construction_util.hpp"
#include "cycle_arrangement.hpp"

namespace antimagic {
namespace {

// Labels the last (2l+2) factors with the key lemma shifted up by `offset`
// and records the stage. Returns the common A partial sum.
Sum label_upper_factor(const Subgraph& g, const Factorization& fact,
                       std::size_t first, Label offset, Labeling& labeling,
                       ConstructionReport* report) {
  const Subgraph h = detail::union_of(g, fact, first, fact.factors.size() - first);
  KeyLemmaResult kl = label_key_lemma(h);
  detail::copy_shifted(labeling, kl.labeling, h, offset);
  if (report != nullptr && !kl.state.invariant_met) report->invariant_fallback = true;
  const Sum t = kl.state.t + static_cast<Sum>(offset) * h.degree();
  detail::record_stage(report, g, labeling, "key lemma on the (2l+2)-factor",
                       {SumConstraint::equals(t), SumConstraint::residue_not(3, t), {}});
  return t;
}

void finish_with_3_factor(const Subgraph& g, const Subgraph& h3,
                          Labeling& labeling) {
  const SumProfile partial = partial_sums(g, labeling);
  const std::vector<std::uint32_t> order = detail::order_by_sum(partial.sums_b);
  const Labeling l3 = label_3_factor_shifted(h3, order, 0);
  detail::copy_shifted(labeling, l3, h3, 0);
}

}  // namespace

Labeling label_odd_regular(const BipartiteGraph& graph, ConstructionReport* report) {
  const std::uint32_t k = graph.degree();
  if (k < 5 || k % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "label_odd_regular needs odd degree >= 5");
  }
  if (report != nullptr) report->route = "odd-regular";
  const std::uint32_t n = graph.part_size();
  const Subgraph& g = graph.whole();
  const Factorization fact = one_factorize(g);
  Labeling labeling(graph.edge_count());

  label_upper_factor(g, fact, 3, 3 * n, labeling, report);
  finish_with_3_factor(g, detail::union_of(g, fact, 0, 3), labeling);
  return labeling;
}

Labeling label_even_ge8(const BipartiteGraph& graph, ConstructionReport* report) {
  const std::uint32_t k = graph.degree();
  if (k < 8 || k % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "label_even_ge8 needs even degree >= 8");
  }
  if (report != nullptr) report->route = "even-regular";
  const std::uint32_t n = graph.part_size();
  const Subgraph& g = graph.whole();
  const Factorization fact = one_factorize(g);
  Labeling labeling(graph.edge_count());

  const Sum t = label_upper_factor(g, fact, 6, 6 * n, labeling, report);

  // G3 = factors 0..2 takes {3n+1..6n} by triples, factor c getting the
  // labels congruent to c mod 3, so each B vertex gains 0 mod 3.
  const std::vector<LabelTriple> triples = triple_partition_mod3(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t c = 0; c < 3; ++c) {
      labeling.assign(fact.factors[c].by_a[a], triples[a].with_residue(c) + 3 * n);
    }
  }
  if (report != nullptr) {
    const Sum first = triples.front().target_sum + 9 * static_cast<Sum>(n);
    const Sum second = triples.back().target_sum + 9 * static_cast<Sum>(n);
    detail::record_stage(report, g, labeling, "G3 (mod-3 triples)",
                         {SumConstraint::one_of({t + first, t + second}),
                          SumConstraint::residue_not(3, t), {}});
  }

  finish_with_3_factor(g, detail::union_of(g, fact, 3, 3), labeling);
  return labeling;
}

Labeling label_6_regular(const BipartiteGraph& graph, ConstructionReport* report) {
  if (graph.degree() != 6) {
    throw Error(ErrorCode::kInvalidArgument, "label_6_regular needs degree 6");
  }
  if (report != nullptr) report->route = "6-regular";
  const std::uint32_t n = graph.part_size();
  const Sum N = n;
  const Subgraph& g = graph.whole();
  const Factorization fact = one_factorize(g);
  const PerfectMatching& h1 = fact.factors[0];
  Labeling labeling(graph.edge_count());

  // H3 = factors 3..5: factor 3+r-1 takes the labels congruent to r mod 4.
  const std::vector<LabelTriple> triples = triple_partition_mod4(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
      labeling.assign(fact.factors[2 + r].by_a[a], triples[a].with_residue(r));
    }
  }
  const Sum small = 4 * N - 2;
  const Sum big = n % 2 == 0 ? 8 * N + 2 : 8 * N - 2;
  detail::record_stage(report, g, labeling, "H3 (mod-4 triples)",
                       {SumConstraint::one_of({small, big}),
                        SumConstraint::residue_in(4, {2}), {}});

  // H2 = factors 1, 2 takes 4n+1..6n in pairs summing to 10n+1. Pairs come
  // in two residue kinds mod 4; within a run of one kind orientations
  // alternate, and the arrangement avoids the one B residue that would
  // match A mod 4.
  const Sum pair_sum = 10 * N + 1;
  const Sum a_residue = detail::mod(pair_sum + small, 4);
  const Subgraph h2 = detail::union_of(g, fact, 1, 2);
  const std::vector<Cycle> cycles = cycle_decomposition(h2).cycles;

  std::array<std::vector<std::pair<Label, Label>>, 2> pools;  // (first, second)
  const auto kind_residue = static_cast<std::uint32_t>(detail::mod(4 * N + 1, 4));
  detail::PairKinds kinds{4, {}, {}};
  for (Label i = 1; i <= n; ++i) {
    const Label lo = 4 * n + i;
    const Label hi = 6 * n + 1 - i;
    if (lo >= hi) break;
    const int kind = (lo % 4 == kind_residue || hi % 4 == kind_residue) ? 0 : 1;
    // Orientation 0 enters with the label whose residue is odd.
    const Label first = lo % 2 == 1 ? lo : hi;
    const Label second = first == lo ? hi : lo;
    kinds.first[kind] = first % 4;
    kinds.second[kind] = second % 4;
    pools[kind].emplace_back(first, second);
  }

  const SumProfile after_h3 = partial_sums(g, labeling);
  std::vector<std::vector<std::uint32_t>> allowed(cycles.size());
  std::vector<std::vector<bool>> feasible;
  std::vector<std::uint32_t> preferred;
  const auto kind0_total = static_cast<std::uint32_t>(pools[0].size());
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    for (std::uint32_t b : cycles[ci].b_vertices) {
      const Sum forbidden = detail::mod(a_residue - after_h3.sums_b[b], 4);
      allowed[ci].push_back(0b1111u & ~(1u << forbidden));
    }
    feasible.push_back(detail::feasible_kind0_counts(kinds, allowed[ci]));
    preferred.push_back(static_cast<std::uint32_t>(
        cycles[ci].a_vertices.size() * kind0_total / n));
  }
  // Prefer cycles carrying both kinds; fall back to any feasible split.
  std::vector<std::vector<bool>> mixed = feasible;
  for (auto& f : mixed) {
    f.front() = false;
    f.back() = false;
  }
  auto counts = detail::distribute_counts(mixed, preferred, kind0_total);
  if (!counts) counts = detail::distribute_counts(feasible, preferred, kind0_total);
  std::vector<std::vector<int>> states;
  if (counts) {
    for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
      states.push_back(*detail::arrange_cycle(kinds, allowed[ci], (*counts)[ci]));
    }
  } else {
    if (report != nullptr) report->invariant_fallback = true;
    std::uint32_t left0 = kind0_total;
    for (const Cycle& c : cycles) {
      std::vector<int> s;
      for (std::size_t j = 0; j < c.a_vertices.size(); ++j) {
        const int kind = left0 > 0 ? 0 : 1;
        if (kind == 0) --left0;
        s.push_back(2 * kind + static_cast<int>(j % 2));
      }
      states.push_back(std::move(s));
    }
  }
  std::array<std::size_t, 2> next{0, 0};
  for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
    for (std::size_t j = 0; j < states[ci].size(); ++j) {
      const int s = states[ci][j];
      const auto [first, second] = pools[s / 2].at(next[s / 2]++);
      labeling.assign(cycles[ci].in_edge(j), s % 2 == 0 ? first : second);
      labeling.assign(cycles[ci].out_edge(j), s % 2 == 0 ? second : first);
    }
  }
  detail::record_stage(report, g, labeling, "H2 (pairs summing to 10n+1)",
                       {SumConstraint::one_of({small + pair_sum, big + pair_sum}),
                        SumConstraint::residue_not(4, a_residue), {}});

  // H1: label 4i at the i-th B vertex by increasing partial sum.
  const SumProfile partial = partial_sums(g, labeling);
  Label next_label = 4;
  for (std::uint32_t b : detail::order_by_sum(partial.sums_b)) {
    labeling.assign(h1.by_b[b], next_label);
    next_label += 4;
  }
  return labeling;
}

}  // namespace antimagic
