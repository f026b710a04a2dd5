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
#include <string>

#include "antimagic/constructions.hpp"
#include "antimagic/errors.hpp"
#include "construction_util.hpp"

namespace antimagic {

bool ConstructionReport::stages_passed() const {
  return std::all_of(stages.begin(), stages.end(),
                     [](const StageReport& s) { return s.passed(); });
}

std::vector<Label> label_cycle(std::uint32_t length) {
  if (length < 3) {
    throw Error(ErrorCode::kInvalidArgument, "a cycle has at least 3 edges");
  }
  std::vector<Label> out;
  out.reserve(length);
  for (Label l = 1; l <= length; l += 2) out.push_back(l);
  for (Label l = length - (length % 2 == 0 ? 0 : 1); l >= 2; l -= 2) {
    out.push_back(l);
  }
  return out;
}

Labeling compose_disjoint_union(std::vector<LabeledComponent> components,
                                std::size_t id_space) {
  std::stable_sort(components.begin(), components.end(),
                   [](const LabeledComponent& x, const LabeledComponent& y) {
                     return x.degree < y.degree;
                   });
  Labeling out(id_space);
  Label offset = 0;
  for (const LabeledComponent& c : components) {
    if (c.labels.size() != c.edges.size()) {
      throw Error(ErrorCode::kInvalidArgument, "component label count mismatch");
    }
    std::vector<bool> seen(c.labels.size() + 1, false);
    for (Label l : c.labels) {
      if (l == 0 || l > c.labels.size() || seen[l]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "component labels are not a permutation of 1..|E|");
      }
      seen[l] = true;
    }
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
      out.assign(c.edges[i], c.labels[i] + offset);
    }
    offset += static_cast<Label>(c.edges.size());
  }
  return out;
}

Labeling label_2_regular(const BipartiteGraph& graph, ConstructionReport* report) {
  if (graph.degree() != 2) {
    throw Error(ErrorCode::kInvalidArgument, "label_2_regular needs degree 2");
  }
  if (report != nullptr) report->route = "2-regular";
  std::vector<LabeledComponent> parts;
  for (const Cycle& c : cycle_decomposition(graph.whole()).cycles) {
    parts.push_back({2, c.edges, label_cycle(static_cast<std::uint32_t>(c.length()))});
  }
  return compose_disjoint_union(std::move(parts), graph.edge_count());
}

Labeling label_3_regular(const BipartiteGraph& graph, ConstructionReport* report) {
  if (graph.degree() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "label_3_regular needs degree 3");
  }
  const std::uint32_t n = graph.part_size();
  const Subgraph& g = graph.whole();
  const Factorization fact = one_factorize(g);
  const PerfectMatching& h1 = fact.factors[0];
  const Subgraph h2 = detail::union_of(g, fact, 1, 2);
  const CycleDecomposition cycles = cycle_decomposition(h2);

  // Around each cycle the class of the label leaving a[j] alternates 1, 2,
  // 1, ... and the entering label takes the other class of the pair. B vertex
  // j then sees two labels of one class, except b[L-1] on cycles with an odd
  // number L of A vertices, which sees one of each: the bad vertex.
  std::vector<std::uint32_t> bad;
  for (const Cycle& c : cycles.cycles) {
    if (c.a_vertices.size() % 2 == 1) bad.push_back(c.b_vertices.back());
  }
  const std::uint32_t m = static_cast<std::uint32_t>(bad.size());

  // pair_of_a[a] = the 1-label i of the pair (i, 3n - i) used at a.
  constexpr Label kNoPair = 0;
  std::vector<Label> pair_of_a(n, kNoPair);
  std::vector<bool> pair_used(3 * n, false);
  auto take = [&](std::uint32_t a, Label one_label) {
    pair_of_a[a] = one_label;
    pair_used[one_label] = true;
  };
  // Bad vertex number t (1-based) gets 1-label 3t-2 and 2-label 3m-3t+2,
  // which sum to 3m and are both small elements of their original pairs.
  std::size_t t = 1;
  for (const Cycle& c : cycles.cycles) {
    const std::size_t len = c.a_vertices.size();
    if (len % 2 == 0) continue;
    const Label j = static_cast<Label>(3 * t - 2);
    take(c.a_vertices[len - 1], j);                        // leaves with j
    take(c.a_vertices[0], 3 * n - (3 * m - j));            // enters with 3m-j
    ++t;
  }
  Label next = 1;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (pair_of_a[a] != kNoPair) continue;
    while (pair_used[next]) next += 3;
    take(a, next);
  }

  Labeling labeling(graph.edge_count());
  for (const Cycle& c : cycles.cycles) {
    for (std::size_t j = 0; j < c.a_vertices.size(); ++j) {
      const Label one = pair_of_a[c.a_vertices[j]];
      const Label two = 3 * n - one;
      const bool leave_with_one = j % 2 == 0;
      labeling.assign(c.out_edge(j), leave_with_one ? one : two);
      labeling.assign(c.in_edge(j), leave_with_one ? two : one);
    }
  }
  detail::record_stage(
      report, g, labeling, "H2 (1- and 2-labels)",
      {SumConstraint::equals(3 * static_cast<Sum>(n)),
       SumConstraint::residue_not(3, 0), bad});

  // 0-labels on H1: smallest at the bad vertices, the rest by increasing
  // partial sum over the good ones.
  const SumProfile partial = partial_sums(g, labeling);
  std::vector<bool> is_bad(n, false);
  for (std::uint32_t b : bad) is_bad[b] = true;
  Label zero = 3;
  for (std::uint32_t b : bad) {
    labeling.assign(h1.by_b[b], zero);
    zero += 3;
  }
  for (std::uint32_t b : detail::order_by_sum(partial.sums_b)) {
    if (is_bad[b]) continue;
    labeling.assign(h1.by_b[b], zero);
    zero += 3;
  }

  if (report != nullptr) {
    report->route = "3-regular";
    report->bad_vertices = bad;
    std::vector<Sum> a_sums;
    for (std::uint32_t i = 1; i <= n; ++i) a_sums.push_back(3 * static_cast<Sum>(n + i));
    detail::record_stage(report, g, labeling, "complete",
                         {SumConstraint::one_of(a_sums),
                          SumConstraint::residue_not(3, 0), bad});
  }
  return labeling;
}

Labeling label_3_factor_shifted(const Subgraph& h3,
                                std::span<const std::uint32_t> b_order,
                                Label offset) {
  if (h3.degree() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "label_3_factor_shifted needs a 3-factor");
  }
  const std::uint32_t n = h3.part_size();
  std::vector<bool> seen(n, false);
  if (b_order.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "b_order must list every B vertex");
  }
  for (std::uint32_t b : b_order) {
    if (b >= n || seen[b]) {
      throw Error(ErrorCode::kInvalidArgument, "b_order is not a permutation of B");
    }
    seen[b] = true;
  }

  const Factorization fact = one_factorize(h3);
  const PerfectMatching& r = fact.factors[0];
  const PerfectMatching& s = fact.factors[1];
  const PerfectMatching& t = fact.factors[2];
  // Room for the shifted labels even when the host has fewer edges.
  Labeling labeling(std::max<std::size_t>(h3.id_space(), offset + 3 * std::size_t{n}));
  for (std::uint32_t i = 1; i <= n; ++i) {
    const std::uint32_t b_i = b_order[i - 1];
    const EdgeId in_r = r.by_b[b_i];
    labeling.assign(in_r, offset + 3 * i - 2);
    const std::uint32_t a_i = h3.edge(in_r).a;
    const EdgeId in_s = s.by_a[a_i];
    labeling.assign(in_s, offset + 3 * n + 3 - 3 * i);
    const std::uint32_t b_prime = h3.edge(in_s).b;
    labeling.assign(t.by_b[b_prime], offset + 3 * i - 1);
  }
  return labeling;
}

}  // namespace antimagic
