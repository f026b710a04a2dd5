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

#include "antimagic/factorization.hpp"

#include <algorithm>
#include <string>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

}  // namespace

std::vector<EdgeId> PerfectMatching::edge_ids() const {
  std::vector<EdgeId> ids = by_a;
  std::sort(ids.begin(), ids.end());
  return ids;
}

PerfectMatching find_perfect_matching(const Subgraph& graph) {
  const std::uint32_t n = graph.part_size();
  std::vector<EdgeId> edge_of_a(n, kNone);
  std::vector<std::uint32_t> owner_of_b(n, kNone);

  // Greedy pass first; augmenting paths then only fix the leftovers.
  for (std::uint32_t a = 0; a < n; ++a) {
    for (EdgeId id : graph.incident_a(a)) {
      const std::uint32_t b = graph.edge(id).b;
      if (owner_of_b[b] == kNone) {
        owner_of_b[b] = a;
        edge_of_a[a] = id;
        break;
      }
    }
  }

  std::vector<std::uint32_t> seen(n, kNone);
  auto augment = [&](auto&& self, std::uint32_t a, std::uint32_t stamp) -> bool {
    for (EdgeId id : graph.incident_a(a)) {
      const std::uint32_t b = graph.edge(id).b;
      if (seen[b] == stamp) continue;
      seen[b] = stamp;
      if (owner_of_b[b] == kNone || self(self, owner_of_b[b], stamp)) {
        owner_of_b[b] = a;
        edge_of_a[a] = id;
        return true;
      }
    }
    return false;
  };
  for (std::uint32_t a = 0; a < n; ++a) {
    if (edge_of_a[a] != kNone) continue;
    if (!augment(augment, a, a)) {
      throw Error(ErrorCode::kNotRegular, "no perfect matching exists");
    }
  }

  PerfectMatching m;
  m.by_a = std::move(edge_of_a);
  m.by_b.assign(n, kNone);
  for (EdgeId id : m.by_a) m.by_b[graph.edge(id).b] = id;
  return m;
}

Factorization one_factorize(const Subgraph& graph) {
  Factorization out;
  std::vector<Edge> remaining(graph.edges().begin(), graph.edges().end());
  for (std::uint32_t round = 0; round < graph.degree(); ++round) {
    Subgraph rest = Subgraph::from_edges(graph.part_size(), graph.id_space(),
                                         remaining);
    PerfectMatching m = find_perfect_matching(rest);
    std::vector<bool> taken(graph.id_space(), false);
    for (EdgeId id : m.by_a) taken[id] = true;
    std::erase_if(remaining, [&](const Edge& e) { return taken[e.id]; });
    out.factors.push_back(std::move(m));
  }
  return out;
}

Subgraph combine_factors(const Subgraph& host, const Factorization& fact,
                         std::span<const std::size_t> indices) {
  if (indices.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no factors selected");
  }
  std::vector<bool> chosen(fact.factors.size(), false);
  std::vector<Edge> edges;
  for (std::size_t i : indices) {
    if (i >= fact.factors.size()) {
      throw Error(ErrorCode::kOutOfRange,
                  "factor position " + std::to_string(i) + " out of range");
    }
    if (chosen[i]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "factor position " + std::to_string(i) + " repeated");
    }
    chosen[i] = true;
    for (EdgeId id : fact.factors[i].by_a) edges.push_back(host.edge(id));
  }
  return Subgraph::from_edges(host.part_size(), host.id_space(),
                              std::move(edges));
}

CycleDecomposition cycle_decomposition(const Subgraph& two_factor) {
  if (two_factor.degree() != 2) {
    throw Error(ErrorCode::kNotRegular, "cycle decomposition needs a 2-factor");
  }
  const std::uint32_t n = two_factor.part_size();
  std::vector<bool> visited_a(n, false);
  CycleDecomposition out;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (visited_a[start]) continue;
    Cycle c;
    std::uint32_t a = start;
    EdgeId leave = two_factor.incident_a(start)[0];
    do {
      visited_a[a] = true;
      c.a_vertices.push_back(a);
      c.edges.push_back(leave);
      const std::uint32_t b = two_factor.edge(leave).b;
      c.b_vertices.push_back(b);
      auto at_b = two_factor.incident_b(b);
      const EdgeId enter = at_b[0] == leave ? at_b[1] : at_b[0];
      c.edges.push_back(enter);
      a = two_factor.edge(enter).a;
      auto at_a = two_factor.incident_a(a);
      leave = at_a[0] == enter ? at_a[1] : at_a[0];
    } while (a != start);
    out.cycles.push_back(std::move(c));
  }
  return out;
}

}  // namespace antimagic
