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
#include <array>
#include <numeric>
#include <optional>
#include <string>

#include "antimagic/constructions.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/partitions.hpp"
#include "construction_util.hpp"
#include "four_regular.hpp"

namespace antimagic {
namespace {

// Residue classes (1, 2, 3 mod 4) of the 3-factor edges, before any actual
// label is chosen. A B vertex is bad when its three classes add to 2 mod 4,
// the class every A partial sum falls in.
class ResidueState {
 public:
  ResidueState(const Subgraph& g, const Factorization& fact)
      : g_(g), fact_(fact), residue_(g.id_space(), 0) {
    for (std::uint32_t r = 1; r <= 3; ++r) {
      for (EdgeId e : fact.factors[r].by_a) residue_[e] = r;
    }
  }

  std::uint32_t residue(EdgeId e) const { return residue_[e]; }
  void swap(EdgeId e1, EdgeId e2) { std::swap(residue_[e1], residue_[e2]); }

  std::array<EdgeId, 3> edges_at_a(std::uint32_t a) const {
    return {fact_.factors[1].by_a[a], fact_.factors[2].by_a[a],
            fact_.factors[3].by_a[a]};
  }
  std::array<EdgeId, 3> edges_at_b(std::uint32_t b) const {
    return {fact_.factors[1].by_b[b], fact_.factors[2].by_b[b],
            fact_.factors[3].by_b[b]};
  }

  bool is_bad(std::uint32_t b) const {
    std::uint32_t s = 0;
    for (EdgeId e : edges_at_b(b)) s += residue_[e];
    return s % 4 == 2;
  }

  std::vector<std::uint32_t> bad_vertices() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t b = 0; b < g_.part_size(); ++b) {
      if (is_bad(b)) out.push_back(b);
    }
    return out;
  }

  // A vertices adjacent through the 3-factor to two or more bad vertices.
  std::vector<std::uint32_t> crowded_a() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t a = 0; a < g_.part_size(); ++a) {
      int count = 0;
      for (EdgeId e : edges_at_a(a)) count += is_bad(g_.edge(e).b) ? 1 : 0;
      if (count >= 2) out.push_back(a);
    }
    return out;
  }

  std::optional<EdgeId> edge_at_a_with(std::uint32_t a, std::uint32_t r) const {
    for (EdgeId e : edges_at_a(a)) {
      if (residue_[e] == r) return e;
    }
    return std::nullopt;
  }
  std::optional<EdgeId> edge_at_b_with(std::uint32_t b, std::uint32_t r) const {
    for (EdgeId e : edges_at_b(b)) {
      if (residue_[e] == r) return e;
    }
    return std::nullopt;
  }

 private:
  const Subgraph& g_;
  const Factorization& fact_;
  std::vector<std::uint32_t> residue_;
};

struct BadPath {
  EdgeId three;  // at the bad vertex
  EdgeId two;    // adjacent to it through their common A vertex
  std::optional<std::uint32_t> next_bad;
};

// Swapping the two labels of a bad path turns the bad vertex's classes from
// {1,2,3} into {1,2,2} and adds one to the far end. In every path component
// of the bad-path graph, swapping every second path fixes all its vertices;
// a cycle component of odd length keeps one bad vertex.
void swap_bad_paths(const Subgraph& g, ResidueState& state) {
  const std::uint32_t n = g.part_size();
  const std::vector<std::uint32_t> bad = state.bad_vertices();
  std::vector<bool> is_bad(n, false);
  for (std::uint32_t b : bad) is_bad[b] = true;

  std::vector<std::optional<BadPath>> path(n);
  std::vector<bool> has_pred(n, false);
  for (std::uint32_t b : bad) {
    auto three = state.edge_at_b_with(b, 3);
    if (!three) continue;
    auto two = state.edge_at_a_with(g.edge(*three).a, 2);
    if (!two) continue;
    BadPath p{*three, *two, std::nullopt};
    const std::uint32_t far = g.edge(*two).b;
    if (is_bad[far]) {
      p.next_bad = far;
      has_pred[far] = true;
    }
    path[b] = p;
  }

  std::vector<bool> visited(n, false);
  std::vector<std::pair<EdgeId, EdgeId>> swaps;
  auto walk = [&](std::uint32_t start, bool cyclic) {
    std::vector<std::uint32_t> chain;
    std::optional<std::uint32_t> v = start;
    while (v && !visited[*v]) {
      visited[*v] = true;
      chain.push_back(*v);
      v = path[*v] ? path[*v]->next_bad : std::nullopt;
    }
    const std::size_t c = chain.size();
    for (std::size_t i = 0; i < c; i += 2) {
      if (cyclic && i + 1 == c) break;  // would undo the first swap
      if (!path[chain[i]]) continue;
      swaps.emplace_back(path[chain[i]]->three, path[chain[i]]->two);
    }
  };
  for (std::uint32_t b : bad) {
    if (!has_pred[b]) walk(b, false);
  }
  for (std::uint32_t b : bad) {
    if (!visited[b]) walk(b, true);
  }
  for (auto [e1, e2] : swaps) state.swap(e1, e2);
}

// Permutes the classes at A vertices that see two bad vertices until none
// does, never increasing the bad count.
void spread_bad_vertices(const Subgraph& g, ResidueState& state) {
  auto score = [&] {
    return std::pair<std::size_t, std::size_t>(state.crowded_a().size(),
                                               state.bad_vertices().size());
  };
  // Gives the three edges at an A vertex the classes in `target`.
  auto apply = [&](const std::array<EdgeId, 3>& edges,
                   const std::array<std::uint32_t, 3>& target) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (state.residue(edges[j]) == target[i]) state.swap(edges[i], edges[j]);
      }
    }
  };
  for (int round = 0; round < 4 * static_cast<int>(g.part_size()); ++round) {
    const std::vector<std::uint32_t> crowded = state.crowded_a();
    if (crowded.empty()) return;
    bool improved = false;
    for (std::uint32_t a : crowded) {
      const auto edges = state.edges_at_a(a);
      auto best = score();
      std::array<std::uint32_t, 3> original{state.residue(edges[0]),
                                            state.residue(edges[1]),
                                            state.residue(edges[2])};
      std::array<std::uint32_t, 3> perm = {1, 2, 3};
      std::optional<std::array<std::uint32_t, 3>> choice;
      do {
        apply(edges, perm);
        auto s = score();
        if (s < best) {
          best = s;
          choice = perm;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      apply(edges, choice ? *choice : original);
      improved = improved || choice.has_value();
    }
    if (!improved) return;
  }
}

}  // namespace

namespace detail {

Labeling label_4_regular_phases(const BipartiteGraph& graph,
                                ConstructionReport* report, bool swap_paths) {
  if (graph.degree() != 4) {
    throw Error(ErrorCode::kInvalidArgument, "label_4_regular needs degree 4");
  }
  const std::uint32_t n = graph.part_size();
  const Sum N = n;
  const Subgraph& g = graph.whole();
  const Factorization fact = one_factorize(g);
  const PerfectMatching& h1 = fact.factors[0];

  // Classes 1, 2, 3 on factors 1, 2, 3 make every B vertex bad. On each
  // cycle of the {1,2} 2-factor swap the two classes at every second A
  // vertex; a cycle with an odd number of A vertices keeps one bad vertex,
  // the one just before the traversal start.
  ResidueState state(g, fact);
  for (const Cycle& c : cycle_decomposition(detail::union_of(g, fact, 1, 2)).cycles) {
    for (std::size_t j = 0; j < c.a_vertices.size(); j += 2) {
      state.swap(c.in_edge(j), c.out_edge(j));
    }
  }
  const std::size_t after_alternation = state.bad_vertices().size();
  if (swap_paths) swap_bad_paths(g, state);
  const std::size_t after_paths = state.bad_vertices().size();
  spread_bad_vertices(g, state);
  const std::vector<std::uint32_t> bad = state.bad_vertices();

  // Triples go to A vertices. Each A vertex next to a bad vertex takes the
  // unused triple whose label in the class of that edge is smallest, serving
  // class 1 first, then 2, then 3.
  const std::vector<LabelTriple> triples = triple_partition_mod4(n);
  constexpr std::size_t kNone = SIZE_MAX;
  std::vector<std::size_t> triple_of_a(n, kNone);
  std::vector<bool> triple_used(triples.size(), false);
  for (std::uint32_t r : {1u, 2u, 3u}) {
    std::vector<std::size_t> by_label(triples.size());
    std::iota(by_label.begin(), by_label.end(), std::size_t{0});
    std::sort(by_label.begin(), by_label.end(), [&](std::size_t x, std::size_t y) {
      return triples[x].with_residue(r) < triples[y].with_residue(r);
    });
    std::size_t next = 0;
    for (std::uint32_t b : bad) {
      for (EdgeId e : state.edges_at_b(b)) {
        const std::uint32_t a = g.edge(e).a;
        if (state.residue(e) != r || triple_of_a[a] != kNone) continue;
        while (triple_used[by_label[next]]) ++next;
        triple_of_a[a] = by_label[next];
        triple_used[by_label[next]] = true;
      }
    }
  }
  std::size_t spare = 0;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (triple_of_a[a] != kNone) continue;
    while (triple_used[spare]) ++spare;
    triple_of_a[a] = spare;
    triple_used[spare] = true;
  }

  Labeling labeling(graph.edge_count());
  for (std::uint32_t a = 0; a < n; ++a) {
    const LabelTriple& t = triples[triple_of_a[a]];
    for (EdgeId e : state.edges_at_a(a)) {
      labeling.assign(e, t.with_residue(state.residue(e)));
    }
  }
  const Sum small = 4 * N - 2;
  const Sum big = n % 2 == 0 ? 8 * N + 2 : 8 * N - 2;
  detail::record_stage(report, g, labeling, "H3 (mod-4 triples)",
                       {SumConstraint::one_of({small, big}),
                        SumConstraint::residue_not(4, 2), bad});

  // Multiples of 4 on H1: the smallest to the bad vertices, then the good
  // ones, each group by increasing partial sum.
  const SumProfile partial = partial_sums(g, labeling);
  std::vector<bool> is_bad(n, false);
  for (std::uint32_t b : bad) is_bad[b] = true;
  const std::vector<std::uint32_t> order = detail::order_by_sum(partial.sums_b);
  Label next_label = 4;
  for (bool bad_pass : {true, false}) {
    for (std::uint32_t b : order) {
      if (is_bad[b] != bad_pass) continue;
      labeling.assign(h1.by_b[b], next_label);
      next_label += 4;
    }
  }

  if (report != nullptr) {
    report->route = "4-regular";
    report->bad_vertices = bad;
    report->bad_after_alternation = after_alternation;
    report->bad_after_paths = after_paths;
  }
  return labeling;
}

}  // namespace detail

Labeling label_4_regular(const BipartiteGraph& graph, ConstructionReport* report) {
  return detail::label_4_regular_phases(graph, report, true);
}

}  // namespace antimagic
