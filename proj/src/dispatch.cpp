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

#include <unordered_map>
#include <utility>

#include "antimagic/constructions.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/factorization.hpp"
#include "antimagic/verification.hpp"

namespace antimagic {
namespace {

// Vertex sums kept with a histogram so the change in the number of
// conflicting pairs under a swap costs O(1).
class SumTracker {
 public:
  SumTracker(const Subgraph& g, const Labeling& labeling)
      : n_(g.part_size()), sums_(2 * std::size_t{g.part_size()}, 0) {
    for (const Edge& e : g.edges()) {
      sums_[e.a] += labeling[e.id];
      sums_[n_ + e.b] += labeling[e.id];
    }
    for (Sum s : sums_) conflicts_ += count_[s]++;
  }

  std::uint64_t conflicts() const { return conflicts_; }

  // Change in conflicting pairs if each listed vertex moves by its delta.
  std::int64_t delta(const std::vector<std::pair<std::size_t, Sum>>& moves) {
    std::int64_t before = static_cast<std::int64_t>(conflicts_);
    apply(moves);
    std::int64_t after = static_cast<std::int64_t>(conflicts_);
    for (const auto& [v, d] : moves) move(v, -d);
    return after - before;
  }

  void apply(const std::vector<std::pair<std::size_t, Sum>>& moves) {
    for (const auto& [v, d] : moves) move(v, d);
  }

  bool conflicting(std::size_t v) const { return count_.at(sums_[v]) > 1; }

 private:
  void move(std::size_t v, Sum d) {
    if (d == 0) return;
    conflicts_ -= --count_[sums_[v]];
    sums_[v] += d;
    conflicts_ += count_[sums_[v]]++;
  }

  std::uint32_t n_;
  std::vector<Sum> sums_;
  std::unordered_map<Sum, std::uint64_t> count_;
  std::uint64_t conflicts_ = 0;
};

}  // namespace

Labeling repair_labeling(const BipartiteGraph& graph, Labeling labeling,
                         const RepairOptions& options) {
  const Subgraph& g = graph.whole();
  if (!labeling.is_complete()) {
    throw Error(ErrorCode::kIncompleteLabeling, "repair needs a complete labeling");
  }
  std::vector<std::size_t> factor_of(g.id_space(), 0);
  if (options.factors != nullptr) {
    for (std::size_t f = 0; f < options.factors->factors.size(); ++f) {
      for (EdgeId e : options.factors->factors[f].by_a) factor_of[e] = f;
    }
  }
  const std::size_t n = g.part_size();
  SumTracker tracker(g, labeling);
  std::uint64_t spent = 0;

  // First-improvement descent on the number of conflicting pairs, trying
  // edges at conflicting vertices first.
  while (tracker.conflicts() > 0) {
    bool improved = false;
    for (const Edge& e1 : g.edges()) {
      if (!tracker.conflicting(e1.a) && !tracker.conflicting(n + e1.b)) continue;
      for (const Edge& e2 : g.edges()) {
        if (e2.id == e1.id) continue;
        if (options.factors != nullptr && factor_of[e1.id] != factor_of[e2.id]) continue;
        const Label l1 = labeling[e1.id];
        const Label l2 = labeling[e2.id];
        if (options.residue_modulus != 0 &&
            l1 % options.residue_modulus != l2 % options.residue_modulus) {
          continue;
        }
        if (spent >= options.budget) {
          throw RepairFailed("repair budget exhausted",
                             verify_antimagic(graph, labeling));
        }
        ++spent;
        const Sum d = static_cast<Sum>(l2) - static_cast<Sum>(l1);
        const std::vector<std::pair<std::size_t, Sum>> moves = {
            {e1.a, d}, {n + e1.b, d}, {e2.a, -d}, {n + e2.b, -d}};
        if (tracker.delta(moves) < 0) {
          tracker.apply(moves);
          labeling.swap_labels(e1.id, e2.id);
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) {
      throw RepairFailed("repair reached a local optimum",
                         verify_antimagic(graph, labeling));
    }
  }
  return labeling;
}

LabelResult label_antimagic(const BipartiteGraph& graph, const LabelOptions& options) {
  ConstructionReport report;
  Labeling labeling = [&] {
    const std::uint32_t k = graph.degree();
    if (k < 2) throw Error(ErrorCode::kDegreeTooSmall, "degree must be at least 2");
    if (k == 2) return label_2_regular(graph, &report);
    if (k == 3) return label_3_regular(graph, &report);
    if (k % 2 == 1) return label_odd_regular(graph, &report);
    if (k == 4) return label_4_regular(graph, &report);
    if (k == 6) return label_6_regular(graph, &report);
    return label_even_ge8(graph, &report);
  }();

  ConflictReport check = verify_antimagic(graph, labeling);
  if (!check.antimagic()) {
    if (!options.allow_repair) {
      throw RepairFailed("construction produced conflicts", std::move(check));
    }
    report.conflicts_before_repair = check;
    // Swaps that keep every label in its factor first, then any swap.
    const Factorization factors = one_factorize(graph.whole());
    RepairOptions within_factors;
    within_factors.factors = &factors;
    try {
      labeling = repair_labeling(graph, labeling, within_factors);
    } catch (const RepairFailed&) {
      labeling = repair_labeling(graph, std::move(labeling), RepairOptions{});
    }
    report.repaired = true;
  }
  return {std::move(labeling), std::move(report)};
}

}  // namespace antimagic
