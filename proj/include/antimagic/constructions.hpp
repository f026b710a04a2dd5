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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/factorization.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/verification.hpp"

namespace antimagic {

/// What a construction did on its way to a labeling: which route ran, the
/// partial-sum invariant of every phase, and the bad B vertices where the
/// construction has them.
struct ConstructionReport {
  std::string route;
  std::vector<StageReport> stages;
  /// Bad B vertices of the final labeling (3- and 4-regular routes).
  std::vector<std::uint32_t> bad_vertices;
  /// 4-regular only: bad count after the residue alternation and after the
  /// bad-path swaps.
  std::size_t bad_after_alternation = 0;
  std::size_t bad_after_paths = 0;
  /// Set when a phase could not meet its invariant and fell back to a plain
  /// assignment; the final verification then decides.
  bool invariant_fallback = false;
  bool repaired = false;
  std::optional<ConflictReport> conflicts_before_repair;

  bool stages_passed() const;
};

/// Labels 1..length around a cycle: 1, 3, 5, ... up the odd labels, then
/// back down the even ones, with the two largest swapped in the middle when
/// length is even. Entry i is the label of the i-th edge; the vertex between
/// edges i and i+1 gets their sum.
std::vector<Label> label_cycle(std::uint32_t length);

struct LabeledComponent {
  std::uint32_t degree = 0;
  std::vector<EdgeId> edges;  // host ids
  std::vector<Label> labels;  // a labeling of the component onto 1..edges.size()
};

/// Shifts each component's labels by the edge count of the components placed
/// before it, lower degrees first. Throws kInvalidArgument if a component
/// is not labeled onto 1..|E|.
Labeling compose_disjoint_union(std::vector<LabeledComponent> components,
                                std::size_t id_space);

Labeling label_2_regular(const BipartiteGraph& graph,
                         ConstructionReport* report = nullptr);

Labeling label_3_regular(const BipartiteGraph& graph,
                         ConstructionReport* report = nullptr);

struct KeyLemmaState {
  std::uint32_t l = 0;
  std::uint32_t m = 0;         // largest label, (2l+2)n
  Sum t = 0;                   // common A-sum, (m+1)(l+1)
  std::uint32_t a = 0;         // m+1 = 2a (mod 3)
  std::optional<std::uint32_t> x;  // B vertices where the mixed cycle of
  std::optional<std::uint32_t> y;  // the 2l-factor switches pair kind
  int t1 = 0;                  // their deviation from (m+1)l, mod 3
  int t2 = 0;
  bool invariant_met = true;
};

struct KeyLemmaResult {
  Labeling labeling;  // over the host id space, labels 1..m on h's edges
  KeyLemmaState state;
};

/// Labels a (2l+2)-regular subgraph with 1..(2l+2)n so that every A-sum is
/// t = (m+1)(l+1) and no B-sum is congruent to t mod 3.
KeyLemmaResult label_key_lemma(const Subgraph& h);

/// Labels a 3-regular subgraph with offset+1..offset+3n. With b_i the i-th
/// entry of `b_order` (1-based), the sum at b_i is 3n+3i+3*offset and the
/// A-sums form the same multiset. The labeling holds labels up to
/// max(id space, offset + 3n).
Labeling label_3_factor_shifted(const Subgraph& h3,
                                std::span<const std::uint32_t> b_order,
                                Label offset);

Labeling label_odd_regular(const BipartiteGraph& graph,
                           ConstructionReport* report = nullptr);
Labeling label_even_ge8(const BipartiteGraph& graph,
                        ConstructionReport* report = nullptr);
Labeling label_6_regular(const BipartiteGraph& graph,
                         ConstructionReport* report = nullptr);
Labeling label_4_regular(const BipartiteGraph& graph,
                         ConstructionReport* report = nullptr);

struct RepairOptions {
  /// Swaps only between labels congruent modulo this (0: any labels).
  std::uint32_t residue_modulus = 0;
  /// Swaps only between edges of the same factor, when given.
  const Factorization* factors = nullptr;
  /// Maximum number of candidate swaps evaluated.
  std::uint64_t budget = 200000;
};

class RepairFailed : public Error {
 public:
  RepairFailed(const std::string& what, ConflictReport report)
      : Error(ErrorCode::kRepairFailed, what), report_(std::move(report)) {}

  const ConflictReport& report() const noexcept { return report_; }

 private:
  ConflictReport report_;
};

/// Deterministic hill climbing over label swaps until no two vertices share
/// a sum. Throws RepairFailed carrying the remaining conflicts when the
/// budget runs out.
Labeling repair_labeling(const BipartiteGraph& graph, Labeling labeling,
                         const RepairOptions& options);

struct LabelOptions {
  bool allow_repair = true;
};

struct LabelResult {
  Labeling labeling;
  ConstructionReport report;
};

/// Dispatches on the degree, verifies the result and repairs it if needed.
/// The returned labeling is always antimagic.
LabelResult label_antimagic(const BipartiteGraph& graph,
                            const LabelOptions& options = {});

}  // namespace antimagic
