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
#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

enum class Side : std::uint8_t { kA, kB };

struct Vertex {
  Side side = Side::kA;
  std::uint32_t index = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

enum class ConflictTag { kWithinA, kWithinB, kCross };

struct Conflict {
  Vertex u;
  Vertex v;
  Sum sum = 0;
  ConflictTag tag = ConflictTag::kWithinA;
};

/// Every pair of vertices sharing a vertex-sum. Empty iff antimagic.
struct ConflictReport {
  std::vector<Conflict> conflicts;

  bool antimagic() const noexcept { return conflicts.empty(); }
};

/// Throws kIncompleteLabeling unless the labeling covers every edge.
SumProfile vertex_sums(const BipartiteGraph& graph, const Labeling& labeling);

/// Throws kNotBijective unless the labeling is a bijection onto 1..kn.
ConflictReport verify_antimagic(const BipartiteGraph& graph,
                                const Labeling& labeling);

/// A condition on partial sums, checked vertex by vertex.
struct SumConstraint {
  enum class Kind { kAny, kEquals, kOneOf, kResidueIn, kResidueNot };

  Kind kind = Kind::kAny;
  std::vector<Sum> values;  // kEquals / kOneOf: sums; residue kinds: residues
  std::uint32_t modulus = 0;

  static SumConstraint any() { return {}; }
  static SumConstraint equals(Sum value) { return {Kind::kEquals, {value}, 0}; }
  static SumConstraint one_of(std::vector<Sum> values) {
    return {Kind::kOneOf, std::move(values), 0};
  }
  static SumConstraint residue_in(std::uint32_t modulus,
                                  std::vector<Sum> residues) {
    return {Kind::kResidueIn, std::move(residues), modulus};
  }
  static SumConstraint residue_not(std::uint32_t modulus, Sum residue) {
    return {Kind::kResidueNot, {residue}, modulus};
  }

  bool holds(Sum sum) const;
  std::string describe() const;
};

struct StageInvariant {
  SumConstraint on_a;
  SumConstraint on_b;
  /// B vertices allowed to break `on_b` (the bad vertices of a stage).
  std::vector<std::uint32_t> exempt_b;

  std::string describe() const;
};

struct StageReport {
  std::string stage;
  std::string invariant;
  SumProfile partial;
  std::vector<std::uint32_t> failing_a;
  std::vector<std::uint32_t> failing_b;

  bool passed() const noexcept { return failing_a.empty() && failing_b.empty(); }
};

/// Checks partial sums over the labeled edges of `graph` against `invariant`.
StageReport verify_stage(const Subgraph& graph, const Labeling& partial,
                         std::string stage, const StageInvariant& invariant);

std::string to_json(const ConflictReport& report);
std::string to_json(const StageReport& report);

}  // namespace antimagic
