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

#include "antimagic/verification.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

using Json = nlohmann::ordered_json;

Sum residue(Sum value, std::uint32_t modulus) {
  const Sum m = static_cast<Sum>(modulus);
  return ((value % m) + m) % m;
}

std::string join(const std::vector<Sum>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out << ',';
    out << values[i];
  }
  return out.str();
}

const char* side_name(Side s) { return s == Side::kA ? "A" : "B"; }

const char* tag_name(ConflictTag t) {
  switch (t) {
    case ConflictTag::kWithinA: return "within-A";
    case ConflictTag::kWithinB: return "within-B";
    case ConflictTag::kCross: return "cross";
  }
  return "?";
}

}  // namespace

SumProfile vertex_sums(const BipartiteGraph& graph, const Labeling& labeling) {
  if (labeling.size() != graph.edge_count() || !labeling.is_complete()) {
    throw Error(ErrorCode::kIncompleteLabeling,
                "vertex sums need a complete labeling");
  }
  return partial_sums(graph.whole(), labeling);
}

ConflictReport verify_antimagic(const BipartiteGraph& graph,
                                const Labeling& labeling) {
  if (labeling.size() != graph.edge_count() || !labeling.is_complete()) {
    throw Error(ErrorCode::kNotBijective,
                "labeling is not a bijection onto 1.." +
                    std::to_string(graph.edge_count()));
  }
  const SumProfile sums = partial_sums(graph.whole(), labeling);

  std::map<Sum, std::vector<Vertex>> by_sum;
  for (std::uint32_t v = 0; v < graph.part_size(); ++v) {
    by_sum[sums.sums_a[v]].push_back({Side::kA, v});
  }
  for (std::uint32_t v = 0; v < graph.part_size(); ++v) {
    by_sum[sums.sums_b[v]].push_back({Side::kB, v});
  }
  ConflictReport report;
  for (const auto& [sum, group] : by_sum) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const Vertex u = group[i], v = group[j];
        ConflictTag tag = ConflictTag::kCross;
        if (u.side == v.side) {
          tag = u.side == Side::kA ? ConflictTag::kWithinA : ConflictTag::kWithinB;
        }
        report.conflicts.push_back({u, v, sum, tag});
      }
    }
  }
  return report;
}

bool SumConstraint::holds(Sum sum) const {
  switch (kind) {
    case Kind::kAny:
      return true;
    case Kind::kEquals:
    case Kind::kOneOf:
      return std::find(values.begin(), values.end(), sum) != values.end();
    case Kind::kResidueIn:
      return std::find(values.begin(), values.end(), residue(sum, modulus)) !=
             values.end();
    case Kind::kResidueNot:
      return residue(sum, modulus) != residue(values.at(0), modulus);
  }
  return false;
}

std::string SumConstraint::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kAny: out << "any"; break;
    case Kind::kEquals: out << "= " << values.at(0); break;
    case Kind::kOneOf: out << "in {" << join(values) << "}"; break;
    case Kind::kResidueIn:
      out << "mod " << modulus << " in {" << join(values) << "}";
      break;
    case Kind::kResidueNot:
      out << "!= " << residue(values.at(0), modulus) << " mod " << modulus;
      break;
  }
  return out.str();
}

std::string StageInvariant::describe() const {
  std::string out = "A " + on_a.describe() + "; B " + on_b.describe();
  if (!exempt_b.empty()) {
    out += " except " + std::to_string(exempt_b.size()) + " bad";
  }
  return out;
}

StageReport verify_stage(const Subgraph& graph, const Labeling& partial,
                         std::string stage, const StageInvariant& invariant) {
  StageReport report;
  report.stage = std::move(stage);
  report.invariant = invariant.describe();
  report.partial = partial_sums(graph, partial);
  std::vector<bool> exempt(graph.part_size(), false);
  for (std::uint32_t b : invariant.exempt_b) exempt.at(b) = true;
  for (std::uint32_t v = 0; v < graph.part_size(); ++v) {
    if (!invariant.on_a.holds(report.partial.sums_a[v])) report.failing_a.push_back(v);
    if (!exempt[v] && !invariant.on_b.holds(report.partial.sums_b[v])) {
      report.failing_b.push_back(v);
    }
  }
  return report;
}

std::string to_json(const ConflictReport& report) {
  Json doc;
  doc["antimagic"] = report.antimagic();
  Json list = Json::array();
  for (const Conflict& c : report.conflicts) {
    list.push_back({{"u", std::string(side_name(c.u.side)) + std::to_string(c.u.index)},
                    {"v", std::string(side_name(c.v.side)) + std::to_string(c.v.index)},
                    {"sum", c.sum},
                    {"kind", tag_name(c.tag)}});
  }
  doc["conflicts"] = std::move(list);
  return doc.dump();
}

std::string to_json(const StageReport& report) {
  Json doc;
  doc["stage"] = report.stage;
  doc["invariant"] = report.invariant;
  doc["passed"] = report.passed();
  doc["partial_A"] = report.partial.sums_a;
  doc["partial_B"] = report.partial.sums_b;
  doc["failing_A"] = report.failing_a;
  doc["failing_B"] = report.failing_b;
  return doc.dump();
}

}  // namespace antimagic
