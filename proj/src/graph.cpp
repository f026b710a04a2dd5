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

#include "antimagic/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "antimagic/errors.hpp"

namespace antimagic {

Subgraph Subgraph::from_edges(std::uint32_t n, std::uint32_t id_space,
                              std::vector<Edge> edges) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "part size must be >= 1");
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return x.id < y.id; });

  Subgraph g;
  g.n_ = n;
  g.id_space_ = id_space;
  g.slot_of_id_.assign(id_space, -1);

  std::vector<std::uint32_t> deg_a(n, 0), deg_b(n, 0);
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.a >= n || e.b >= n) {
      throw Error(ErrorCode::kOutOfRange,
                  "vertex index out of range in edge " + std::to_string(e.a) +
                      " " + std::to_string(e.b));
    }
    if (e.id >= id_space) {
      throw Error(ErrorCode::kOutOfRange, "edge id out of range");
    }
    if (g.slot_of_id_[e.id] != -1) {
      throw Error(ErrorCode::kInvalidArgument, "repeated edge id");
    }
    if (!seen.emplace(e.a, e.b).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge " + std::to_string(e.a) + " " +
                      std::to_string(e.b));
    }
    g.slot_of_id_[e.id] = static_cast<std::int32_t>(i);
    ++deg_a[e.a];
    ++deg_b[e.b];
  }

  const std::uint32_t d = deg_a[0];
  for (std::uint32_t v = 0; v < n; ++v) {
    if (deg_a[v] != d || deg_b[v] != d) {
      throw Error(ErrorCode::kNotRegular, "degree sequence is not regular");
    }
  }
  if (d == 0) throw Error(ErrorCode::kNotRegular, "subgraph has no edges");
  g.degree_ = d;

  g.inc_a_.resize(static_cast<std::size_t>(n) * d);
  g.inc_b_.resize(static_cast<std::size_t>(n) * d);
  std::vector<std::uint32_t> fill_a(n, 0), fill_b(n, 0);
  for (const Edge& e : edges) {
    g.inc_a_[static_cast<std::size_t>(e.a) * d + fill_a[e.a]++] = e.id;
    g.inc_b_[static_cast<std::size_t>(e.b) * d + fill_b[e.b]++] = e.id;
  }
  g.edges_ = std::move(edges);
  return g;
}

const Edge& Subgraph::edge(EdgeId id) const {
  if (!contains(id)) throw Error(ErrorCode::kOutOfRange, "edge id not present");
  return edges_[static_cast<std::size_t>(slot_of_id_[id])];
}

bool Subgraph::contains(EdgeId id) const {
  return id < id_space_ && slot_of_id_[id] != -1;
}

std::span<const EdgeId> Subgraph::incident_a(std::uint32_t a) const {
  return std::span<const EdgeId>(inc_a_).subspan(
      static_cast<std::size_t>(a) * degree_, degree_);
}

std::span<const EdgeId> Subgraph::incident_b(std::uint32_t b) const {
  return std::span<const EdgeId>(inc_b_).subspan(
      static_cast<std::size_t>(b) * degree_, degree_);
}

BipartiteGraph BipartiteGraph::from_pairs(
    std::uint32_t n, std::uint32_t k,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs) {
  if (k < 2) {
    throw Error(ErrorCode::kDegreeTooSmall,
                "degree must be at least 2 (K2 components are not antimagic)");
  }
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "part size must be >= 1");
  const std::size_t expected = static_cast<std::size_t>(n) * k;
  if (pairs.size() != expected) {
    throw Error(ErrorCode::kNotRegular,
                "expected " + std::to_string(expected) + " edges, got " +
                    std::to_string(pairs.size()));
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges.push_back({pairs[i].first, pairs[i].second,
                     static_cast<EdgeId>(i)});
  }
  Subgraph whole = Subgraph::from_edges(n, static_cast<std::uint32_t>(expected),
                                        std::move(edges));
  if (whole.degree() != k) {
    throw Error(ErrorCode::kNotRegular, "degree sequence does not match k");
  }
  return BipartiteGraph(std::move(whole));
}

Labeling::Labeling(std::size_t edge_count)
    : labels_(edge_count, kUnlabeled), used_(edge_count + 1, false) {}

Labeling Labeling::from_labels(std::vector<Label> labels) {
  Labeling out(labels.size());
  for (std::size_t e = 0; e < labels.size(); ++e) {
    const Label l = labels[e];
    if (l == kUnlabeled || l > labels.size() || out.used_[l]) {
      throw Error(ErrorCode::kNotBijective,
                  "labels are not a permutation of 1.." +
                      std::to_string(labels.size()));
    }
    out.used_[l] = true;
  }
  out.labels_ = std::move(labels);
  out.assigned_count_ = out.labels_.size();
  return out;
}

void Labeling::assign(EdgeId e, Label label) {
  if (e >= labels_.size()) throw Error(ErrorCode::kOutOfRange, "edge id out of range");
  if (label == kUnlabeled || label > labels_.size()) {
    throw Error(ErrorCode::kOutOfRange, "label " + std::to_string(label) +
                                            " outside 1.." +
                                            std::to_string(labels_.size()));
  }
  if (labels_[e] != kUnlabeled) {
    throw Error(ErrorCode::kNotBijective,
                "edge " + std::to_string(e) + " already labeled");
  }
  if (used_[label]) {
    throw Error(ErrorCode::kNotBijective,
                "label " + std::to_string(label) + " used twice");
  }
  labels_[e] = label;
  used_[label] = true;
  ++assigned_count_;
}

void Labeling::swap_labels(EdgeId e1, EdgeId e2) {
  std::swap(labels_.at(e1), labels_.at(e2));
}

SumProfile partial_sums(const Subgraph& graph, const Labeling& labeling) {
  SumProfile out{std::vector<Sum>(graph.part_size(), 0),
                 std::vector<Sum>(graph.part_size(), 0)};
  for (const Edge& e : graph.edges()) {
    const Label l = labeling[e.id];
    out.sums_a[e.a] += l;
    out.sums_b[e.b] += l;
  }
  return out;
}

}  // namespace antimagic
