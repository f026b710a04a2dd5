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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace antimagic {

using EdgeId = std::uint32_t;
using Label = std::uint32_t;
using Sum = std::int64_t;

/// Label value meaning "not yet assigned" inside a Labeling.
inline constexpr Label kUnlabeled = 0;

struct Edge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  EdgeId id = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A regular spanning subgraph of some bipartite host. Edge ids come from the
/// host's id space, so labels written against a Subgraph land on the right
/// host edges.
class Subgraph {
 public:
  /// Validates that every vertex on both sides has the same degree, that
  /// indices and ids are in range, and that no pair repeats.
  static Subgraph from_edges(std::uint32_t n, std::uint32_t id_space,
                             std::vector<Edge> edges);

  std::uint32_t part_size() const noexcept { return n_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t id_space() const noexcept { return id_space_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Edges sorted by id.
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const;
  bool contains(EdgeId id) const;

  /// Incident edge ids in increasing id order.
  std::span<const EdgeId> incident_a(std::uint32_t a) const;
  std::span<const EdgeId> incident_b(std::uint32_t b) const;

 private:
  Subgraph() = default;

  std::uint32_t n_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t id_space_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> slot_of_id_;  // -1 when id is not in this subgraph
  std::vector<EdgeId> inc_a_;             // n * degree, row per vertex
  std::vector<EdgeId> inc_b_;
};

/// A simple k-regular bipartite graph with parts A and B of size n and edge
/// ids 0..kn-1 in input order. k >= 2.
class BipartiteGraph {
 public:
  static BipartiteGraph from_pairs(
      std::uint32_t n, std::uint32_t k,
      std::span<const std::pair<std::uint32_t, std::uint32_t>> pairs);

  std::uint32_t part_size() const noexcept { return whole_.part_size(); }
  std::uint32_t degree() const noexcept { return whole_.degree(); }
  std::size_t edge_count() const noexcept { return whole_.edge_count(); }
  std::span<const Edge> edges() const noexcept { return whole_.edges(); }
  const Edge& edge(EdgeId id) const { return whole_.edge(id); }
  std::span<const EdgeId> incident_a(std::uint32_t a) const {
    return whole_.incident_a(a);
  }
  std::span<const EdgeId> incident_b(std::uint32_t b) const {
    return whole_.incident_b(b);
  }

  const Subgraph& whole() const noexcept { return whole_; }

  friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) {
    return x.part_size() == y.part_size() && x.degree() == y.degree() &&
           std::equal(x.edges().begin(), x.edges().end(), y.edges().begin(),
                      y.edges().end());
  }

 private:
  explicit BipartiteGraph(Subgraph whole) : whole_(std::move(whole)) {}

  Subgraph whole_;
};

/// Edge-id indexed label assignment. Assigned labels are pairwise distinct
/// and lie in 1..size(); unassigned entries hold kUnlabeled.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::size_t edge_count);

  /// Builds a complete labeling; throws kNotBijective unless `labels` is a
  /// permutation of 1..labels.size().
  static Labeling from_labels(std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  Label operator[](EdgeId e) const { return labels_.at(e); }
  bool assigned(EdgeId e) const { return labels_.at(e) != kUnlabeled; }
  std::size_t assigned_count() const noexcept { return assigned_count_; }
  bool is_complete() const noexcept { return assigned_count_ == size(); }
  std::span<const Label> raw() const noexcept { return labels_; }

  void assign(EdgeId e, Label label);
  void swap_labels(EdgeId e1, EdgeId e2);

  friend bool operator==(const Labeling& x, const Labeling& y) {
    return x.labels_ == y.labels_;
  }

 private:
  std::vector<Label> labels_;
  std::vector<bool> used_;  // indexed by label
  std::size_t assigned_count_ = 0;
};

struct SumProfile {
  std::vector<Sum> sums_a;
  std::vector<Sum> sums_b;

  friend bool operator==(const SumProfile&, const SumProfile&) = default;
};

/// Sums over the labeled edges of `graph` only; unlabeled edges add nothing.
SumProfile partial_sums(const Subgraph& graph, const Labeling& labeling);

enum class Format { kEdgeList, kJson, kDot };

std::optional<Format> format_from_name(std::string_view name);

/// Reads the `bipartite <n> <k>` edge-list document. A third integer column
/// (label) is tolerated and ignored.
BipartiteGraph parse_graph(std::string_view text);

/// Reads a labeling for `graph` from a JSON export, a labeled edge list, or a
/// bare whitespace-separated list of labels in edge-id order.
Labeling parse_labeling(const BipartiteGraph& graph, std::string_view text);

/// Deterministic serialization. A labeling, when given, must be complete.
std::string export_graph(const BipartiteGraph& graph,
                         const Labeling* labeling, Format format);

}  // namespace antimagic
