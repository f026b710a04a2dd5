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

#include "antimagic/oracle.hpp"

#include <algorithm>
#include <set>

#include "antimagic/errors.hpp"

namespace antimagic::oracle {

SimpleGraph SimpleGraph::from_bipartite(const BipartiteGraph& graph) {
  SimpleGraph out;
  const std::uint32_t n = graph.part_size();
  out.vertex_count = 2 * n;
  for (const Edge& e : graph.whole().edges()) out.edges.emplace_back(e.a, n + e.b);
  return out;
}

bool is_antimagic(const SimpleGraph& graph, std::span<const Label> labels) {
  const std::size_t m = graph.edges.size();
  if (labels.size() != m) return false;
  std::vector<bool> seen(m + 1, false);
  for (Label l : labels) {
    if (l == 0 || l > m || seen[l]) return false;
    seen[l] = true;
  }
  std::vector<std::int64_t> sums(graph.vertex_count, 0);
  for (std::size_t i = 0; i < m; ++i) {
    sums[graph.edges[i].first] += labels[i];
    sums[graph.edges[i].second] += labels[i];
  }
  std::set<std::int64_t> distinct(sums.begin(), sums.end());
  return distinct.size() == sums.size();
}

namespace {

// Depth-first search that assigns edge 0, 1, ... in turn, trying labels in
// increasing order. A vertex is checked as soon as its last edge is set.
class Search {
 public:
  Search(const SimpleGraph& graph, std::uint64_t budget, bool count_all)
      : g_(graph),
        budget_(budget),
        count_all_(count_all),
        labels_(graph.edges.size(), 0),
        used_(graph.edges.size() + 1, false),
        sums_(graph.vertex_count, 0),
        closes_at_(graph.edges.size()) {
    std::vector<std::size_t> last(graph.vertex_count, SIZE_MAX);
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      last[graph.edges[i].first] = i;
      last[graph.edges[i].second] = i;
    }
    for (std::uint32_t v = 0; v < graph.vertex_count; ++v) {
      if (last[v] == SIZE_MAX) {
        isolated_.push_back(v);
      } else {
        closes_at_[last[v]].push_back(v);
      }
    }
  }

  // Returns true when a labeling was found and the search should stop.
  bool run() {
    // Isolated vertices all sum to 0.
    if (isolated_.size() > 1) return false;
    if (!isolated_.empty()) closed_.insert(0);
    return step(0);
  }

  std::uint64_t found() const { return found_; }
  const std::vector<Label>& first() const { return first_; }

 private:
  bool step(std::size_t i) {
    if (i == labels_.size()) {
      if (found_++ == 0) first_ = labels_;
      return !count_all_;
    }
    const auto [u, v] = g_.edges[i];
    for (Label l = 1; l <= labels_.size(); ++l) {
      if (used_[l]) continue;
      if (visited_++ >= budget_) {
        throw Error(ErrorCode::kBudgetExhausted, "oracle search budget exhausted");
      }
      used_[l] = true;
      labels_[i] = l;
      sums_[u] += l;
      sums_[v] += l;
      std::vector<std::int64_t> added;
      bool ok = true;
      for (std::uint32_t w : closes_at_[i]) {
        if (!closed_.insert(sums_[w]).second) {
          ok = false;
          break;
        }
        added.push_back(sums_[w]);
      }
      const bool stop = ok && step(i + 1);
      for (std::int64_t s : added) closed_.erase(s);
      sums_[u] -= l;
      sums_[v] -= l;
      labels_[i] = 0;
      used_[l] = false;
      if (stop) return true;
    }
    return false;
  }

  const SimpleGraph& g_;
  std::uint64_t budget_;
  bool count_all_;
  std::vector<Label> labels_;
  std::vector<bool> used_;
  std::vector<std::int64_t> sums_;
  std::vector<std::vector<std::uint32_t>> closes_at_;
  std::vector<std::uint32_t> isolated_;
  std::set<std::int64_t> closed_;
  std::uint64_t visited_ = 0;
  std::uint64_t found_ = 0;
  std::vector<Label> first_;
};

}  // namespace

std::optional<std::vector<Label>> brute_force_search(const SimpleGraph& graph,
                                                     std::uint64_t budget) {
  Search search(graph, budget, false);
  if (!search.run()) return std::nullopt;
  return search.first();
}

std::uint64_t count_antimagic(const SimpleGraph& graph) {
  if (graph.edges.size() > kMaxCountEdges) {
    throw Error(ErrorCode::kInstanceTooLarge, "count_antimagic needs at most 9 edges");
  }
  Search search(graph, UINT64_MAX, true);
  search.run();
  return search.found();
}

}  // namespace antimagic::oracle
