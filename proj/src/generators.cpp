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

#include "antimagic/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

constexpr int kResampleCap = 10000;

// mt19937_64's output sequence is fixed by the standard; the distributions
// are not, so bounded draws and shuffles are done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

BipartiteGraph sorted_graph(std::uint32_t n, std::uint32_t k, Pairs pairs) {
  std::sort(pairs.begin(), pairs.end());
  return BipartiteGraph::from_pairs(n, k, pairs);
}

// Randomized Kuhn matching restricted to pairs not yet used. The unused pairs
// form an (n - r)-regular bipartite graph, so a perfect matching exists.
std::vector<std::uint32_t> complement_matching(
    std::uint32_t n, const std::vector<std::vector<bool>>& used, Rng& rng) {
  std::vector<std::vector<std::uint32_t>> cand(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      if (!used[a][b]) cand[a].push_back(b);
    }
    rng.shuffle(cand[a]);
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  rng.shuffle(order);

  constexpr std::uint32_t kFree = UINT32_MAX;
  std::vector<std::uint32_t> owner(n, kFree);
  std::vector<std::uint32_t> mate(n, kFree);
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::uint32_t a) -> bool {
    for (std::uint32_t b : cand[a]) {
      if (visited[b]) continue;
      visited[b] = 1;
      if (owner[b] == kFree || self(self, owner[b])) {
        owner[b] = a;
        mate[a] = b;
        return true;
      }
    }
    return false;
  };
  for (std::uint32_t a : order) {
    visited.assign(n, 0);
    if (!augment(augment, a)) {
      throw Error(ErrorCode::kGenerationFailed,
                  "complement has no perfect matching");
    }
  }
  return mate;
}

}  // namespace

BipartiteGraph gen_regular_bipartite(std::uint32_t n, std::uint32_t k,
                                     std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::kDegreeTooSmall, "degree must be at least 2");
  if (k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "a simple k-regular bipartite graph needs k <= n (k=" +
                    std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  Rng rng(seed);
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  Pairs pairs;
  pairs.reserve(static_cast<std::size_t>(n) * k);
  int resamples = 0;

  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t round = 0; round < k; ++round) {
    bool accepted = false;
    while (!accepted && resamples < kResampleCap) {
      std::iota(perm.begin(), perm.end(), 0u);
      rng.shuffle(perm);
      accepted = true;
      for (std::uint32_t a = 0; a < n && accepted; ++a) {
        accepted = !used[a][perm[a]];
      }
      if (!accepted) ++resamples;
    }
    if (!accepted) perm = complement_matching(n, used, rng);
    for (std::uint32_t a = 0; a < n; ++a) {
      used[a][perm[a]] = true;
      pairs.emplace_back(a, perm[a]);
    }
  }
  return sorted_graph(n, k, std::move(pairs));
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "cycle") return Family::kCycle;
  if (name == "complete_bipartite") return Family::kCompleteBipartite;
  if (name == "hypercube3") return Family::kHypercube3;
  if (name == "crown") return Family::kCrown;
  return std::nullopt;
}

BipartiteGraph gen_named(Family family, std::uint32_t n) {
  Pairs pairs;
  switch (family) {
    case Family::kCycle:
      if (n < 2) {
        throw Error(ErrorCode::kInvalidArgument,
                    "cycle needs n >= 2 (even length >= 4)");
      }
      for (std::uint32_t i = 0; i < n; ++i) {
        pairs.emplace_back(i, i);
        pairs.emplace_back((i + 1) % n, i);
      }
      return sorted_graph(n, 2, std::move(pairs));
    case Family::kCompleteBipartite:
      if (n < 2) throw Error(ErrorCode::kInvalidArgument, "K_{n,n} needs n >= 2");
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
      }
      return sorted_graph(n, n, std::move(pairs));
    case Family::kHypercube3: {
      if (n != 4) throw Error(ErrorCode::kInvalidArgument, "hypercube3 has n = 4");
      std::vector<std::uint32_t> index(8);
      std::uint32_t even = 0, odd = 0;
      for (std::uint32_t v = 0; v < 8; ++v) {
        index[v] = (std::popcount(v) % 2 == 0) ? even++ : odd++;
      }
      for (std::uint32_t v = 0; v < 8; ++v) {
        if (std::popcount(v) % 2 != 0) continue;
        for (std::uint32_t bit = 0; bit < 3; ++bit) {
          pairs.emplace_back(index[v], index[v ^ (1u << bit)]);
        }
      }
      return sorted_graph(4, 3, std::move(pairs));
    }
    case Family::kCrown:
      if (n < 3) throw Error(ErrorCode::kInvalidArgument, "crown needs n >= 3");
      for (std::uint32_t a = 0; a < n; ++a) {
        for (std::uint32_t b = 0; b < n; ++b) {
          if (a != b) pairs.emplace_back(a, b);
        }
      }
      return sorted_graph(n, n - 1, std::move(pairs));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

}  // namespace antimagic
