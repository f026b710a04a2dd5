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

#include "antimagic/partitions.hpp"

#include <algorithm>
#include <string>

#include "antimagic/errors.hpp"

namespace antimagic {
namespace {

LabelTriple make_triple(Label x, Label y, Label z, std::uint32_t modulus,
                        int family) {
  LabelTriple t;
  t.labels = {x, y, z};
  t.target_sum = static_cast<Sum>(x) + y + z;
  t.modulus = modulus;
  t.family = family;
  std::array<std::uint32_t, 3> sorted{};
  for (int i = 0; i < 3; ++i) {
    t.residue_signature[i] = t.labels[i] % modulus;
    sorted[i] = t.residue_signature[i];
  }
  std::sort(sorted.begin(), sorted.end());
  const std::array<std::uint32_t, 3> want =
      modulus == 3 ? std::array<std::uint32_t, 3>{0, 1, 2}
                   : std::array<std::uint32_t, 3>{1, 2, 3};
  if (sorted != want) {
    throw Error(ErrorCode::kInternal,
                "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                    std::to_string(z) + ") misses a residue class mod " +
                    std::to_string(modulus));
  }
  return t;
}

}  // namespace

std::vector<Label> residue_labels(std::uint32_t n, std::uint32_t residue,
                                  std::uint32_t modulus) {
  if ((modulus != 3 && modulus != 4) || residue >= modulus) {
    throw Error(ErrorCode::kInvalidArgument, "modulus must be 3 or 4 and residue below it");
  }
  std::vector<Label> out;
  out.reserve(n);
  const Label first = residue == 0 ? modulus : residue;
  for (std::uint32_t i = 0; i < n; ++i) out.push_back(first + i * modulus);
  return out;
}

std::uint32_t like_residue(std::uint32_t m) {
  // 2 is its own inverse mod 3.
  return (2 * ((m + 1) % 3)) % 3;
}

std::vector<LabelPair> pair_partition(std::uint32_t m) {
  if (m == 0 || m % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "pair partition needs a positive even label count, got " +
                    std::to_string(m));
  }
  const std::uint32_t a = like_residue(m);
  std::vector<LabelPair> out;
  out.reserve(m / 2);
  for (Label i = 1; i <= m / 2; ++i) {
    const Label hi = m + 1 - i;
    const bool like = i % 3 == a && hi % 3 == a;
    out.push_back({i, hi, like ? PairKind::kLike : PairKind::kSplit, a});
  }
  return out;
}

Label LabelTriple::with_residue(std::uint32_t residue) const {
  for (Label l : labels) {
    if (l % modulus == residue) return l;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "triple has no label in class " + std::to_string(residue));
}

std::vector<LabelTriple> triple_partition_mod3(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  std::vector<LabelTriple> out;
  out.reserve(n);
  // Signed arithmetic: 3n - 6i + 1 is evaluated only where it stays positive.
  const auto N = static_cast<std::int64_t>(n);
  auto L = [](std::int64_t v) { return static_cast<Label>(v); };
  if (n % 2 == 0) {
    for (std::int64_t i = 1; i <= N / 2; ++i) {
      out.push_back(make_triple(L(3 * N - 3 * i + 3), L(3 * N - 3 * i + 2),
                                L(6 * i - 2), 3, 1));
    }
    for (std::int64_t i = 1; i <= N / 2; ++i) {
      out.push_back(make_triple(L(3 * i), L(3 * i - 1), L(3 * N - 6 * i + 1), 3, 2));
    }
  } else {
    for (std::int64_t i = 1; i <= (N + 1) / 2; ++i) {
      out.push_back(make_triple(L(3 * N - 3 * i + 3), L(3 * N - 3 * i + 2),
                                L(6 * i - 5), 3, 1));
    }
    for (std::int64_t i = 1; i <= N / 2; ++i) {
      out.push_back(make_triple(L(3 * i), L(3 * i - 1), L(3 * N - 6 * i + 1), 3, 2));
    }
  }
  return out;
}

std::vector<LabelTriple> triple_partition_mod4(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  std::vector<LabelTriple> out;
  out.reserve(n);
  const auto N = static_cast<std::int64_t>(n);
  auto L = [](std::int64_t v) { return static_cast<Label>(v); };
  const std::int64_t first_count = n % 2 == 0 ? N / 2 : (N + 1) / 2;
  const std::int64_t first_shift = n % 2 == 0 ? 3 : 7;
  for (std::int64_t i = 1; i <= first_count; ++i) {
    out.push_back(make_triple(L(8 * i - first_shift), L(4 * N - 4 * i + 2),
                              L(4 * N - 4 * i + 3), 4, 1));
  }
  for (std::int64_t i = 1; i <= N / 2; ++i) {
    out.push_back(make_triple(L(4 * N - 8 * i + 1), L(4 * i - 2), L(4 * i - 1), 4, 2));
  }
  return out;
}

}  // namespace antimagic
