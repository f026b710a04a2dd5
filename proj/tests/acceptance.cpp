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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antimagic/constructions.hpp"
#include "antimagic/factorization.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/partitions.hpp"
#include "antimagic/verification.hpp"

namespace am = antimagic;

namespace {

// Pinned thresholds.
constexpr std::uint32_t kMinDegree = 2;
constexpr std::uint32_t kMaxDegree = 10;
constexpr std::uint32_t kMaxPart = 30;
constexpr std::uint32_t kSeedsPerPair = 20;
constexpr double kCorpusSecondsLimit = 60.0;
constexpr std::uint32_t kPartitionMaxN = 2000;
constexpr std::uint32_t kLemmaMinN = 3;
constexpr std::uint32_t kLemmaMaxN = 20;
constexpr std::uint32_t kLemmaSeeds = 20;
constexpr std::uint32_t kFourRegularSlack = 1;
constexpr std::size_t kOracleMaxEdges = 9;
constexpr std::uint64_t kOracleBudget = 100'000'000;
constexpr std::uint32_t kDeterminismSeeds = 3;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> notes;
};

void print(int id, const std::string& name, const Outcome& o) {
  std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(),
              o.detail.c_str());
  for (const auto& note : o.notes) std::printf("       %s\n", note.c_str());
}

std::string instance(std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k) +
         " seed=" + std::to_string(seed);
}

void note_failure(Outcome& o, const std::string& what) {
  o.pass = false;
  if (o.notes.size() < 10) o.notes.push_back(what);
}

bool is_bijection(const am::Labeling& labeling) {
  std::vector<am::Label> sorted(labeling.raw().begin(), labeling.raw().end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i + 1) return false;
  }
  return true;
}

std::string factorization_error(const am::Subgraph& g, const am::Factorization& f) {
  if (f.factors.size() != g.degree()) return "wrong number of factors";
  std::vector<int> cover(g.id_space(), 0);
  for (const auto& m : f.factors) {
    std::set<std::uint32_t> as, bs;
    if (m.by_a.size() != g.part_size()) return "matching size";
    for (am::EdgeId e : m.by_a) {
      if (!g.contains(e)) return "foreign edge";
      as.insert(g.edge(e).a);
      bs.insert(g.edge(e).b);
      ++cover[e];
    }
    if (as.size() != g.part_size() || bs.size() != g.part_size()) {
      return "not a perfect matching";
    }
  }
  for (const am::Edge& e : g.edges()) {
    if (cover[e.id] != 1) return "edge covered " + std::to_string(cover[e.id]) + " times";
  }
  return "";
}

// Criteria 1, 5, 6, 8 and 10 share the corpus walk.
struct CorpusResults {
  Outcome end_to_end, three_regular, four_regular, factorization, repair;
};

CorpusResults run_corpus() {
  CorpusResults r;
  std::size_t instances = 0, failures = 0, repaired = 0;
  std::size_t three_count = 0, four_count = 0, slack_used = 0;
  std::size_t max_bad4 = 0, worst_bad_sum_margin_n = 0;
  std::size_t bad4_total = 0, bad4_alternation = 0, bad4_paths = 0;
  std::size_t stage_failures = 0, fallbacks = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::uint32_t k = kMinDegree; k <= kMaxDegree; ++k) {
    for (std::uint32_t n = std::max(k, 3u); n <= kMaxPart; ++n) {
      for (std::uint64_t seed = 0; seed < kSeedsPerPair; ++seed) {
        ++instances;
        const am::BipartiteGraph g = am::gen_regular_bipartite(n, k, seed);
        const std::string err = factorization_error(g.whole(), am::one_factorize(g.whole()));
        if (!err.empty()) note_failure(r.factorization, instance(n, k, seed) + ": " + err);

        am::LabelResult result;
        try {
          result = am::label_antimagic(g);
        } catch (const std::exception& e) {
          ++failures;
          note_failure(r.end_to_end, instance(n, k, seed) + ": " + e.what());
          continue;
        }
        const bool ok = is_bijection(result.labeling) &&
                        am::verify_antimagic(g, result.labeling).antimagic();
        if (!ok) {
          ++failures;
          note_failure(r.end_to_end, instance(n, k, seed) + ": not antimagic");
        }
        if (result.report.repaired) {
          ++repaired;
          std::ostringstream why;
          why << instance(n, k, seed) << ": repair invoked, route "
              << result.report.route;
          for (const auto& s : result.report.stages) {
            if (!s.passed()) why << "; stage '" << s.stage << "' failed";
          }
          note_failure(r.repair, why.str());
        }

        if (!result.report.stages_passed()) ++stage_failures;
        if (result.report.invariant_fallback) ++fallbacks;
        const am::SumProfile sums = am::vertex_sums(g, result.labeling);
        if (k == 3) {
          ++three_count;
          const std::size_t bad = result.report.bad_vertices.size();
          if (bad > n / 3) {
            note_failure(r.three_regular, instance(n, k, seed) + ": " +
                                              std::to_string(bad) + " bad vertices");
          }
          std::vector<am::Sum> a = sums.sums_a;
          std::sort(a.begin(), a.end());
          for (std::uint32_t i = 0; i < n; ++i) {
            if (a[i] != 3 * am::Sum{n} + 3 * (i + 1)) {
              note_failure(r.three_regular, instance(n, k, seed) + ": A sums differ");
              break;
            }
          }
        }
        if (k == 4) {
          ++four_count;
          const auto& bad = result.report.bad_vertices;
          bad4_total += bad.size();
          bad4_alternation += result.report.bad_after_alternation;
          bad4_paths += result.report.bad_after_paths;
          max_bad4 = std::max(max_bad4, bad.size());
          if (bad.size() > n / 9 + kFourRegularSlack) {
            note_failure(r.four_regular, instance(n, k, seed) + ": " +
                                             std::to_string(bad.size()) + " bad vertices");
          } else if (bad.size() > n / 9) {
            ++slack_used;
            r.four_regular.notes.push_back("slack used at " + instance(n, k, seed) +
                                           ": " + std::to_string(bad.size()) +
                                           " bad vertices, floor(n/9)=" +
                                           std::to_string(n / 9));
          }
          for (std::uint32_t b : bad) {
            if (sums.sums_b[b] >= 3 * am::Sum{n}) {
              note_failure(r.four_regular, instance(n, k, seed) + ": bad vertex sum " +
                                               std::to_string(sums.sums_b[b]) +
                                               " >= 3n");
            }
            worst_bad_sum_margin_n = std::max<std::size_t>(worst_bad_sum_margin_n, sums.sums_b[b]);
          }
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= kCorpusSecondsLimit) r.end_to_end.pass = false;

  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu instances, %zu failures, %.2f s (limit %.0f s)",
                instances, failures, seconds, kCorpusSecondsLimit);
  r.end_to_end.detail = buf;
  r.end_to_end.notes.push_back(std::to_string(stage_failures) +
                               " instances with a failed stage check, " +
                               std::to_string(fallbacks) + " with a fallback phase");
  r.factorization.detail = std::to_string(instances) + " factorizations checked";
  r.repair.detail = std::to_string(repaired) + " repair invocations over " +
                    std::to_string(instances) + " instances (none whitelisted)";
  r.three_regular.detail = std::to_string(three_count) + " 3-regular instances";
  std::snprintf(buf, sizeof buf,
                "%zu 4-regular instances, max bad count %zu, slack used %zu times, "
                "largest bad-vertex sum %zu",
                four_count, max_bad4, slack_used, worst_bad_sum_margin_n);
  r.four_regular.detail = buf;
  r.four_regular.notes.push_back(
      "total bad vertices after alternation " + std::to_string(bad4_alternation) +
      ", after bad paths " + std::to_string(bad4_paths) + ", final " +
      std::to_string(bad4_total));
  return r;
}

Outcome check_partitions() {
  Outcome o;
  for (std::uint32_t n = 1; n <= kPartitionMaxN; ++n) {
    for (int which : {3, 4}) {
      const auto triples = which == 3 ? am::triple_partition_mod3(n) : am::triple_partition_mod4(n);
      const am::Sum N = n;
      std::set<am::Sum> sums_allowed;
      std::vector<bool> seen(4 * n + 1, false);
      if (which == 3) {
        sums_allowed = {3 * N, n % 2 == 0 ? 6 * N + 3 : 6 * N};
      } else {
        sums_allowed = {4 * N - 2, n % 2 == 0 ? 8 * N + 2 : 8 * N - 2};
      }
      bool ok = triples.size() == n;
      for (const auto& t : triples) {
        std::set<std::uint32_t> residues;
        am::Sum s = 0;
        for (am::Label l : t.labels) {
          const am::Label limit = which == 3 ? 3 * n : 4 * n - 1;
          if (l == 0 || l > limit || seen[l] || (which == 4 && l % 4 == 0)) ok = false;
          if (l <= 4 * n) seen[l] = true;
          residues.insert(l % which);
          s += l;
        }
        if (!sums_allowed.count(s) || s != t.target_sum) ok = false;
        const std::set<std::uint32_t> want =
            which == 3 ? std::set<std::uint32_t>{0, 1, 2} : std::set<std::uint32_t>{1, 2, 3};
        if (residues != want) ok = false;
      }
      if (!ok) {
        note_failure(o, "mod " + std::to_string(which) + " n=" + std::to_string(n));
      }
    }
  }
  o.detail = "n = 1.." + std::to_string(kPartitionMaxN) + ", both moduli";
  return o;
}

Outcome check_key_lemma() {
  Outcome o;
  std::size_t runs = 0;
  std::vector<std::string> skipped;
  for (std::uint32_t degree : {2u, 4u, 6u}) {
    const std::uint32_t l = (degree - 2) / 2;
    for (std::uint32_t n = kLemmaMinN; n <= kLemmaMaxN; ++n) {
      if (degree > n) {
        skipped.push_back(std::to_string(degree) + "-factor n=" + std::to_string(n));
        continue;
      }
      for (std::uint64_t seed = 0; seed < kLemmaSeeds; ++seed) {
        ++runs;
        const am::BipartiteGraph g = am::gen_regular_bipartite(n, degree, seed);
        const am::KeyLemmaResult r = am::label_key_lemma(g.whole());
        const am::Sum m = am::Sum{degree} * n;
        const am::Sum t = (m + 1) * (l + 1);
        const am::SumProfile s = am::partial_sums(g.whole(), r.labeling);
        bool ok = r.labeling.assigned_count() == g.edge_count();
        for (am::Sum a : s.sums_a) ok = ok && a == t;
        for (am::Sum b : s.sums_b) ok = ok && (((b - t) % 3) + 3) % 3 != 0;
        if (!ok) {
          note_failure(o, std::to_string(degree) + "-factor " + instance(n, degree, seed));
        }
      }
    }
  }
  o.detail = std::to_string(runs) + " runs; every A sum (m+1)(l+1), every B sum off it mod 3";
  if (!skipped.empty()) {
    o.notes.push_back("no simple graph exists for " + std::to_string(skipped.size()) +
                      " (degree, n) pairs with degree > n; skipped");
  }
  return o;
}

Outcome check_three_factor() {
  Outcome o;
  std::size_t runs = 0;
  for (std::uint32_t n = kLemmaMinN; n <= kLemmaMaxN; ++n) {
    for (std::uint64_t seed = 0; seed < kLemmaSeeds; ++seed) {
      ++runs;
      const am::BipartiteGraph g = am::gen_regular_bipartite(n, 3, seed);
      std::vector<std::uint32_t> order(n);
      std::iota(order.begin(), order.end(), 0u);
      std::mt19937_64 rng(seed);
      std::shuffle(order.begin(), order.end(), rng);
      const am::Labeling lab = am::label_3_factor_shifted(g.whole(), order, 0);
      const am::SumProfile s = am::partial_sums(g.whole(), lab);
      bool ok = is_bijection(lab);
      std::vector<am::Sum> want(n);
      for (std::uint32_t i = 0; i < n; ++i) {
        want[i] = 3 * am::Sum{n} + 3 * (i + 1);
        ok = ok && s.sums_b[order[i]] == want[i];
      }
      std::vector<am::Sum> a = s.sums_a;
      std::sort(a.begin(), a.end());
      ok = ok && a == want;
      if (!ok) note_failure(o, instance(n, 3, seed));
    }
  }
  o.detail = std::to_string(runs) + " runs; B sums 3n+3i in the prescribed order, A multiset equal";
  return o;
}

Outcome check_oracle() {
  Outcome o;
  struct Case {
    std::string name;
    am::oracle::SimpleGraph graph;
    std::optional<am::BipartiteGraph> bipartite;
  };
  std::vector<Case> cases;
  auto add_named = [&](const std::string& name, am::Family f, std::uint32_t n) {
    am::BipartiteGraph g = am::gen_named(f, n);
    if (g.edge_count() > kOracleMaxEdges) return;
    cases.push_back({name, am::oracle::SimpleGraph::from_bipartite(g), g});
  };
  add_named("C4", am::Family::kCycle, 2);
  add_named("C6", am::Family::kCycle, 3);
  add_named("C8", am::Family::kCycle, 4);
  add_named("K2,2", am::Family::kCompleteBipartite, 2);
  add_named("K3,3", am::Family::kCompleteBipartite, 3);
  add_named("crown3", am::Family::kCrown, 3);
  cases.push_back({"K2", {2, {{0, 1}}}, std::nullopt});
  cases.push_back({"C3", {3, {{0, 1}, {1, 2}, {2, 0}}}, std::nullopt});

  std::size_t labelings_tested = 0;
  for (const Case& c : cases) {
    const auto found = am::oracle::brute_force_search(c.graph, kOracleBudget);
    if (!c.bipartite) {
      // Generic graphs: the only non-bipartite cross-checks are the known
      // verdicts for K2 (none) and C3 (some).
      const bool expect = c.name != "K2";
      if (found.has_value() != expect) note_failure(o, c.name + ": unexpected verdict");
      continue;
    }
    const am::BipartiteGraph& g = *c.bipartite;
    if (!found || !am::verify_antimagic(g, am::Labeling::from_labels(*found)).antimagic()) {
      note_failure(o, c.name + ": oracle labeling rejected by the verifier");
    }
    // Every permutation: oracle and verifier must agree.
    std::vector<am::Label> perm(g.edge_count());
    std::iota(perm.begin(), perm.end(), 1u);
    std::uint64_t agree_yes = 0;
    do {
      ++labelings_tested;
      const bool v = am::verify_antimagic(g, am::Labeling::from_labels(perm)).antimagic();
      const bool w = am::oracle::is_antimagic(c.graph, perm);
      if (v != w) {
        note_failure(o, c.name + ": verdicts differ");
        break;
      }
      agree_yes += v ? 1 : 0;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (am::oracle::count_antimagic(c.graph) != agree_yes) {
      note_failure(o, c.name + ": count differs from full enumeration");
    }
    const am::LabelResult r = am::label_antimagic(g);
    if (!am::oracle::is_antimagic(c.graph, r.labeling.raw())) {
      note_failure(o, c.name + ": construction output rejected by the oracle");
    }
  }
  o.detail = std::to_string(cases.size()) + " graphs, " + std::to_string(labelings_tested) +
             " labelings compared";
  return o;
}

Outcome check_determinism() {
  Outcome o;
  std::size_t compared = 0;
  for (std::uint32_t k = kMinDegree; k <= kMaxDegree; ++k) {
    for (std::uint32_t n = std::max(k, 3u); n <= kMaxPart; ++n) {
      for (std::uint64_t seed = 0; seed < kDeterminismSeeds; ++seed) {
        auto run = [&] {
          const am::BipartiteGraph g = am::gen_regular_bipartite(n, k, seed);
          const am::LabelResult r = am::label_antimagic(g);
          return am::export_graph(g, &r.labeling, am::Format::kJson);
        };
        ++compared;
        if (run() != run()) note_failure(o, instance(n, k, seed));
      }
    }
  }
  o.detail = std::to_string(compared) + " repeated JSON exports byte-identical";
  return o;
}

}  // namespace

int main() {
  const CorpusResults corpus = run_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"end-to-end construction", [&] { return corpus.end_to_end; }},
      {"partition lemmas", check_partitions},
      {"key lemma invariant", check_key_lemma},
      {"3-factor with prescribed sums", check_three_factor},
      {"3-regular structure", [&] { return corpus.three_regular; }},
      {"4-regular structure", [&] { return corpus.four_regular; }},
      {"oracle agreement", check_oracle},
      {"1-factorization", [&] { return corpus.factorization; }},
      {"determinism", check_determinism},
      {"repair never invoked", [&] { return corpus.repair; }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    print(static_cast<int>(i + 1), criteria[i].first, o);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
