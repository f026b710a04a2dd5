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

#include "antimagic/antimagic.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include <json.hpp>

#include "antimagic/constructions.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/factorization.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/partitions.hpp"
#include "antimagic/verification.hpp"

struct am_graph {
  antimagic::BipartiteGraph graph;
};

struct am_labeling {
  antimagic::Labeling labeling;
};

namespace {

using antimagic::ErrorCode;
using json = nlohmann::ordered_json;

thread_local std::string g_last_error;

am_status fail(am_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
am_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return AM_OK;
  } catch (const antimagic::Error& e) {
    return fail(static_cast<am_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(AM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json report_to_json(const antimagic::ConstructionReport& report) {
  json out;
  out["route"] = report.route;
  json stages = json::array();
  for (const auto& s : report.stages) stages.push_back(json::parse(to_json(s)));
  out["stages"] = std::move(stages);
  out["stages_passed"] = report.stages_passed();
  out["bad_vertices"] = report.bad_vertices;
  if (report.route == "4-regular") {
    out["bad_after_alternation"] = report.bad_after_alternation;
    out["bad_after_paths"] = report.bad_after_paths;
  }
  out["invariant_fallback"] = report.invariant_fallback;
  out["repaired"] = report.repaired;
  if (report.conflicts_before_repair) {
    out["conflicts_before_repair"] =
        json::parse(to_json(*report.conflicts_before_repair));
  }
  return out;
}

std::vector<antimagic::Sum> cycle_sums(const std::vector<antimagic::Label>& labels) {
  const std::size_t L = labels.size();
  std::vector<antimagic::Sum> sums(L);
  for (std::size_t i = 0; i < L; ++i) sums[i] = labels[(i + L - 1) % L] + labels[i];
  return sums;
}

json triples_to_json(const std::vector<antimagic::LabelTriple>& triples) {
  json out = json::array();
  for (const auto& t : triples) {
    out.push_back({{"labels", t.labels}, {"sum", t.target_sum}, {"family", t.family}});
  }
  return out;
}

json demo_document() {
  using namespace antimagic;
  json doc;

  json cycles = json::array();
  for (std::uint32_t L : {3u, 4u, 5u, 6u}) {
    const auto labels = label_cycle(L);
    cycles.push_back({{"length", L}, {"labels", labels}, {"sums", cycle_sums(labels)}});
  }
  doc["cycle_labelings"] = std::move(cycles);

  // C3 and C4 side by side: the degree-2 components are stacked in order.
  {
    LabeledComponent c3{2, {0, 1, 2}, label_cycle(3)};
    LabeledComponent c4{2, {3, 4, 5, 6}, label_cycle(4)};
    const Labeling both = compose_disjoint_union({c3, c4}, 7);
    std::vector<Label> first(both.raw().begin(), both.raw().begin() + 3);
    std::vector<Label> second(both.raw().begin() + 3, both.raw().end());
    doc["disjoint_union"] = {{"C3", first}, {"C4", second}};
  }

  {
    json pairs = json::array();
    for (const auto& p : pair_partition(12)) {
      pairs.push_back({{"pair", {p.low, p.high}},
                       {"kind", p.kind == PairKind::kLike ? "like" : "split"}});
    }
    doc["pair_partition"] = {{"m", 12}, {"a", like_residue(12)}, {"pairs", pairs}};
  }

  json mod3 = json::object();
  json mod4 = json::object();
  for (std::uint32_t n : {2u, 3u}) {
    mod3[std::to_string(n)] = triples_to_json(triple_partition_mod3(n));
    mod4[std::to_string(n)] = triples_to_json(triple_partition_mod4(n));
  }
  doc["triples_mod3"] = std::move(mod3);
  doc["triples_mod4"] = std::move(mod4);

  json labeled = json::array();
  auto add = [&](const std::string& name, const BipartiteGraph& g) {
    LabelResult r = label_antimagic(g, LabelOptions{false});
    const SumProfile sums = partial_sums(g.whole(), r.labeling);
    labeled.push_back({{"graph", name},
                       {"n", g.part_size()},
                       {"k", g.degree()},
                       {"route", r.report.route},
                       {"labels", std::vector<Label>(r.labeling.raw().begin(),
                                                     r.labeling.raw().end())},
                       {"sums_A", sums.sums_a},
                       {"sums_B", sums.sums_b},
                       {"antimagic", verify_antimagic(g, r.labeling).antimagic()}});
  };
  add("C6", gen_named(Family::kCycle, 3));
  add("K3,3", gen_named(Family::kCompleteBipartite, 3));
  add("Q3", gen_named(Family::kHypercube3, 4));
  add("K4,4", gen_named(Family::kCompleteBipartite, 4));
  add("K5,5", gen_named(Family::kCompleteBipartite, 5));
  add("K6,6", gen_named(Family::kCompleteBipartite, 6));
  doc["labelings"] = std::move(labeled);
  return doc;
}

}  // namespace

extern "C" {

const char* am_last_error(void) { return g_last_error.c_str(); }

const char* am_status_name(am_status status) {
  switch (status) {
    case AM_OK: return "ok";
    case AM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AM_ERR_PARSE: return "parse error";
    case AM_ERR_OUT_OF_RANGE: return "out of range";
    case AM_ERR_DUPLICATE_EDGE: return "duplicate edge";
    case AM_ERR_NOT_REGULAR: return "not regular";
    case AM_ERR_DEGREE_TOO_SMALL: return "degree too small";
    case AM_ERR_INCOMPLETE_LABELING: return "incomplete labeling";
    case AM_ERR_NOT_BIJECTIVE: return "not bijective";
    case AM_ERR_BUDGET_EXHAUSTED: return "budget exhausted";
    case AM_ERR_REPAIR_FAILED: return "repair failed";
    case AM_ERR_GENERATION_FAILED: return "generation failed";
    case AM_ERR_INSTANCE_TOO_LARGE: return "instance too large";
    case AM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void am_string_free(char* s) { std::free(s); }

am_status am_graph_parse(const char* text, am_graph** out) {
  if (text == nullptr || out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = new am_graph{antimagic::parse_graph(text)}; });
}

am_status am_graph_generate(uint32_t n, uint32_t k, uint64_t seed, am_graph** out) {
  if (out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded(
      [&] { *out = new am_graph{antimagic::gen_regular_bipartite(n, k, seed)}; });
}

am_status am_graph_named(const char* family, uint32_t n, am_graph** out) {
  if (family == nullptr || out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  const auto f = antimagic::family_from_name(family);
  if (!f) return fail(AM_ERR_INVALID_ARGUMENT, std::string("unknown family: ") + family);
  return guarded([&] { *out = new am_graph{antimagic::gen_named(*f, n)}; });
}

void am_graph_free(am_graph* graph) { delete graph; }

uint32_t am_graph_part_size(const am_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.part_size();
}

uint32_t am_graph_degree(const am_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.degree();
}

size_t am_graph_edge_count(const am_graph* graph) {
  return graph == nullptr ? 0 : graph->graph.edge_count();
}

am_status am_graph_export(const am_graph* graph, const am_labeling* labeling,
                          am_format format, char** out) {
  if (graph == nullptr || out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  antimagic::Format f;
  switch (format) {
    case AM_FORMAT_EDGELIST: f = antimagic::Format::kEdgeList; break;
    case AM_FORMAT_JSON: f = antimagic::Format::kJson; break;
    case AM_FORMAT_DOT: f = antimagic::Format::kDot; break;
    default: return fail(AM_ERR_INVALID_ARGUMENT, "unknown format");
  }
  return guarded([&] {
    *out = copy_string(antimagic::export_graph(
        graph->graph, labeling == nullptr ? nullptr : &labeling->labeling, f));
  });
}

am_status am_labeling_parse(const am_graph* graph, const char* text, am_labeling** out) {
  if (graph == nullptr || text == nullptr || out == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded(
      [&] { *out = new am_labeling{antimagic::parse_labeling(graph->graph, text)}; });
}

am_status am_labeling_from_array(const uint32_t* labels, size_t count, am_labeling** out) {
  if ((labels == nullptr && count > 0) || out == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new am_labeling{
        antimagic::Labeling::from_labels(std::vector<antimagic::Label>(labels, labels + count))};
  });
}

void am_labeling_free(am_labeling* labeling) { delete labeling; }

size_t am_labeling_size(const am_labeling* labeling) {
  return labeling == nullptr ? 0 : labeling->labeling.size();
}

uint32_t am_labeling_get(const am_labeling* labeling, size_t edge) {
  if (labeling == nullptr || edge >= labeling->labeling.size()) return 0;
  return labeling->labeling[static_cast<antimagic::EdgeId>(edge)];
}

am_status am_label(const am_graph* graph, int allow_repair, am_labeling** out,
                   char** report_json) {
  if (graph == nullptr || out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    antimagic::LabelResult r =
        antimagic::label_antimagic(graph->graph, antimagic::LabelOptions{allow_repair != 0});
    char* report = nullptr;
    if (report_json != nullptr) report = copy_string(report_to_json(r.report).dump());
    *out = new am_labeling{std::move(r.labeling)};
    if (report_json != nullptr) *report_json = report;
  });
}

am_status am_verify(const am_graph* graph, const am_labeling* labeling, int* antimagic,
                    char** report_json) {
  if (graph == nullptr || labeling == nullptr || antimagic == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const antimagic::ConflictReport report =
        antimagic::verify_antimagic(graph->graph, labeling->labeling);
    if (report_json != nullptr) *report_json = copy_string(to_json(report));
    *antimagic = report.antimagic() ? 1 : 0;
  });
}

am_status am_factor(const am_graph* graph, char** out) {
  if (graph == nullptr || out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const antimagic::Subgraph& g = graph->graph.whole();
    const antimagic::Factorization fact = antimagic::one_factorize(g);
    json doc;
    doc["n"] = g.part_size();
    doc["k"] = g.degree();
    json factors = json::array();
    for (const auto& f : fact.factors) {
      json edges = json::array();
      for (std::uint32_t a = 0; a < g.part_size(); ++a) {
        const antimagic::Edge& e = g.edge(f.by_a[a]);
        edges.push_back({e.a, e.b});
      }
      factors.push_back({{"edge_ids", f.edge_ids()}, {"edges", edges}});
    }
    doc["factors"] = std::move(factors);
    json unions = json::array();
    for (std::size_t i = 0; i + 1 < fact.factors.size(); i += 2) {
      const std::vector<std::size_t> idx = {i, i + 1};
      const auto cycles =
          antimagic::cycle_decomposition(antimagic::combine_factors(g, fact, idx));
      json lengths = json::array();
      for (const auto& c : cycles.cycles) lengths.push_back(c.length());
      unions.push_back({{"factors", idx}, {"cycle_lengths", lengths}});
    }
    doc["two_factor_cycles"] = std::move(unions);
    *out = copy_string(doc.dump());
  });
}

am_status am_oracle_search(const am_graph* graph, uint64_t budget, am_labeling** out,
                           int* found) {
  if (graph == nullptr || out == nullptr || found == nullptr) {
    return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto result = antimagic::oracle::brute_force_search(
        antimagic::oracle::SimpleGraph::from_bipartite(graph->graph), budget);
    if (result) {
      *out = new am_labeling{antimagic::Labeling::from_labels(*result)};
      *found = 1;
    } else {
      *out = nullptr;
      *found = 0;
    }
  });
}

am_status am_oracle_count(const am_graph* graph, uint64_t* count) {
  if (graph == nullptr || count == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *count = antimagic::oracle::count_antimagic(
        antimagic::oracle::SimpleGraph::from_bipartite(graph->graph));
  });
}

am_status am_demo(char** out) {
  if (out == nullptr) return fail(AM_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(demo_document().dump(2)); });
}

}  // extern "C"
