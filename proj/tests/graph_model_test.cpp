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

#include <numeric>
#include <string>
#include <vector>

#include <json.hpp>

#include "antimagic/errors.hpp"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_helpers.hpp"

namespace antimagic {
namespace {

using testing::ElementsAre;
using testing::HasSubstr;

constexpr const char* kC4 = "bipartite 2 2\n0 0\n0 1\n1 0\n1 1\n";

TEST(ParseGraph, ReadsTheFourCycle) {
  const BipartiteGraph g = parse_graph(kC4);
  EXPECT_EQ(g.part_size(), 2u);
  EXPECT_EQ(g.degree(), 2u);
  EXPECT_EQ(g.edge_count(), 4u);
}

TEST(ParseGraph, ReadsCompleteBipartiteThree) {
  std::string text = "bipartite 3 3\n";
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) text += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  const BipartiteGraph g = parse_graph(text);
  EXPECT_EQ(g.edge_count(), 9u);
  EXPECT_EQ(g.degree(), 3u);
}

TEST(ParseGraph, IgnoresBlankLinesAndLabelColumn) {
  const BipartiteGraph g = parse_graph("bipartite 2 2\n\n0 0 1\n0 1 3\n1 0 4\n1 1 2\n\n");
  EXPECT_EQ(g, parse_graph(kC4));
}

TEST(ParseGraph, RejectsRepeatedEdge) {
  ExpectError(ErrorCode::kDuplicateEdge,
              [] { parse_graph("bipartite 2 2\n0 0\n0 1\n1 0\n0 0\n"); });
}

TEST(ParseGraph, RejectsMalformedInput) {
  ExpectError(ErrorCode::kParse, [] { parse_graph(""); });
  ExpectError(ErrorCode::kParse, [] { parse_graph("graph 2 2\n"); });
  ExpectError(ErrorCode::kParse, [] { parse_graph("bipartite 2 2\n0 0\n0 1\n1 0\n"); });
  ExpectError(ErrorCode::kParse, [] { parse_graph("bipartite 2 2\n0 0\n0 x\n1 0\n1 1\n"); });
  ExpectError(ErrorCode::kParse, [] { parse_graph("bipartite 2 2\n0 0 1\n0 1\n1 0\n1 1\n"); });
}

TEST(ParseGraph, RejectsOutOfRangeAndIrregular) {
  ExpectError(ErrorCode::kOutOfRange, [] { parse_graph("bipartite 2 2\n0 0\n0 1\n1 0\n1 2\n"); });
  ExpectError(ErrorCode::kNotRegular,
              [] { parse_graph("bipartite 3 2\n0 0\n0 1\n1 0\n1 1\n2 2\n0 2\n"); });
}

TEST(ParseGraph, RejectsDegreeBelowTwo) {
  ExpectError(ErrorCode::kDegreeTooSmall, [] { parse_graph("bipartite 1 1\n0 0\n"); });
}

TEST(BipartiteGraph, EdgesKeepInputOrderAsIds) {
  const BipartiteGraph g = parse_graph("bipartite 2 2\n1 1\n0 0\n1 0\n0 1\n");
  EXPECT_EQ(g.whole().edge(0).a, 1u);
  EXPECT_EQ(g.whole().edge(1).a, 0u);
  EXPECT_EQ(g.whole().edge(3).b, 1u);
}

TEST(Labeling, FromLabelsRequiresPermutation) {
  EXPECT_TRUE(Labeling::from_labels({2, 1, 3}).is_complete());
  ExpectError(ErrorCode::kNotBijective, [] { Labeling::from_labels({1, 1, 3}); });
  ExpectError(ErrorCode::kNotBijective, [] { Labeling::from_labels({1, 2, 4}); });
}

TEST(Labeling, AssignTracksPartialState) {
  Labeling l(3);
  EXPECT_EQ(l.assigned_count(), 0u);
  l.assign(1, 3);
  EXPECT_TRUE(l.assigned(1));
  EXPECT_FALSE(l.is_complete());
  ExpectError(ErrorCode::kNotBijective, [&] { l.assign(0, 3); });
  ExpectError(ErrorCode::kOutOfRange, [&] { l.assign(0, 4); });
  ExpectError(ErrorCode::kOutOfRange, [&] { l.assign(5, 1); });
  l.assign(0, 1);
  l.assign(2, 2);
  EXPECT_TRUE(l.is_complete());
  l.swap_labels(0, 2);
  EXPECT_THAT(std::vector<Label>(l.raw().begin(), l.raw().end()), ElementsAre(2, 3, 1));
}

TEST(PartialSums, CountOnlyAssignedEdges) {
  const BipartiteGraph g = parse_graph(kC4);
  Labeling l(4);
  l.assign(0, 4);
  const SumProfile s = partial_sums(g.whole(), l);
  EXPECT_THAT(s.sums_a, ElementsAre(4, 0));
  EXPECT_THAT(s.sums_b, ElementsAre(4, 0));
}

TEST(ExportGraph, EdgeListRoundTrips) {
  const BipartiteGraph g = parse_graph(kC4);
  EXPECT_EQ(parse_graph(export_graph(g, nullptr, Format::kEdgeList)), g);
  const BipartiteGraph r = RandomGraph(12, 5, 3);
  EXPECT_EQ(parse_graph(export_graph(r, nullptr, Format::kEdgeList)), r);
}

TEST(ExportGraph, LabeledEdgeListRoundTripsBoth) {
  const BipartiteGraph g = parse_graph(kC4);
  const Labeling l = Labeling::from_labels({1, 3, 2, 4});
  const std::string text = export_graph(g, &l, Format::kEdgeList);
  EXPECT_EQ(parse_graph(text), g);
  EXPECT_EQ(parse_labeling(g, text), l);
}

TEST(ExportGraph, JsonSumsObeyHandshake) {
  const BipartiteGraph g = parse_graph(kC4);
  const Labeling l = LabelAroundCycle(g, {1, 3, 4, 2});
  const auto doc = nlohmann::json::parse(export_graph(g, &l, Format::kJson));
  Sum total = 0;
  for (Sum s : doc["sums_A"]) total += s;
  for (Sum s : doc["sums_B"]) total += s;
  EXPECT_EQ(total, 2 * (1 + 2 + 3 + 4));
  EXPECT_TRUE(doc["antimagic"].get<bool>());
  EXPECT_EQ(doc["n"], 2);
  EXPECT_EQ(doc["labels"].size(), 4u);
}

TEST(ExportGraph, JsonWithoutLabelingHasNoSums) {
  const auto doc = nlohmann::json::parse(export_graph(parse_graph(kC4), nullptr, Format::kJson));
  EXPECT_FALSE(doc.contains("labels"));
  EXPECT_EQ(doc["edges"].size(), 4u);
}

TEST(ExportGraph, DotHasOneLineperEdgeAndVertex) {
  std::string text = "bipartite 3 3\n";
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) text += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  const BipartiteGraph g = parse_graph(text);
  std::vector<Label> labels(9);
  std::iota(labels.begin(), labels.end(), 1u);
  const Labeling l = Labeling::from_labels(labels);
  const std::string dot = export_graph(g, &l, Format::kDot);
  std::size_t edges = 0, nodes = 0, pos = 0;
  while ((pos = dot.find("[label=", pos)) != std::string::npos) ++edges, ++pos;
  pos = 0;
  while ((pos = dot.find("[xlabel=", pos)) != std::string::npos) ++nodes, ++pos;
  EXPECT_EQ(edges, 9u);
  EXPECT_EQ(nodes, 6u);
  EXPECT_THAT(dot, HasSubstr("graph G {"));
}

TEST(ExportGraph, PartialLabelingIsRejected) {
  const BipartiteGraph g = parse_graph(kC4);
  Labeling l(4);
  l.assign(0, 1);
  ExpectError(ErrorCode::kIncompleteLabeling, [&] { export_graph(g, &l, Format::kJson); });
}

TEST(ParseLabeling, AcceptsAllThreeForms) {
  const BipartiteGraph g = parse_graph(kC4);
  const Labeling want = Labeling::from_labels({1, 3, 4, 2});
  EXPECT_EQ(parse_labeling(g, "1 3\n4 2\n"), want);
  EXPECT_EQ(parse_labeling(g, export_graph(g, &want, Format::kJson)), want);
  EXPECT_EQ(parse_labeling(g, export_graph(g, &want, Format::kEdgeList)), want);
}

TEST(ParseLabeling, RejectsWrongCountAndOtherGraph) {
  const BipartiteGraph g = parse_graph(kC4);
  ExpectError(ErrorCode::kNotBijective, [&] { parse_labeling(g, "1 2 3\n"); });
  ExpectError(ErrorCode::kNotBijective, [&] { parse_labeling(g, "1 2 3 3\n"); });
  const BipartiteGraph other = parse_graph("bipartite 2 2\n0 1\n0 0\n1 0\n1 1\n");
  const Labeling l = Labeling::from_labels({1, 2, 3, 4});
  const std::string doc = export_graph(other, &l, Format::kJson);
  ExpectError(ErrorCode::kInvalidArgument, [&] { parse_labeling(g, doc); });
}

TEST(FormatFromName, KnowsTheThreeFormats) {
  EXPECT_EQ(format_from_name("edgelist"), Format::kEdgeList);
  EXPECT_EQ(format_from_name("json"), Format::kJson);
  EXPECT_EQ(format_from_name("dot"), Format::kDot);
  EXPECT_FALSE(format_from_name("xml").has_value());
}

}  // namespace
}  // namespace antimagic
