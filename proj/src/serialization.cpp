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

#include <charconv>
#include <sstream>
#include <string>

#include <json.hpp>

#include "antimagic/errors.hpp"
#include "antimagic/graph.hpp"

namespace antimagic {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::uint32_t to_u32(std::string_view token, std::string_view what) {
  std::uint32_t value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "expected a non-negative integer for " +
                                       std::string(what) + ", got '" +
                                       std::string(token) + "'");
  }
  return value;
}

struct EdgeListDocument {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<Label> labels;  // filled only when every line has a third column
};

EdgeListDocument read_edge_list(std::string_view text) {
  EdgeListDocument doc;
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && is_blank(lines[i])) ++i;
  if (i == lines.size()) throw Error(ErrorCode::kParse, "empty document");

  auto header = split_tokens(lines[i++]);
  if (header.size() != 3 || header[0] != "bipartite") {
    throw Error(ErrorCode::kParse, "malformed header, expected 'bipartite <n> <k>'");
  }
  doc.n = to_u32(header[1], "n");
  doc.k = to_u32(header[2], "k");
  if (doc.n == 0) throw Error(ErrorCode::kParse, "malformed header, n must be >= 1");
  if (doc.k < 2) {
    throw Error(ErrorCode::kDegreeTooSmall, "degree must be at least 2");
  }

  std::size_t labeled_lines = 0;
  for (; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    auto tok = split_tokens(lines[i]);
    if (tok.size() != 2 && tok.size() != 3) {
      throw Error(ErrorCode::kParse, "edge line must be '<a> <b>' (line " +
                                         std::to_string(i + 1) + ")");
    }
    doc.pairs.emplace_back(to_u32(tok[0], "a"), to_u32(tok[1], "b"));
    if (tok.size() == 3) {
      doc.labels.push_back(to_u32(tok[2], "label"));
      ++labeled_lines;
    }
  }
  const std::size_t expected = static_cast<std::size_t>(doc.n) * doc.k;
  if (doc.pairs.size() != expected) {
    throw Error(ErrorCode::kParse, "expected " + std::to_string(expected) +
                                       " edge lines, found " +
                                       std::to_string(doc.pairs.size()));
  }
  if (labeled_lines != 0 && labeled_lines != doc.pairs.size()) {
    throw Error(ErrorCode::kParse, "label column present on some lines only");
  }
  return doc;
}

void require_same_edges(
    const BipartiteGraph& graph,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  bool same = pairs.size() == graph.edge_count();
  for (std::size_t i = 0; same && i < pairs.size(); ++i) {
    const Edge& e = graph.edge(static_cast<EdgeId>(i));
    same = e.a == pairs[i].first && e.b == pairs[i].second;
  }
  if (!same) {
    throw Error(ErrorCode::kInvalidArgument,
                "labeling document describes a different graph");
  }
}

std::string dot_document(const BipartiteGraph& g, const Labeling* labeling,
                         const SumProfile* sums) {
  std::ostringstream out;
  out << "graph G {\n";
  for (std::uint32_t side = 0; side < 2; ++side) {
    const char prefix = side == 0 ? 'a' : 'b';
    for (std::uint32_t v = 0; v < g.part_size(); ++v) {
      out << "  " << prefix << v;
      if (sums != nullptr) {
        const Sum s = side == 0 ? sums->sums_a[v] : sums->sums_b[v];
        out << " [xlabel=\"" << s << "\"]";
      }
      out << ";\n";
    }
  }
  for (const Edge& e : g.edges()) {
    out << "  a" << e.a << " -- b" << e.b;
    if (labeling != nullptr) out << " [label=\"" << (*labeling)[e.id] << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

bool sums_distinct(const SumProfile& sums) {
  std::vector<Sum> all = sums.sums_a;
  all.insert(all.end(), sums.sums_b.begin(), sums.sums_b.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "edgelist") return Format::kEdgeList;
  if (name == "json") return Format::kJson;
  if (name == "dot") return Format::kDot;
  return std::nullopt;
}

BipartiteGraph parse_graph(std::string_view text) {
  EdgeListDocument doc = read_edge_list(text);
  return BipartiteGraph::from_pairs(doc.n, doc.k, doc.pairs);
}

Labeling parse_labeling(const BipartiteGraph& graph, std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    throw Error(ErrorCode::kNotBijective, "empty labeling");
  }
  text.remove_prefix(first);

  std::vector<Label> labels;
  if (text.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& ex) {
      throw Error(ErrorCode::kParse, std::string("invalid JSON: ") + ex.what());
    }
    if (!doc.contains("labels") || !doc["labels"].is_array()) {
      throw Error(ErrorCode::kParse, "JSON document has no 'labels' array");
    }
    if (doc.contains("edges")) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
      for (const auto& e : doc["edges"]) {
        pairs.emplace_back(e.at(0).get<std::uint32_t>(),
                           e.at(1).get<std::uint32_t>());
      }
      require_same_edges(graph, pairs);
    }
    for (const auto& l : doc["labels"]) {
      if (!l.is_number_unsigned()) {
        throw Error(ErrorCode::kParse, "labels must be positive integers");
      }
      labels.push_back(l.get<Label>());
    }
  } else if (text.starts_with("bipartite")) {
    EdgeListDocument doc = read_edge_list(text);
    require_same_edges(graph, doc.pairs);
    if (doc.labels.empty()) {
      throw Error(ErrorCode::kParse, "edge list carries no label column");
    }
    labels = std::move(doc.labels);
  } else {
    for (std::string_view line : split_lines(text)) {
      for (std::string_view tok : split_tokens(line)) {
        labels.push_back(to_u32(tok, "label"));
      }
    }
  }
  if (labels.size() != graph.edge_count()) {
    throw Error(ErrorCode::kNotBijective,
                "expected " + std::to_string(graph.edge_count()) +
                    " labels, found " + std::to_string(labels.size()));
  }
  return Labeling::from_labels(std::move(labels));
}

std::string export_graph(const BipartiteGraph& graph,
                         const Labeling* labeling, Format format) {
  std::optional<SumProfile> sums;
  if (labeling != nullptr) {
    if (labeling->size() != graph.edge_count() || !labeling->is_complete()) {
      throw Error(ErrorCode::kIncompleteLabeling,
                  "export requires a complete labeling");
    }
    sums = partial_sums(graph.whole(), *labeling);
  }

  switch (format) {
    case Format::kEdgeList: {
      std::ostringstream out;
      out << "bipartite " << graph.part_size() << ' ' << graph.degree() << '\n';
      for (const Edge& e : graph.edges()) {
        out << e.a << ' ' << e.b;
        if (labeling != nullptr) out << ' ' << (*labeling)[e.id];
        out << '\n';
      }
      return out.str();
    }
    case Format::kJson: {
      Json doc;
      doc["n"] = graph.part_size();
      doc["k"] = graph.degree();
      Json edges = Json::array();
      for (const Edge& e : graph.edges()) edges.push_back({e.a, e.b});
      doc["edges"] = std::move(edges);
      if (labeling != nullptr) {
        doc["labels"] = std::vector<Label>(labeling->raw().begin(),
                                           labeling->raw().end());
        doc["sums_A"] = sums->sums_a;
        doc["sums_B"] = sums->sums_b;
        doc["antimagic"] = sums_distinct(*sums);
      }
      return doc.dump() + "\n";
    }
    case Format::kDot:
      return dot_document(graph, labeling, sums ? &*sums : nullptr);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown format");
}

}  // namespace antimagic
