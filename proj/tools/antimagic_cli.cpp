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

// Command-line front end over the C interface. Stdout carries only the
// requested document; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "antimagic/antimagic.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct GraphDeleter {
  void operator()(am_graph* g) const { am_graph_free(g); }
};
struct LabelingDeleter {
  void operator()(am_labeling* l) const { am_labeling_free(l); }
};
struct StringDeleter {
  void operator()(char* s) const { am_string_free(s); }
};
using GraphPtr = std::unique_ptr<am_graph, GraphDeleter>;
using LabelingPtr = std::unique_ptr<am_labeling, LabelingDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to leave a subcommand with a given exit code after the message has
// been reported.
struct Exit {
  int code;
};

[[noreturn]] void die(const std::string& message, int code = kExitUsage) {
  std::cerr << "antimagic: " << message << "\n";
  throw Exit{code};
}

void check(am_status status, const std::string& what) {
  if (status != AM_OK) {
    die(what + ": " + am_status_name(status) + ": " + am_last_error());
  }
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::string in;
  std::string labels;
  std::string format = "edgelist";
  std::string family;
  std::uint64_t seed = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  bool stage_report = false;
  std::uint64_t budget = 10'000'000;
  bool count = false;
};

am_format parse_format(const std::string& name) {
  if (name == "edgelist") return AM_FORMAT_EDGELIST;
  if (name == "json") return AM_FORMAT_JSON;
  if (name == "dot") return AM_FORMAT_DOT;
  die("unknown format: " + name);
}

// The graph named by --in, or generated from --family/--n or --n/--k/--seed.
GraphPtr load_graph(const Options& o) {
  am_graph* g = nullptr;
  if (!o.in.empty()) {
    check(am_graph_parse(read_source(o.in).c_str(), &g), "parsing " + o.in);
  } else if (!o.family.empty()) {
    if (o.n == 0) die("--family needs --n");
    check(am_graph_named(o.family.c_str(), o.n, &g), "building " + o.family);
  } else if (o.n != 0 && o.k != 0) {
    check(am_graph_generate(o.n, o.k, o.seed, &g), "generating");
  } else {
    die("give --in, --family with --n, or --n with --k");
  }
  return GraphPtr(g);
}

std::string take(char* s) {
  StringPtr owned(s);
  return std::string(owned.get());
}

int run_gen(const Options& o) {
  if (!o.in.empty()) die("gen does not read --in");
  GraphPtr g = load_graph(o);
  char* out = nullptr;
  check(am_graph_export(g.get(), nullptr, parse_format(o.format), &out), "exporting");
  std::cout << take(out);
  return kExitOk;
}

int run_label(const Options& o) {
  GraphPtr g = load_graph(o);
  am_labeling* raw = nullptr;
  char* report_raw = nullptr;
  check(am_label(g.get(), 1, &raw, &report_raw), "labeling");
  LabelingPtr labeling(raw);
  const std::string report = take(report_raw);

  const am_format format = parse_format(o.format);
  char* out = nullptr;
  check(am_graph_export(g.get(), labeling.get(), format, &out), "exporting");
  std::string doc = take(out);
  if (o.stage_report) {
    if (format == AM_FORMAT_JSON) {
      auto merged = nlohmann::ordered_json::parse(doc);
      merged["construction"] = nlohmann::ordered_json::parse(report);
      doc = merged.dump(2) + "\n";
    } else {
      std::cerr << nlohmann::ordered_json::parse(report).dump(2) << "\n";
    }
  }
  std::cout << doc;

  int antimagic = 0;
  check(am_verify(g.get(), labeling.get(), &antimagic, nullptr), "verifying");
  if (!antimagic) {
    std::cerr << "antimagic: constructed labeling has conflicts\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  if (o.labels.empty()) die("verify needs --labels");
  GraphPtr g = load_graph(o);
  am_labeling* raw = nullptr;
  check(am_labeling_parse(g.get(), read_source(o.labels).c_str(), &raw),
        "parsing " + o.labels);
  LabelingPtr labeling(raw);
  int antimagic = 0;
  char* report = nullptr;
  check(am_verify(g.get(), labeling.get(), &antimagic, &report), "verifying");
  std::cout << nlohmann::ordered_json::parse(take(report)).dump(2) << "\n";
  if (!antimagic) {
    std::cerr << "antimagic: labeling has conflicting vertex sums\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_factor(const Options& o) {
  GraphPtr g = load_graph(o);
  char* out = nullptr;
  check(am_factor(g.get(), &out), "factoring");
  std::cout << nlohmann::ordered_json::parse(take(out)).dump(2) << "\n";
  return kExitOk;
}

int run_oracle(const Options& o) {
  GraphPtr g = load_graph(o);
  nlohmann::ordered_json doc;
  if (o.count) {
    std::uint64_t count = 0;
    check(am_oracle_count(g.get(), &count), "counting");
    doc["count"] = count;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  am_labeling* raw = nullptr;
  int found = 0;
  check(am_oracle_search(g.get(), o.budget, &raw, &found), "searching");
  LabelingPtr labeling(raw);
  doc["found"] = found != 0;
  if (found) {
    std::vector<std::uint32_t> labels;
    for (std::size_t e = 0; e < am_labeling_size(labeling.get()); ++e) {
      labels.push_back(am_labeling_get(labeling.get(), e));
    }
    doc["labels"] = labels;
  }
  std::cout << doc.dump(2) << "\n";
  return found ? kExitOk : kExitVerifyFailed;
}

int run_demo() {
  char* out = nullptr;
  check(am_demo(&out), "demo");
  std::cout << take(out) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antimagic labelings of regular bipartite graphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_source = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.in, "Graph edge-list file ('-' for stdin)");
    cmd->add_option("--n", o.n, "Part size for a generated graph");
    cmd->add_option("--k", o.k, "Degree for a generated graph");
    cmd->add_option("--seed", o.seed, "Generator seed");
    cmd->add_option("--family", o.family,
                    "Named family: cycle, complete_bipartite, hypercube3, crown");
  };
  auto format_option = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"edgelist", "json", "dot"}));
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a regular bipartite graph");
  graph_source(gen);
  format_option(gen);

  CLI::App* label = app.add_subcommand("label", "Construct an antimagic labeling");
  graph_source(label);
  format_option(label);
  label->add_flag("--stage-report", o.stage_report,
                  "Report the checks of every construction phase");

  CLI::App* verify = app.add_subcommand("verify", "Check a labeling");
  graph_source(verify);
  verify->add_option("--labels", o.labels, "Labeling file (JSON, labeled edge list or labels)");

  CLI::App* factor = app.add_subcommand("factor", "Dump a 1-factorization");
  graph_source(factor);

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive search on a tiny graph");
  graph_source(oracle);
  oracle->add_option("--budget", o.budget, "Maximum search nodes");
  oracle->add_flag("--count", o.count, "Count all antimagic labelings instead");

  CLI::App* demo = app.add_subcommand("demo", "Print the worked small examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return run_gen(o);
    if (*label) return run_label(o);
    if (*verify) return run_verify(o);
    if (*factor) return run_factor(o);
    if (*oracle) return run_oracle(o);
    if (*demo) return run_demo();
  } catch (const Exit& e) {
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "antimagic: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
