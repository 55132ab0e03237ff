// Copyright 2026 The magiclab Authors.
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

#include "magiclab/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "magiclab/construct.h"
#include "magiclab/degseq.h"
#include "magiclab/error.h"
#include "magiclab/io.h"
#include "magiclab/magic.h"
#include "magiclab/matching.h"

namespace magiclab {
namespace {

constexpr const char* kBudgetEnv = "MAGICLAB_BUDGET";

// Raised for problems that are the caller's fault rather than a false result.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

std::int64_t ResolveBudget(std::optional<std::int64_t> flag) {
  if (flag) {
    if (*flag <= 0) throw UsageError("--budget must be positive");
    return *flag;
  }
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (*end != '\0' || value <= 0) {
      throw UsageError(std::string(kBudgetEnv) + " must be a positive integer");
    }
    return value;
  }
  return kDefaultOracleBudget;
}

std::vector<int> ParseSequence(const std::string& text) {
  std::vector<int> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) continue;
    try {
      size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(value);
    } catch (const std::logic_error&) {
      throw UsageError("bad sequence entry '" + token + "'");
    }
  }
  return values;
}

const char* MembershipName(Membership m) {
  switch (m) {
    case Membership::kMember: return "member";
    case Membership::kNonMember: return "non-member";
    case Membership::kUndecided: return "undecided";
  }
  return "?";
}

struct Options {
  int n = 0;
  int r = 0;
  bool random = false;
  std::uint64_t seed = 1;
  std::string format = "graph6";
  int h = 3;
  std::optional<int> verify_h;
  std::string in = "-";
  std::string labels = "-";
  int h_min = 2;
  int h_max = 2;
  std::optional<std::int64_t> budget;
  bool parallel = false;
  bool witnesses = false;
  std::string sequence;
  bool realize = false;
};

int Generate(const Options& o, std::ostream& out) {
  const Graph g = o.random ? RandomRegular(o.n, o.r, o.seed)
                           : BuildRegular(o.n, o.r);
  out << (o.format == "edgelist" ? WriteEdgeList(g) : EncodeGraph6(g) + "\n");
  return kExitOk;
}

int Label(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = ReadGraph(ReadInput(o.in, in));
  const Labeling labeling = (o.h == 3 && IsRegular(g, 5))
                                ? LabelFiveRegular(g)
                                : LabelOddRegularViaFactor(g, o.h);
  const LabelingRecord record = MakeLabelingRecord(g, labeling);
  out << FormatLabelingRecord(record);
  return *record.verdict ? kExitOk : kExitFailure;
}

int Verify(const Options& o, std::istream& in, std::ostream& out) {
  const LabelingRecord record = ParseLabelingRecord(ReadInput(o.labels, in));
  auto [g, labeling] = RecordContents(record);
  if (o.verify_h) labeling.h = *o.verify_h;
  const bool ok = IsZeroSum(g, labeling);
  out << "verdict " << (ok ? "true" : "false") << '\n';
  out << "sums";
  for (int s : VertexSums(g, labeling)) out << ' ' << s;
  out << '\n';
  return ok ? kExitOk : kExitFailure;
}

int NullSet(const Options& o, std::istream& in, std::ostream& out) {
  const std::int64_t budget = ResolveBudget(o.budget);
  const Graph g = ReadGraph(ReadInput(o.in, in));
  const NullSetReport report =
      NullSetOracle(g, o.h_min, o.h_max, budget, o.parallel);
  for (const NullSetEntry& entry : report.entries) {
    out << "h " << entry.h << ' ' << MembershipName(entry.verdict) << '\n';
    if (o.witnesses && entry.witness) {
      out << "witness " << entry.h;
      for (int label : entry.witness->labels) out << ' ' << label;
      out << '\n';
    }
  }
  return kExitOk;
}

int MatchingCommand(const Options& o, std::istream& in, std::ostream& out) {
  const Graph g = ReadGraph(ReadInput(o.in, in));
  const MatchingReport report = MaxMatching(g);
  out << "size " << report.matching.size() << '\n';
  out << "perfect " << (report.is_perfect ? "true" : "false") << '\n';
  for (EdgeIndex e : report.matching.edge_indices) {
    out << "edge " << g.edge(e).u << ' ' << g.edge(e).v << '\n';
  }
  return kExitOk;
}

int Graphical(const Options& o, std::ostream& out) {
  const DegreeSequence d(ParseSequence(o.sequence));
  const bool graphical = IsGraphical(d);
  out << (graphical ? "graphical" : "not graphical") << '\n';
  if (graphical && o.realize) out << EncodeGraph6(Realize(d)) << '\n';
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Zero-sum magic labelings of regular graphs"};
  app.name(args.empty() ? "magiclab" : args.front());
  app.require_subcommand(1);
  // "-h" would clash with the --h modulus option.
  app.set_help_flag("--help", "Print this help message and exit");

  auto* generate = app.add_subcommand(
      "generate", "Print an r-regular graph (r in {4,5}) or a random one");
  generate->add_option("--n", o.n, "vertex count")->required();
  generate->add_option("--r", o.r, "degree")->required();
  generate->add_flag("--random", o.random, "use the pairing model");
  generate->add_option("--seed", o.seed, "random seed")->capture_default_str();
  generate->add_option("--format", o.format, "graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();

  auto* label = app.add_subcommand(
      "label", "Label an odd-regular graph through a perfect matching");
  label->add_option("--h", o.h, "modulus")->capture_default_str();
  label->add_option("--in", o.in, "graph file, '-' for stdin")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check a labeling record");
  verify->add_option("--h", o.verify_h, "modulus (defaults to the file's h)");
  verify->add_option("--labels", o.labels, "record file, '-' for stdin")
      ->capture_default_str();

  auto* nullset = app.add_subcommand(
      "nullset", "Decide zero-sum h-magic membership by exhaustive search");
  nullset->add_option("--hmin", o.h_min, "smallest modulus")->required();
  nullset->add_option("--hmax", o.h_max, "largest modulus")->required();
  nullset->add_option("--budget", o.budget,
                      "search nodes per h (env MAGICLAB_BUDGET)");
  nullset->add_option("--in", o.in, "graph file, '-' for stdin")
      ->capture_default_str();
  nullset->add_flag("--parallel", o.parallel, "one thread per modulus");
  nullset->add_flag("--witnesses", o.witnesses, "print witness labelings");

  auto* matching = app.add_subcommand("matching", "Maximum matching");
  matching->add_option("--in", o.in, "graph file, '-' for stdin")
      ->capture_default_str();

  auto* graphical = app.add_subcommand("graphical", "Test a degree sequence");
  graphical->add_option("--sequence", o.sequence, "comma-separated degrees")
      ->required();
  graphical->add_flag("--realize", o.realize, "print a realization (graph6)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return Generate(o, out);
    if (*label) return Label(o, in, out);
    if (*verify) return Verify(o, in, out);
    if (*nullset) return NullSet(o, in, out);
    if (*matching) return MatchingCommand(o, in, out);
    if (*graphical) return Graphical(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kMalformedInput ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace magiclab
