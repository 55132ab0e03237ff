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

#include "magiclab/io.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>

#include "magiclab/error.h"

namespace magiclab {
namespace {

constexpr int kOffset = 63;

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, what);
}

// Whitespace-separated tokens per line with '#' comments removed; blank lines
// dropped. Each entry keeps its 1-based line number for messages.
std::vector<std::pair<int, std::vector<std::string>>> Tokenize(
    std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) lines.emplace_back(number, std::move(tokens));
    start = end + 1;
  }
  return lines;
}

long long ParseInt(const std::string& token, int line) {
  long long value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    Malformed("line " + std::to_string(line) + ": expected integer, got '" +
              token + "'");
  }
  return value;
}

int ParseCount(const std::string& token, int line) {
  const long long value = ParseInt(token, line);
  if (value < 0 || value > 1'000'000'000) {
    Malformed("line " + std::to_string(line) + ": count out of range");
  }
  return static_cast<int>(value);
}

int ParseVertex(const std::string& token, int line) {
  const long long value = ParseInt(token, line);
  if (value < INT32_MIN || value > INT32_MAX) {
    Malformed("line " + std::to_string(line) + ": vertex out of range");
  }
  return static_cast<int>(value);
}

}  // namespace

std::string EncodeGraph6(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kGraph6MaxOrder) {
    throw Error(ErrorCode::kTooLarge,
                "graph6 short form holds at most 62 vertices, got " +
                    std::to_string(n));
  }
  const size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  // Column-major position of (u, v), u < v: all pairs of earlier columns
  // precede column v, then u.
  for (const Edge& e : g.edges()) {
    const size_t k = static_cast<size_t>(e.v) * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  std::string out(1, static_cast<char>(n + kOffset));
  for (unsigned char group : packed) out.push_back(static_cast<char>(group + kOffset));
  return out;
}

Graph DecodeGraph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  if (line.empty()) Malformed("empty graph6 line");
  for (char c : line) {
    const int byte = static_cast<unsigned char>(c);
    if (byte < kOffset || byte > 126) {
      Malformed("graph6 byte " + std::to_string(byte) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(line[0]) - kOffset;
  if (n > kGraph6MaxOrder) Malformed("long-form graph6 header unsupported");
  const size_t bits = static_cast<size_t>(n) * (n - 1) / 2;
  const size_t groups = (bits + 5) / 6;
  if (line.size() != 1 + groups) {
    Malformed("graph6 line for n=" + std::to_string(n) + " needs " +
              std::to_string(1 + groups) + " bytes, got " +
              std::to_string(line.size()));
  }
  std::vector<Edge> edges;
  size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int group = static_cast<unsigned char>(line[1 + k / 6]) - kOffset;
      if (group & (1 << (5 - k % 6))) edges.push_back({u, v});
    }
  }
  for (; k < groups * 6; ++k) {
    const int group = static_cast<unsigned char>(line[1 + k / 6]) - kOffset;
    if (group & (1 << (5 - k % 6))) Malformed("nonzero graph6 padding");
  }
  return Graph::Build(n, edges);
}

Graph ReadEdgeList(std::string_view text) {
  const auto lines = Tokenize(text);
  if (lines.empty()) Malformed("edge list is empty");
  const auto& [header_line, header] = lines.front();
  if (header.size() != 2) {
    Malformed("line " + std::to_string(header_line) + ": expected 'n m'");
  }
  const int n = ParseCount(header[0], header_line);
  const int m = ParseCount(header[1], header_line);
  if (static_cast<int>(lines.size()) - 1 != m) {
    Malformed("header announces " + std::to_string(m) + " edges, found " +
              std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, tokens] = lines[i];
    if (tokens.size() != 2) {
      Malformed("line " + std::to_string(number) + ": expected 'u v'");
    }
    edges.push_back({ParseVertex(tokens[0], number),
                     ParseVertex(tokens[1], number)});
  }
  return Graph::Build(n, edges);
}

std::string WriteEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph ReadGraph(std::string_view text) {
  auto skip_space = [&] {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text[0]))) {
      text.remove_prefix(1);
    }
  };
  skip_space();
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    skip_space();
  }
  if (text.empty()) Malformed("no graph in input");
  if (std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '#') {
    return ReadEdgeList(text);
  }
  const size_t end = text.find('\n');
  std::string_view line = text.substr(0, end);
  if (end != std::string_view::npos) {
    std::string_view rest = text.substr(end + 1);
    if (rest.find_first_not_of(" \t\r\n") != std::string_view::npos) {
      Malformed("expected a single graph6 line");
    }
  }
  return DecodeGraph6(line);
}

LabelingRecord MakeLabelingRecord(const Graph& g, const Labeling& labeling) {
  LabelingRecord record;
  record.h = labeling.h;
  record.n = g.num_vertices();
  record.sums = VertexSums(g, labeling);
  record.verdict = IsZeroSum(g, labeling);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    record.entries.emplace_back(g.edge(e).u, g.edge(e).v, labeling.labels[e]);
  }
  return record;
}

std::string FormatLabelingRecord(const LabelingRecord& record) {
  std::ostringstream out;
  out << "h " << record.h << '\n';
  out << "n " << record.n << '\n';
  out << "m " << record.entries.size() << '\n';
  for (const auto& [u, v, label] : record.entries) {
    out << "edge " << u << ' ' << v << ' ' << label << '\n';
  }
  if (record.verdict) out << "verdict " << (*record.verdict ? "true" : "false") << '\n';
  if (record.sums) {
    out << "sums";
    for (int s : *record.sums) out << ' ' << s;
    out << '\n';
  }
  return out.str();
}

LabelingRecord ParseLabelingRecord(std::string_view text) {
  LabelingRecord record;
  std::optional<int> h, n, m;
  for (const auto& [number, tokens] : Tokenize(text)) {
    const std::string& key = tokens[0];
    const std::string where = "line " + std::to_string(number) + ": ";
    auto expect_args = [&](size_t count) {
      if (tokens.size() != count + 1) {
        Malformed(where + "'" + key + "' takes " + std::to_string(count) +
                  " value(s)");
      }
    };
    if (key == "h") {
      expect_args(1);
      h = ParseCount(tokens[1], number);
    } else if (key == "n") {
      expect_args(1);
      n = ParseCount(tokens[1], number);
    } else if (key == "m") {
      expect_args(1);
      m = ParseCount(tokens[1], number);
    } else if (key == "edge") {
      expect_args(3);
      const long long label = ParseInt(tokens[3], number);
      if (label < INT32_MIN || label > INT32_MAX) {
        Malformed(where + "label out of range");
      }
      record.entries.emplace_back(ParseVertex(tokens[1], number),
                                  ParseVertex(tokens[2], number),
                                  static_cast<int>(label));
    } else if (key == "verdict") {
      expect_args(1);
      if (tokens[1] != "true" && tokens[1] != "false") {
        Malformed(where + "verdict must be true or false");
      }
      record.verdict = tokens[1] == "true";
    } else if (key == "sums") {
      std::vector<int> sums;
      for (size_t i = 1; i < tokens.size(); ++i) {
        sums.push_back(ParseVertex(tokens[i], number));
      }
      record.sums = std::move(sums);
    } else {
      Malformed(where + "unknown key '" + key + "'");
    }
  }
  if (!h) Malformed("missing 'h' line");
  if (!n) Malformed("missing 'n' line");
  if (m && *m != static_cast<int>(record.entries.size())) {
    Malformed("'m' says " + std::to_string(*m) + " edges, found " +
              std::to_string(record.entries.size()));
  }
  record.h = *h;
  record.n = *n;
  return record;
}

std::pair<Graph, Labeling> RecordContents(const LabelingRecord& record) {
  std::vector<Edge> edges;
  edges.reserve(record.entries.size());
  for (const auto& [u, v, label] : record.entries) edges.push_back({u, v});
  Graph g = Graph::Build(record.n, edges);
  Labeling labeling{record.h, std::vector<int>(g.num_edges(), 0)};
  for (const auto& [u, v, label] : record.entries) {
    labeling.labels[g.FindEdge(u, v)] = label;
  }
  return {std::move(g), std::move(labeling)};
}

std::pair<Graph, Labeling> LoadLabelingRecord(std::string_view text) {
  const LabelingRecord record = ParseLabelingRecord(text);
  auto contents = RecordContents(record);
  const auto& [g, labeling] = contents;
  if (record.sums && *record.sums != VertexSums(g, labeling)) {
    Malformed("stored sums disagree with the labels");
  }
  if (record.verdict && *record.verdict != IsZeroSum(g, labeling)) {
    Malformed("stored verdict disagrees with the labels");
  }
  return contents;
}

}  // namespace magiclab
