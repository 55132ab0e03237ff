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

#include <doctest.h>

#include <algorithm>

#include "magiclab/construct.h"
#include "magiclab/error.h"
#include "oracles.h"
#include "test_graphs.h"

namespace magiclab {
namespace {

template <typename F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kLoopEdge;
}

TEST_CASE("graph6 known strings") {
  CHECK(EncodeGraph6(testing::Complete(2)) == "A_");
  CHECK(EncodeGraph6(testing::Edgeless(1)) == "@");
  CHECK(EncodeGraph6(testing::Edgeless(2)) == "A?");
  CHECK(EncodeGraph6(Graph()) == "?");
  // Reference strings produced by networkx.to_graph6_bytes.
  CHECK(EncodeGraph6(testing::Petersen()) == "IheA@GUAo");
  CHECK(EncodeGraph6(BaseK6()) == "E~~w");
  CHECK(EncodeGraph6(testing::Path(3)) == "Bg");

  CHECK(DecodeGraph6("A_") == testing::Complete(2));
  CHECK(DecodeGraph6("A?") == testing::Edgeless(2));
  CHECK(DecodeGraph6("IheA@GUAo\n") == testing::Petersen());
}

TEST_CASE("graph6 malformed input") {
  CHECK(CodeOf([] { DecodeGraph6("E~~"); }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { DecodeGraph6("E~~ww"); }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { DecodeGraph6("A "); }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { DecodeGraph6(""); }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { DecodeGraph6("~?@G"); }) == ErrorCode::kMalformedInput);
  // K2 with a padding bit set.
  CHECK(CodeOf([] { DecodeGraph6("A`"); }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { EncodeGraph6(testing::Edgeless(63)); }) ==
        ErrorCode::kTooLarge);
  CHECK(EncodeGraph6(testing::Edgeless(62)).front() == '}');
}

TEST_CASE("property: graph6 round trip and reference agreement on corpus") {
  for (const auto& [name, g] : testing::Corpus()) {
    CAPTURE(name);
    const std::string line = EncodeGraph6(g);
    for (char c : line) {
      CHECK(static_cast<unsigned char>(c) >= 63);
      CHECK(static_cast<unsigned char>(c) <= 126);
    }
    CHECK(DecodeGraph6(line) == g);
    int n = -1;
    std::vector<Edge> edges;
    REQUIRE(testing::ReferenceDecodeGraph6(line, n, edges));
    CHECK(n == g.num_vertices());
    CHECK(std::ranges::equal(edges, g.edges()));
  }
}

TEST_CASE("edge list") {
  CHECK(ReadEdgeList("2 1\n0 1\n") == testing::Complete(2));
  CHECK(ReadEdgeList("# triangle\n3 3 # header\n0 1\n\n1 2\n2 0  # closing\n") ==
        testing::Cycle(3));
  CHECK(CodeOf([] { ReadEdgeList("3 1\n0 3\n"); }) ==
        ErrorCode::kVertexOutOfRange);
  CHECK(CodeOf([] { ReadEdgeList("3 2\n0 1\n"); }) ==
        ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { ReadEdgeList("3 1\n0 x\n"); }) ==
        ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { ReadEdgeList("3\n"); }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { ReadEdgeList(""); }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { ReadEdgeList("3 1\n0 1 2\n"); }) ==
        ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { ReadEdgeList("3 2\n0 1\n1 0\n"); }) ==
        ErrorCode::kDuplicateEdge);
  CHECK(WriteEdgeList(testing::Path(3)) == "3 2\n0 1\n1 2\n");
}

TEST_CASE("property: edge list round trip on corpus") {
  for (const auto& [name, g] : testing::Corpus()) {
    CAPTURE(name);
    CHECK(ReadEdgeList(WriteEdgeList(g)) == g);
  }
}

TEST_CASE("format detection") {
  CHECK(ReadGraph("  A_\n") == testing::Complete(2));
  CHECK(ReadGraph(">>graph6<<A_\n") == testing::Complete(2));
  CHECK(ReadGraph("2 1\n0 1\n") == testing::Complete(2));
  CHECK(ReadGraph("# comment\n2 1\n0 1\n") == testing::Complete(2));
  CHECK(CodeOf([] { ReadGraph("A_\nA_\n"); }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { ReadGraph("   "); }) == ErrorCode::kMalformedInput);
}

TEST_CASE("labeling record") {
  const Graph k6 = BaseK6();
  const Labeling l = LabelFiveRegular(k6);
  const LabelingRecord record = MakeLabelingRecord(k6, l);
  const std::string text = FormatLabelingRecord(record);
  CHECK(text.starts_with("h 3\nn 6\nm 15\nedge 0 1 "));
  CHECK(text.find("verdict true\nsums 0 0 0 0 0 0\n") != std::string::npos);

  const auto [g, loaded] = LoadLabelingRecord(text);
  CHECK(g == k6);
  CHECK(loaded == l);

  // Entries may come in any order and without verdict or sums.
  const auto [c4, labels] = LoadLabelingRecord(
      "h 3\nn 4\nedge 3 2 1\nedge 1 2 2\nedge 0 3 2\nedge 0 1 1\n");
  CHECK(c4 == testing::Cycle(4));
  CHECK(labels.labels == std::vector<int>{1, 2, 2, 1});
  CHECK(IsZeroSum(c4, labels));

  CHECK(CodeOf([&] {
          std::string bad = text;
          bad.replace(bad.find("verdict true"), 12, "verdict false");
          LoadLabelingRecord(bad);
        }) == ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { LoadLabelingRecord("h 3\nn 2\nedge 0 1 1\nsums 0 0\n"); }) ==
        ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { LoadLabelingRecord("n 2\nedge 0 1 1\n"); }) ==
        ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { LoadLabelingRecord("h 3\nn 2\nm 2\nedge 0 1 1\n"); }) ==
        ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { LoadLabelingRecord("h 3\nn 2\nbogus 1\n"); }) ==
        ErrorCode::kMalformedInput);
  CHECK(CodeOf([] { LoadLabelingRecord("h 3\nn 2\nedge 0 1\n"); }) ==
        ErrorCode::kMalformedInput);
}

TEST_CASE("property: labeling records round trip") {
  for (const auto& [name, g] : testing::Corpus()) {
    if (!IsRegular(g, 5) || g.num_vertices() == 0) continue;
    CAPTURE(name);
    const Labeling l = LabelFiveRegular(g);
    const std::string text = FormatLabelingRecord(MakeLabelingRecord(g, l));
    const auto [g2, l2] = LoadLabelingRecord(text);
    CHECK(g2 == g);
    CHECK(l2 == l);
    CHECK(FormatLabelingRecord(MakeLabelingRecord(g2, l2)) == text);
  }
}

}  // namespace
}  // namespace magiclab
