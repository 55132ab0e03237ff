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

#ifndef MAGICLAB_IO_H_
#define MAGICLAB_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "magiclab/graph.h"
#include "magiclab/magic.h"

namespace magiclab {

inline constexpr int kGraph6MaxOrder = 62;

// Short-form graph6: one byte n + 63, then the upper-triangle adjacency bits
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed six per byte (big-endian within
// the group, zero-padded) and offset by 63. Throws kTooLarge for n > 62.
std::string EncodeGraph6(const Graph& g);

// Inverse of EncodeGraph6. Trailing newline/CR is tolerated. Throws
// kMalformedInput on a bad length, a byte outside 63..126, a long-form header
// or nonzero padding.
Graph DecodeGraph6(std::string_view line);

// "n m" header then m lines "u v"; '#' starts a comment running to end of
// line. Throws kMalformedInput; semantic errors come from Graph::Build.
Graph ReadEdgeList(std::string_view text);
std::string WriteEdgeList(const Graph& g);

// Edge list when the first significant character is a digit or '#',
// otherwise graph6 (an optional ">>graph6<<" prefix is skipped).
Graph ReadGraph(std::string_view text);

// Line-oriented key/value form of a labeling, fields in this order:
//   h <modulus>
//   n <vertices>
//   m <edges>
//   edge <u> <v> <label>      (m lines, canonical edge order)
//   verdict <true|false>
//   sums <s_0> ... <s_{n-1}>
struct LabelingRecord {
  int h = 0;
  int n = 0;
  std::vector<std::tuple<Vertex, Vertex, int>> entries;
  std::optional<bool> verdict;
  std::optional<std::vector<int>> sums;
};

LabelingRecord MakeLabelingRecord(const Graph& g, const Labeling& labeling);
std::string FormatLabelingRecord(const LabelingRecord& record);

// Parses the text form. verdict and sums are optional so hand-written label
// files can omit them; the m line is optional too, but must match when given.
LabelingRecord ParseLabelingRecord(std::string_view text);

// Graph and labeling carried by a record, the labels permuted into canonical
// edge order.
std::pair<Graph, Labeling> RecordContents(const LabelingRecord& record);

// ParseLabelingRecord plus consistency: a stored verdict or sums line must
// equal the values recomputed from the edges. Throws kMalformedInput.
std::pair<Graph, Labeling> LoadLabelingRecord(std::string_view text);

}  // namespace magiclab

#endif  // MAGICLAB_IO_H_
