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

#ifndef MAGICLAB_MAGIC_H_
#define MAGICLAB_MAGIC_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "magiclab/graph.h"

namespace magiclab {

// An edge labeling into Z_h, indexed like the graph's edge list. A valid
// zero-sum labeling uses only labels in 1..h-1; values read from files may be
// arbitrary integers and are reduced mod h.
struct Labeling {
  int h = 0;
  std::vector<int> labels;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

// s(v) = sum of labels on edges at v, reduced into 0..h-1. Throws
// kLengthMismatch when the label count differs from the edge count and
// kPreconditionViolated when h < 2.
std::vector<int> VertexSums(const Graph& g, const Labeling& labeling);

// Every label is nonzero mod h and every vertex sum is 0 mod h.
bool IsZeroSum(const Graph& g, const Labeling& labeling);

// Zero-sum 3-magic labeling of a 5-regular graph: edges of a perfect matching
// get 2, all others get 1, so each vertex sums to 2 + 4 = 6. Throws
// kNotFiveRegular, or kNoPerfectMatching (which no 5-regular simple graph
// should trigger).
Labeling LabelFiveRegular(const Graph& g);

// The same matching construction for any odd r with h >= 3 dividing r + 1:
// s(v) = 2 + (r - 1) = r + 1. This extends the 5-regular statement; it is not
// a published result in its own right. Throws kPreconditionViolated naming
// the failed clause, or kNoPerfectMatching.
Labeling LabelOddRegularViaFactor(const Graph& g, int h);

// h = 2 admits only the label 1, so s(v) = deg(v) mod 2.
bool CheckH2Characterization(const Graph& g);

enum class Membership { kMember, kNonMember, kUndecided };

struct NullSetEntry {
  int h = 0;
  Membership verdict = Membership::kUndecided;
  std::optional<Labeling> witness;  // present iff verdict == kMember
  std::int64_t nodes = 0;           // search nodes spent
};

struct NullSetReport {
  int h_min = 0;
  int h_max = 0;
  std::vector<NullSetEntry> entries;  // one per h, ascending

  const NullSetEntry& at(int h) const { return entries[h - h_min]; }
};

inline constexpr std::int64_t kDefaultOracleBudget = 100'000'000;

// Exhaustive backtracking for a zero-sum h-magic labeling.
//
// Edges are ordered by vertex elimination: repeatedly take the vertex with
// the fewest undecided incident edges (lowest index on ties) and append those
// edges in ascending index. When an edge is the last one at a vertex its label
// is forced to cancel that vertex's partial sum; other edges try 1..h-1 in
// ascending order. The first witness found is therefore the lexicographically
// first one under that edge order. Exceeding budget search nodes yields
// kUndecided, never kNonMember.
NullSetEntry DecideZeroSum(const Graph& g, int h,
                           std::int64_t budget = kDefaultOracleBudget);

// DecideZeroSum for every h in [h_min, h_max]. With parallel set, each h runs
// on its own thread; results are merged in h order either way. Throws
// kPreconditionViolated unless 2 <= h_min <= h_max.
NullSetReport NullSetOracle(const Graph& g, int h_min, int h_max,
                            std::int64_t budget = kDefaultOracleBudget,
                            bool parallel = false);

// The edge order DecideZeroSum searches in; exposed for tests.
std::vector<EdgeIndex> EliminationOrder(const Graph& g);

}  // namespace magiclab

#endif  // MAGICLAB_MAGIC_H_
