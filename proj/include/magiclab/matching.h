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

#ifndef MAGICLAB_MATCHING_H_
#define MAGICLAB_MATCHING_H_

#include <vector>

#include "magiclab/graph.h"

namespace magiclab {

// Edge indices into the owning graph's canonical edge list, ascending.
struct Matching {
  std::vector<EdgeIndex> edge_indices;

  int size() const { return static_cast<int>(edge_indices.size()); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

struct MatchingReport {
  Matching matching;
  bool is_perfect = false;
};

// No two edges share a vertex and every index is in range.
bool IsMatching(const Graph& g, const Matching& m);

// Maximum-cardinality matching by Edmonds' blossom algorithm. Roots are tried
// in ascending vertex order and each BFS scans neighbours in ascending order,
// so the result is a function of the graph alone.
MatchingReport MaxMatching(const Graph& g);

// Throws kNoPerfectMatching when the maximum matching leaves a vertex exposed.
Matching PerfectMatching(const Graph& g);

inline constexpr int kBruteForceEdgeCap = 24;

// Exhaustive include/exclude search with independence pruning. Test oracle
// only; throws kTooLarge above kBruteForceEdgeCap edges.
MatchingReport BruteForceMaxMatching(const Graph& g);

}  // namespace magiclab

#endif  // MAGICLAB_MATCHING_H_
