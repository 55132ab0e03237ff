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

#ifndef MAGICLAB_CONSTRUCT_H_
#define MAGICLAB_CONSTRUCT_H_

#include <array>
#include <cstdint>

#include "magiclab/graph.h"

namespace magiclab {

// Two 2-edge matchings M1 and M2 of a regular graph, given by edge index.
// Edges inside each matching are vertex-disjoint and the matchings share no
// edge. M1 and M2 may share vertices.
struct SurgeryPlan {
  std::array<EdgeIndex, 2> m1;
  std::array<EdgeIndex, 2> m2;

  friend bool operator==(const SurgeryPlan&, const SurgeryPlan&) = default;
};

bool IsValidPlan(const Graph& g, const SurgeryPlan& plan);

// K6: 15 edges, 5-regular.
Graph BaseK6();

// The octahedron K_{2,2,2}: K6 minus the perfect matching
// {(0,1), (2,3), (4,5)}. 12 edges, 4-regular.
Graph BaseOctahedron();

// Lexicographically first plan by edge index: M1 is the first vertex-disjoint
// pair (i, j), i < j, that admits some M2; M2 is the first vertex-disjoint
// pair avoiding M1's edges. When the plain greedy scan succeeds this is
// exactly its result. Throws kNoPlanFound.
SurgeryPlan FindSurgeryPlan(const Graph& g);

// Grows an r-regular graph (r in {4, 5}) by two vertices a = n, b = n + 1:
// removes the four plan edges, joins the endpoints of M1 to a and those of M2
// to b, and for r = 5 adds the edge (a, b). Throws kInvalidPlan when the plan
// does not fit g, kUnsupportedParameters when g is not r-regular for r in
// {4, 5}.
Graph ExpandTwo(const Graph& g, const SurgeryPlan& plan, int r);

// r-regular simple graph of order n, built from the r-specific base graph by
// repeated ExpandTwo. Requires r in {4, 5}, n even, n >= 6; otherwise throws
// kUnsupportedParameters.
Graph BuildRegular(int n, int r);

inline constexpr int kPairingRetryLimit = 1000;

// Random r-regular graph from the pairing model with seeded mt19937_64.
// Stubs are paired one at a time; a pair that would create a loop or a
// parallel edge is redrawn, and an attempt that gets stuck is restarted.
// Reproducible bit-for-bit for a given seed. Throws kParityViolation when
// n*r is odd, kUnsupportedParameters when r < 0 or r >= n (n > 0),
// kRetryLimitExceeded after kPairingRetryLimit failed attempts.
Graph RandomRegular(int n, int r, std::uint64_t seed);

}  // namespace magiclab

#endif  // MAGICLAB_CONSTRUCT_H_
