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

// Brute-force oracles. None of these call into the code path they check.

#ifndef MAGICLAB_TESTS_ORACLES_H_
#define MAGICLAB_TESTS_ORACLES_H_

#include <set>
#include <string>
#include <vector>

#include "magiclab/graph.h"

namespace magiclab::testing {

// Degree sequences (sorted nonincreasing) of every labelled simple graph on n
// vertices, found by enumerating all 2^(n(n-1)/2) edge subsets.
std::set<std::vector<int>> RealizedSequences(int n);

// Every nonincreasing sequence of length n with entries in 0..max_entry.
std::vector<std::vector<int>> NonincreasingSequences(int n, int max_entry);

// graph6 decoder written against the format description as a bit string,
// independent of DecodeGraph6. Returns the edge list (u < v, sorted) and sets
// n; returns false on a malformed line.
bool ReferenceDecodeGraph6(const std::string& line, int& n,
                           std::vector<Edge>& edges);

}  // namespace magiclab::testing

#endif  // MAGICLAB_TESTS_ORACLES_H_
