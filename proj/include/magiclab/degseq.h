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

#ifndef MAGICLAB_DEGSEQ_H_
#define MAGICLAB_DEGSEQ_H_

#include <span>
#include <vector>

#include "magiclab/graph.h"

namespace magiclab {

// A degree sequence kept in nonincreasing order. The constructor sorts, so
// callers may pass the degrees in any order. Negative entries are rejected
// with kMalformedInput.
class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<int> degrees);

  static DegreeSequence Of(const Graph& g);

  std::span<const int> values() const { return d_; }
  int size() const { return static_cast<int>(d_.size()); }
  int operator[](int i) const { return d_[i]; }
  long long Sum() const;

  friend bool operator==(const DegreeSequence&,
                         const DegreeSequence&) = default;

 private:
  std::vector<int> d_;
};

// max(d) <= n-1 and the sum is even. Necessary, not sufficient.
bool NecessaryConditions(const DegreeSequence& d);

// Erdos-Gallai: for every k in 1..n,
//   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k),
// together with an even total.
bool IsGraphical(const DegreeSequence& d);

// Havel-Hakimi realization. Vertex i of the result is assigned d[i]. At each
// step the remaining vertex of highest residual degree (lowest index on ties)
// is joined to the next-highest residual vertices (lowest index on ties).
// Throws kNotGraphical.
Graph Realize(const DegreeSequence& d);

// Sufficient condition for a 1-factor: n is even and (d_1-1, ..., d_n-1) is a
// nonnegative graphical sequence.
bool OneFactorDegreeCondition(const Graph& g);

}  // namespace magiclab

#endif  // MAGICLAB_DEGSEQ_H_
