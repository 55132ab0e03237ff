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

#include "magiclab/degseq.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "magiclab/error.h"

namespace magiclab {

DegreeSequence::DegreeSequence(std::vector<int> degrees)
    : d_(std::move(degrees)) {
  for (int x : d_) {
    if (x < 0) {
      throw Error(ErrorCode::kMalformedInput,
                  "negative degree " + std::to_string(x));
    }
  }
  std::sort(d_.begin(), d_.end(), std::greater<>());
}

DegreeSequence DegreeSequence::Of(const Graph& g) {
  return DegreeSequence(Degrees(g));
}

long long DegreeSequence::Sum() const {
  return std::accumulate(d_.begin(), d_.end(), 0LL);
}

bool NecessaryConditions(const DegreeSequence& d) {
  const int n = d.size();
  if (n > 0 && d[0] > n - 1) return false;
  return d.Sum() % 2 == 0;
}

bool IsGraphical(const DegreeSequence& d) {
  if (!NecessaryConditions(d)) return false;
  const int n = d.size();
  long long lhs = 0;
  for (int k = 1; k <= n; ++k) {
    lhs += d[k - 1];
    long long rhs = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

Graph Realize(const DegreeSequence& d) {
  if (!IsGraphical(d)) {
    throw Error(ErrorCode::kNotGraphical, "sequence is not graphical");
  }
  const int n = d.size();
  std::vector<int> residual(d.values().begin(), d.values().end());
  std::vector<char> done(n, 0);
  std::vector<Edge> edges;
  // Residual degree descending, then vertex index ascending.
  auto before = [&](int a, int b) {
    return residual[a] != residual[b] ? residual[a] > residual[b] : a < b;
  };
  std::vector<int> order(n);
  for (int step = 0; step < n; ++step) {
    order.clear();
    for (int v = 0; v < n; ++v) {
      if (!done[v]) order.push_back(v);
    }
    std::sort(order.begin(), order.end(), before);
    const int hub = order.front();
    const int need = residual[hub];
    done[hub] = 1;
    residual[hub] = 0;
    if (need == 0) continue;
    // Graphicality guarantees enough positive residuals follow the hub.
    for (int j = 1; j <= need; ++j) {
      const int w = order[j];
      --residual[w];
      edges.push_back({hub, w});
    }
  }
  return Graph::Build(n, edges);
}

bool OneFactorDegreeCondition(const Graph& g) {
  if (g.num_vertices() % 2 != 0) return false;
  std::vector<int> reduced = Degrees(g);
  for (int& x : reduced) {
    if (x == 0) return false;
    --x;
  }
  return IsGraphical(DegreeSequence(std::move(reduced)));
}

}  // namespace magiclab
