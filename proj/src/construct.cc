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

#include "magiclab/construct.h"

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "magiclab/error.h"
#include "magiclab/random.h"

namespace magiclab {
namespace {

bool Disjoint(const Edge& a, const Edge& b) {
  return a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v;
}

Graph Complete(int n, std::span<const Edge> removed) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const Edge e{u, v};
      if (std::find(removed.begin(), removed.end(), e) == removed.end()) {
        edges.push_back(e);
      }
    }
  }
  return Graph::Build(n, edges);
}

// First vertex-disjoint pair (i, j), i < j, with neither index in excluded.
std::optional<std::array<EdgeIndex, 2>> FirstDisjointPair(
    const Graph& g, std::span<const EdgeIndex> excluded) {
  auto skip = [&](EdgeIndex e) {
    return std::find(excluded.begin(), excluded.end(), e) != excluded.end();
  };
  const int m = g.num_edges();
  for (EdgeIndex i = 0; i < m; ++i) {
    if (skip(i)) continue;
    for (EdgeIndex j = i + 1; j < m; ++j) {
      if (skip(j)) continue;
      if (Disjoint(g.edge(i), g.edge(j))) return std::array{i, j};
    }
  }
  return std::nullopt;
}

void CheckSupported(int n, int r) {
  if ((r != 4 && r != 5) || n % 2 != 0 || n < 6) {
    throw Error(ErrorCode::kUnsupportedParameters,
                "need r in {4,5}, even n >= 6; got n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
  }
}

}  // namespace

bool IsValidPlan(const Graph& g, const SurgeryPlan& plan) {
  const int m = g.num_edges();
  for (EdgeIndex e : {plan.m1[0], plan.m1[1], plan.m2[0], plan.m2[1]}) {
    if (e < 0 || e >= m) return false;
  }
  if (!Disjoint(g.edge(plan.m1[0]), g.edge(plan.m1[1]))) return false;
  if (!Disjoint(g.edge(plan.m2[0]), g.edge(plan.m2[1]))) return false;
  for (EdgeIndex a : plan.m1) {
    for (EdgeIndex b : plan.m2) {
      if (a == b) return false;
    }
  }
  return true;
}

Graph BaseK6() { return Complete(6, {}); }

Graph BaseOctahedron() {
  const Edge matching[] = {{0, 1}, {2, 3}, {4, 5}};
  return Complete(6, matching);
}

SurgeryPlan FindSurgeryPlan(const Graph& g) {
  const int m = g.num_edges();
  for (EdgeIndex i = 0; i < m; ++i) {
    for (EdgeIndex j = i + 1; j < m; ++j) {
      if (!Disjoint(g.edge(i), g.edge(j))) continue;
      const EdgeIndex m1[] = {i, j};
      if (auto m2 = FirstDisjointPair(g, m1)) {
        return SurgeryPlan{{i, j}, *m2};
      }
    }
  }
  throw Error(ErrorCode::kNoPlanFound,
              "no two edge-disjoint 2-matchings in graph with " +
                  std::to_string(m) + " edges");
}

Graph ExpandTwo(const Graph& g, const SurgeryPlan& plan, int r) {
  if ((r != 4 && r != 5) || !IsRegular(g, r)) {
    throw Error(ErrorCode::kUnsupportedParameters,
                "input must be r-regular with r in {4,5}");
  }
  if (!IsValidPlan(g, plan)) {
    throw Error(ErrorCode::kInvalidPlan, "plan does not fit the graph");
  }
  const int n = g.num_vertices();
  const Vertex a = n;
  const Vertex b = n + 1;
  const EdgeIndex removed[] = {plan.m1[0], plan.m1[1], plan.m2[0],
                               plan.m2[1]};

  std::vector<Edge> edges;
  edges.reserve(g.num_edges() + 5);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    if (std::find(std::begin(removed), std::end(removed), e) ==
        std::end(removed)) {
      edges.push_back(g.edge(e));
    }
  }
  for (EdgeIndex e : plan.m1) {
    edges.push_back({g.edge(e).u, a});
    edges.push_back({g.edge(e).v, a});
  }
  for (EdgeIndex e : plan.m2) {
    edges.push_back({g.edge(e).u, b});
    edges.push_back({g.edge(e).v, b});
  }
  if (r == 5) edges.push_back({a, b});
  return Graph::Build(n + 2, edges);
}

Graph BuildRegular(int n, int r) {
  CheckSupported(n, r);
  Graph g = r == 5 ? BaseK6() : BaseOctahedron();
  while (g.num_vertices() < n) {
    g = ExpandTwo(g, FindSurgeryPlan(g), r);
  }
  return g;
}

Graph RandomRegular(int n, int r, std::uint64_t seed) {
  if (n < 0 || r < 0 || (n > 0 && r >= n)) {
    throw Error(ErrorCode::kUnsupportedParameters,
                "need 0 <= r < n; got n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
  }
  if ((static_cast<long long>(n) * r) % 2 != 0) {
    throw Error(ErrorCode::kParityViolation,
                "n*r must be even; got n=" + std::to_string(n) +
                    " r=" + std::to_string(r));
  }
  constexpr int kDrawsPerStep = 64;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> adj(n);
  auto adjacent = [&](Vertex x, Vertex y) {
    return std::find(adj[x].begin(), adj[x].end(), y) != adj[x].end();
  };

  for (int attempt = 0; attempt < kPairingRetryLimit; ++attempt) {
    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<size_t>(n) * r);
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), r, v);
    for (auto& list : adj) list.clear();
    std::vector<Edge> edges;

    bool stuck = false;
    while (!stubs.empty()) {
      const std::uint64_t k = stubs.size();
      std::optional<std::pair<size_t, size_t>> pick;
      for (int t = 0; t < kDrawsPerStep && !pick; ++t) {
        const size_t i = UniformBelow(rng, k);
        const size_t j = UniformBelow(rng, k);
        if (i != j && stubs[i] != stubs[j] && !adjacent(stubs[i], stubs[j])) {
          pick = {i, j};
        }
      }
      if (!pick) {
        // Random draws keep failing: fall back to the explicit list of
        // suitable stub pairs, restarting if it is empty.
        std::vector<std::pair<size_t, size_t>> suitable;
        for (size_t i = 0; i < k; ++i) {
          for (size_t j = i + 1; j < k; ++j) {
            if (stubs[i] != stubs[j] && !adjacent(stubs[i], stubs[j])) {
              suitable.emplace_back(i, j);
            }
          }
        }
        if (suitable.empty()) {
          stuck = true;
          break;
        }
        pick = suitable[UniformBelow(rng, suitable.size())];
      }
      const Vertex x = stubs[pick->first];
      const Vertex y = stubs[pick->second];
      adj[x].push_back(y);
      adj[y].push_back(x);
      edges.push_back({x, y});
      // Remove the higher position first so the lower one stays valid.
      for (size_t pos : {std::max(pick->first, pick->second),
                         std::min(pick->first, pick->second)}) {
        stubs[pos] = stubs.back();
        stubs.pop_back();
      }
    }
    if (!stuck) return Graph::Build(n, edges);
  }
  throw Error(ErrorCode::kRetryLimitExceeded,
              "pairing model failed " + std::to_string(kPairingRetryLimit) +
                  " times for n=" + std::to_string(n) +
                  " r=" + std::to_string(r));
}

}  // namespace magiclab
