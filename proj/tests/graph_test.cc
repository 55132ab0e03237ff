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

#include "magiclab/graph.h"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "magiclab/error.h"
#include "magiclab/random.h"
#include "test_graphs.h"

namespace magiclab {
namespace {

using testing::Complete;
using testing::Cycle;
using testing::Path;

ErrorCode BuildError(int n, std::vector<std::pair<int, int>> pairs) {
  try {
    Graph::Build(n, pairs);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kMalformedInput;
}

bool Canonical(const Graph& g) {
  const auto edges = g.edges();
  for (const Edge& e : edges) {
    if (!(0 <= e.u && e.u < e.v && e.v < g.num_vertices())) return false;
  }
  return std::adjacent_find(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) {
                              return !(a < b);
                            }) == edges.end();
}

TEST_CASE("build_graph normalizes and validates") {
  const std::vector<std::pair<int, int>> k2 = {{0, 1}};
  const Graph g = Graph::Build(2, k2);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);

  const std::vector<std::pair<int, int>> shuffled = {{3, 2}, {1, 0}, {2, 0}};
  const Graph h = Graph::Build(4, shuffled);
  CHECK(h.edge(0) == Edge{0, 1});
  CHECK(h.edge(1) == Edge{0, 2});
  CHECK(h.edge(2) == Edge{2, 3});

  CHECK(BuildError(4, {{1, 0}, {2, 3}, {0, 1}}) == ErrorCode::kDuplicateEdge);
  CHECK(BuildError(3, {{1, 1}}) == ErrorCode::kLoopEdge);
  CHECK(BuildError(3, {{0, 3}}) == ErrorCode::kVertexOutOfRange);
  CHECK(BuildError(3, {{-1, 2}}) == ErrorCode::kVertexOutOfRange);
}

TEST_CASE("K6 from all 15 pairs") {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < 6; ++u) {
    for (int v = u + 1; v < 6; ++v) pairs.emplace_back(v, u);
  }
  const Graph g = Graph::Build(6, pairs);
  CHECK(g.num_edges() == 15);
  CHECK(g == Complete(6));
  CHECK(Degrees(g) == std::vector<int>(6, 5));
  CHECK(IsRegular(g, 5));
  CHECK_FALSE(IsRegular(g, 4));
}

TEST_CASE("degrees") {
  CHECK(Degrees(testing::Edgeless(3)) == std::vector<int>{0, 0, 0});
  CHECK(Degrees(Path(3)) == std::vector<int>{1, 2, 1});
  CHECK(IsRegular(Cycle(4), 2));
  CHECK(IsRegular(testing::Edgeless(5), 0));
}

TEST_CASE("FindEdge") {
  const Graph g = Cycle(5);
  CHECK(g.FindEdge(4, 0) == g.FindEdge(0, 4));
  CHECK(g.FindEdge(4, 0) >= 0);
  CHECK(g.FindEdge(0, 2) == -1);
}

TEST_CASE("two-edge connectivity") {
  CHECK(IsTwoEdgeConnected(Cycle(4)));
  CHECK_FALSE(IsTwoEdgeConnected(Path(3)));
  CHECK(IsTwoEdgeConnected(testing::Petersen()));
  CHECK(testing::TwoEdgeConnectedByDeletion(testing::Petersen()));
  CHECK_FALSE(IsTwoEdgeConnected(testing::Edgeless(1)));
  CHECK_FALSE(IsTwoEdgeConnected(Complete(1)));
  CHECK(IsTwoEdgeConnected(Complete(3)));
  CHECK(Bridges(Path(4)) == std::vector<EdgeIndex>{0, 1, 2});

  // Two triangles joined by one edge: exactly that edge is a bridge.
  const std::vector<std::pair<int, int>> barbell = {
      {0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}};
  const Graph b = Graph::Build(6, barbell);
  CHECK(Bridges(b) == std::vector<EdgeIndex>{b.FindEdge(2, 3)});
  CHECK_FALSE(IsTwoEdgeConnected(b));

  // Disconnected union of two cycles has no bridge but is not connected.
  const std::vector<std::pair<int, int>> two_triangles = {
      {0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_FALSE(IsTwoEdgeConnected(Graph::Build(6, two_triangles)));
}

TEST_CASE("bridge finder agrees with edge deletion on the corpus") {
  for (const auto& [name, g] : testing::Corpus()) {
    CAPTURE(name);
    CHECK(IsTwoEdgeConnected(g) == testing::TwoEdgeConnectedByDeletion(g));
  }
}

TEST_CASE("property: random inputs build canonical graphs with handshake") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(UniformBelow(rng, 12));
    std::vector<std::pair<int, int>> pairs;
    const int tries = static_cast<int>(UniformBelow(rng, 40));
    for (int t = 0; t < tries; ++t) {
      int u = static_cast<int>(UniformBelow(rng, n));
      int v = static_cast<int>(UniformBelow(rng, n));
      if (u == v) continue;
      if (std::find(pairs.begin(), pairs.end(), std::pair{u, v}) != pairs.end() ||
          std::find(pairs.begin(), pairs.end(), std::pair{v, u}) != pairs.end()) {
        continue;
      }
      pairs.emplace_back(u, v);
    }
    const Graph g = Graph::Build(n, pairs);
    CHECK(Canonical(g));
    const auto deg = Degrees(g);
    CHECK(std::accumulate(deg.begin(), deg.end(), 0) == 2 * g.num_edges());
    std::reverse(pairs.begin(), pairs.end());
    CHECK(Graph::Build(n, pairs) == g);
  }
}

TEST_CASE("every corpus graph is canonical; no odd-order 5-regular graph") {
  for (const auto& [name, g] : testing::Corpus()) {
    CAPTURE(name);
    CHECK(Canonical(g));
    if (IsRegular(g, 5)) CHECK(g.num_vertices() % 2 == 0);
  }
}

}  // namespace
}  // namespace magiclab
