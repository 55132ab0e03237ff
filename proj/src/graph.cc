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

#include <algorithm>
#include <string>

#include "magiclab/error.h"

namespace magiclab {

Graph Graph::Build(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Build(n, edges);
}

Graph Graph::Build(int n, std::span<const Edge> input) {
  if (n < 0) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "negative vertex count " + std::to_string(n));
  }
  std::vector<Edge> edges;
  edges.reserve(input.size());
  for (const Edge& e : input) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kLoopEdge,
                  "loop at vertex " + std::to_string(e.u));
    }
    edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    throw Error(ErrorCode::kDuplicateEdge,
                "parallel edge (" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + ")");
  }
  return Graph(n, std::move(edges));
}

EdgeIndex Graph::FindEdge(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::vector<std::vector<EdgeIndex>> Graph::IncidentEdges() const {
  std::vector<std::vector<EdgeIndex>> incident(n_);
  for (EdgeIndex e = 0; e < num_edges(); ++e) {
    incident[edges_[e].u].push_back(e);
    incident[edges_[e].v].push_back(e);
  }
  return incident;
}

std::vector<std::vector<Vertex>> Graph::AdjacencyLists() const {
  std::vector<std::vector<Vertex>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<int> Degrees(const Graph& g) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool IsRegular(const Graph& g, int r) {
  const auto deg = Degrees(g);
  return std::all_of(deg.begin(), deg.end(), [r](int d) { return d == r; });
}

bool IsConnected(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  const auto adj = g.AdjacencyLists();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<EdgeIndex> Bridges(const Graph& g) {
  // Iterative lowlink DFS. An edge (parent, child) in the DFS tree is a bridge
  // iff low[child] > disc[parent]; the parent edge is skipped by index, not by
  // endpoint, which would matter for multigraphs.
  const int n = g.num_vertices();
  const auto incident = g.IncidentEdges();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeIndex> bridges;

  struct Frame {
    Vertex v;
    EdgeIndex via;
    size_t next;
  };
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> stack = {{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < incident[f.v].size()) {
        const EdgeIndex e = incident[f.v][f.next++];
        if (e == f.via) continue;
        const Edge& ed = g.edge(e);
        const Vertex w = ed.u == f.v ? ed.v : ed.u;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, e, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const Vertex parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) bridges.push_back(done.via);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool IsTwoEdgeConnected(const Graph& g) {
  return g.num_vertices() >= 2 && IsConnected(g) && Bridges(g).empty();
}

}  // namespace magiclab
