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

#ifndef MAGICLAB_GRAPH_H_
#define MAGICLAB_GRAPH_H_

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace magiclab {

using Vertex = int;
using EdgeIndex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A simple undirected graph on vertices 0..n-1. The edge list is kept in
// canonical form (u < v, sorted lexicographically), so edge indices are stable
// and two equal graphs have identical representations. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Normalizes every pair to u < v and sorts. Throws Error with kLoopEdge,
  // kDuplicateEdge or kVertexOutOfRange.
  static Graph Build(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph Build(int n, std::span<const Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }

  // Index of edge {u, v}, or -1 when absent.
  EdgeIndex FindEdge(Vertex u, Vertex v) const;
  bool HasEdge(Vertex u, Vertex v) const { return FindEdge(u, v) >= 0; }

  // Incident edge indices per vertex, ascending. Ascending edge index at a
  // vertex coincides with ascending neighbour index.
  std::vector<std::vector<EdgeIndex>> IncidentEdges() const;
  std::vector<std::vector<Vertex>> AdjacencyLists() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {}

  int n_ = 0;
  std::vector<Edge> edges_;
};

// deg[v] for every vertex; the entries sum to twice the edge count.
std::vector<int> Degrees(const Graph& g);

// True iff every vertex has degree exactly r. The edgeless graph is 0-regular.
bool IsRegular(const Graph& g, int r);

bool IsConnected(const Graph& g);

// Connected, at least two vertices, and no bridge.
bool IsTwoEdgeConnected(const Graph& g);

// Bridges as edge indices, ascending.
std::vector<EdgeIndex> Bridges(const Graph& g);

}  // namespace magiclab

#endif  // MAGICLAB_GRAPH_H_
