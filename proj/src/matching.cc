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

#include "magiclab/matching.h"

#include <algorithm>
#include <deque>
#include <string>

#include "magiclab/error.h"

namespace magiclab {
namespace {

constexpr Vertex kNone = -1;

// Working state for one MaxMatching call.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : n_(g.num_vertices()),
        adj_(g.AdjacencyLists()),
        mate_(n_, kNone),
        parent_(n_),
        base_(n_),
        in_tree_(n_),
        in_blossom_(n_) {}

  std::vector<Vertex> Run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != kNone) continue;
      Augment(FindAugmentingPath(root));
    }
    return mate_;
  }

 private:
  Vertex LowestCommonAncestor(Vertex a, Vertex b) {
    std::vector<char> on_path(n_, 0);
    while (true) {
      a = base_[a];
      on_path[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(Vertex v, Vertex blossom_base, Vertex child) {
    while (base_[v] != blossom_base) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  // Returns the exposed endpoint of an augmenting path from root, or kNone.
  Vertex FindAugmentingPath(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    in_tree_[root] = 1;
    std::deque<Vertex> queue = {root};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          // Odd cycle: contract the blossom onto its base.
          const Vertex cur = LowestCommonAncestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!in_tree_[i]) {
                in_tree_[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          in_tree_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  void Augment(Vertex v) {
    while (v != kNone) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> in_tree_;
  std::vector<char> in_blossom_;
};

MatchingReport MakeReport(const Graph& g, std::vector<EdgeIndex> chosen) {
  std::sort(chosen.begin(), chosen.end());
  MatchingReport report;
  report.is_perfect = 2 * static_cast<int>(chosen.size()) == g.num_vertices();
  report.matching.edge_indices = std::move(chosen);
  return report;
}

void BruteForce(const Graph& g, EdgeIndex next, std::vector<char>& covered,
                std::vector<EdgeIndex>& current,
                std::vector<EdgeIndex>& best) {
  const int m = g.num_edges();
  const int free_vertices = static_cast<int>(
      std::count(covered.begin(), covered.end(), 0));
  const int bound = static_cast<int>(current.size()) +
                    std::min(m - next, free_vertices / 2);
  if (bound <= static_cast<int>(best.size())) return;
  if (next == m) {
    best = current;
    return;
  }
  const Edge& e = g.edge(next);
  if (!covered[e.u] && !covered[e.v]) {
    covered[e.u] = covered[e.v] = 1;
    current.push_back(next);
    BruteForce(g, next + 1, covered, current, best);
    current.pop_back();
    covered[e.u] = covered[e.v] = 0;
  }
  BruteForce(g, next + 1, covered, current, best);
}

}  // namespace

bool IsMatching(const Graph& g, const Matching& m) {
  std::vector<char> covered(g.num_vertices(), 0);
  for (EdgeIndex e : m.edge_indices) {
    if (e < 0 || e >= g.num_edges()) return false;
    const Edge& ed = g.edge(e);
    if (covered[ed.u] || covered[ed.v]) return false;
    covered[ed.u] = covered[ed.v] = 1;
  }
  return true;
}

MatchingReport MaxMatching(const Graph& g) {
  const std::vector<Vertex> mate = Blossom(g).Run();
  std::vector<EdgeIndex> chosen;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] != kNone && v < mate[v]) chosen.push_back(g.FindEdge(v, mate[v]));
  }
  return MakeReport(g, std::move(chosen));
}

Matching PerfectMatching(const Graph& g) {
  MatchingReport report = MaxMatching(g);
  if (!report.is_perfect) {
    throw Error(ErrorCode::kNoPerfectMatching,
                "maximum matching has " +
                    std::to_string(report.matching.size()) + " edges for " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
  return std::move(report.matching);
}

MatchingReport BruteForceMaxMatching(const Graph& g) {
  if (g.num_edges() > kBruteForceEdgeCap) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(g.num_edges()) + " edges exceeds cap of " +
                    std::to_string(kBruteForceEdgeCap));
  }
  std::vector<char> covered(g.num_vertices(), 0);
  std::vector<EdgeIndex> current, best;
  BruteForce(g, 0, covered, current, best);
  return MakeReport(g, std::move(best));
}

}  // namespace magiclab
