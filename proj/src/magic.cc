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

#include "magiclab/magic.h"

#include <algorithm>
#include <future>
#include <string>

#include "magiclab/error.h"
#include "magiclab/matching.h"

namespace magiclab {
namespace {

void CheckModulus(int h) {
  if (h < 2) {
    throw Error(ErrorCode::kPreconditionViolated,
                "modulus must be >= 2, got " + std::to_string(h));
  }
}

int Mod(long long x, int h) {
  const long long r = x % h;
  return static_cast<int>(r < 0 ? r + h : r);
}

Labeling LabelFactor(const Graph& g, const Matching& factor, int h) {
  Labeling labeling{h, std::vector<int>(g.num_edges(), 1)};
  for (EdgeIndex e : factor.edge_indices) labeling.labels[e] = 2;
  return labeling;
}

class ZeroSumSearch {
 public:
  ZeroSumSearch(const Graph& g, int h, std::int64_t budget)
      : g_(g),
        h_(h),
        budget_(budget),
        order_(EliminationOrder(g)),
        closers_(order_.size()),
        partial_(g.num_vertices(), 0),
        labels_(g.num_edges(), 0) {
    std::vector<int> remaining = Degrees(g);
    for (size_t k = 0; k < order_.size(); ++k) {
      const Edge& e = g.edge(order_[k]);
      for (Vertex v : {e.u, e.v}) {
        if (--remaining[v] == 0) closers_[k].push_back(v);
      }
    }
  }

  NullSetEntry Run() {
    NullSetEntry entry;
    entry.h = h_;
    const bool found = Search(0);
    entry.nodes = nodes_;
    if (exhausted_) {
      entry.verdict = Membership::kUndecided;
    } else if (found) {
      entry.verdict = Membership::kMember;
      entry.witness = Labeling{h_, labels_};
    } else {
      entry.verdict = Membership::kNonMember;
    }
    return entry;
  }

 private:
  bool Assign(size_t k, int label) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    const Edge& e = g_.edge(order_[k]);
    labels_[order_[k]] = label;
    partial_[e.u] = (partial_[e.u] + label) % h_;
    partial_[e.v] = (partial_[e.v] + label) % h_;
    const bool found = Search(k + 1);
    partial_[e.u] = Mod(partial_[e.u] - label, h_);
    partial_[e.v] = Mod(partial_[e.v] - label, h_);
    if (!found) labels_[order_[k]] = 0;
    return found;
  }

  bool Search(size_t k) {
    if (k == order_.size()) return true;
    const auto& closing = closers_[k];
    if (!closing.empty()) {
      const int forced = Mod(-partial_[closing[0]], h_);
      if (forced == 0) return false;
      if (closing.size() == 2 && Mod(-partial_[closing[1]], h_) != forced) {
        return false;
      }
      return Assign(k, forced);
    }
    for (int label = 1; label < h_; ++label) {
      if (Assign(k, label)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  int h_;
  std::int64_t budget_;
  std::vector<EdgeIndex> order_;
  std::vector<std::vector<Vertex>> closers_;
  std::vector<int> partial_;
  std::vector<int> labels_;
  std::int64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

std::vector<int> VertexSums(const Graph& g, const Labeling& labeling) {
  CheckModulus(labeling.h);
  if (static_cast<int>(labeling.labels.size()) != g.num_edges()) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(labeling.labels.size()) + " labels for " +
                    std::to_string(g.num_edges()) + " edges");
  }
  std::vector<long long> raw(g.num_vertices(), 0);
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const int label = Mod(labeling.labels[e], labeling.h);
    raw[g.edge(e).u] += label;
    raw[g.edge(e).v] += label;
  }
  std::vector<int> sums(raw.size());
  for (size_t v = 0; v < raw.size(); ++v) sums[v] = Mod(raw[v], labeling.h);
  return sums;
}

bool IsZeroSum(const Graph& g, const Labeling& labeling) {
  const auto sums = VertexSums(g, labeling);
  const bool labels_ok =
      std::none_of(labeling.labels.begin(), labeling.labels.end(),
                   [&](int l) { return Mod(l, labeling.h) == 0; });
  return labels_ok &&
         std::all_of(sums.begin(), sums.end(), [](int s) { return s == 0; });
}

Labeling LabelFiveRegular(const Graph& g) {
  if (!IsRegular(g, 5)) {
    throw Error(ErrorCode::kNotFiveRegular, "graph is not 5-regular");
  }
  return LabelFactor(g, PerfectMatching(g), 3);
}

Labeling LabelOddRegularViaFactor(const Graph& g, int h) {
  auto fail = [](const std::string& clause) {
    throw Error(ErrorCode::kPreconditionViolated, clause);
  };
  if (g.num_vertices() == 0) fail("graph has no vertices");
  const int r = Degrees(g).front();
  if (!IsRegular(g, r)) fail("graph is not regular");
  if (r % 2 == 0) fail("degree " + std::to_string(r) + " is even");
  if (h < 3) fail("modulus " + std::to_string(h) + " < 3 makes label 2 zero");
  if ((r + 1) % h != 0) {
    fail("modulus " + std::to_string(h) + " does not divide r+1=" +
         std::to_string(r + 1));
  }
  return LabelFactor(g, PerfectMatching(g), h);
}

bool CheckH2Characterization(const Graph& g) {
  const auto deg = Degrees(g);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

std::vector<EdgeIndex> EliminationOrder(const Graph& g) {
  const int n = g.num_vertices();
  const auto incident = g.IncidentEdges();
  std::vector<int> remaining = Degrees(g);
  std::vector<char> decided(g.num_edges(), 0);
  std::vector<EdgeIndex> order;
  order.reserve(g.num_edges());
  while (static_cast<int>(order.size()) < g.num_edges()) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (remaining[v] > 0 && (pick < 0 || remaining[v] < remaining[pick])) {
        pick = v;
      }
    }
    for (EdgeIndex e : incident[pick]) {
      if (decided[e]) continue;
      decided[e] = 1;
      order.push_back(e);
      --remaining[g.edge(e).u];
      --remaining[g.edge(e).v];
    }
  }
  return order;
}

NullSetEntry DecideZeroSum(const Graph& g, int h, std::int64_t budget) {
  CheckModulus(h);
  return ZeroSumSearch(g, h, budget).Run();
}

NullSetReport NullSetOracle(const Graph& g, int h_min, int h_max,
                            std::int64_t budget, bool parallel) {
  if (h_min < 2 || h_min > h_max) {
    throw Error(ErrorCode::kPreconditionViolated,
                "need 2 <= hmin <= hmax, got " + std::to_string(h_min) +
                    ".." + std::to_string(h_max));
  }
  NullSetReport report{h_min, h_max, {}};
  if (!parallel) {
    for (int h = h_min; h <= h_max; ++h) {
      report.entries.push_back(DecideZeroSum(g, h, budget));
    }
    return report;
  }
  std::vector<std::future<NullSetEntry>> pending;
  for (int h = h_min; h <= h_max; ++h) {
    pending.push_back(std::async(std::launch::async, [&g, h, budget] {
      return DecideZeroSum(g, h, budget);
    }));
  }
  for (auto& f : pending) report.entries.push_back(f.get());
  return report;
}

}  // namespace magiclab
