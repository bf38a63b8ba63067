// Copyright 2026 The Authors.
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

#include "matchkit/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "matchkit/error.hpp"

namespace matchkit {

BipartiteGraph::BipartiteGraph(std::size_t left, std::size_t right)
    : right_(right), adj_(left) {}

void BipartiteGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= right_) {
    fail(ErrorKind::InvalidInput, "bipartite edge out of range");
  }
  adj_[u].push_back(static_cast<std::uint32_t>(v));
}

void BipartiteGraph::finalize() {
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g)
      : g_(g),
        mate_left_(g.left(), kUnmatched),
        mate_right_(g.right(), kUnmatched),
        dist_(g.left()) {}

  std::vector<std::uint32_t> run() {
    while (bfs()) {
      for (std::size_t u = 0; u < g_.left(); ++u) {
        if (mate_left_[u] == kUnmatched) dfs(static_cast<std::uint32_t>(u));
      }
    }
    return mate_left_;
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  bool bfs() {
    std::queue<std::uint32_t> queue;
    for (std::size_t u = 0; u < g_.left(); ++u) {
      if (mate_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push(static_cast<std::uint32_t>(u));
      } else {
        dist_[u] = kInf;
      }
    }
    bool reachable_free = false;
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop();
      for (std::uint32_t v : g_.neighbors(u)) {
        const std::uint32_t w = mate_right_[v];
        if (w == kUnmatched) {
          reachable_free = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(std::uint32_t u) {
    for (std::uint32_t v : g_.neighbors(u)) {
      const std::uint32_t w = mate_right_[v];
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        mate_left_[u] = v;
        mate_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<std::uint32_t> mate_left_;
  std::vector<std::uint32_t> mate_right_;
  std::vector<std::uint32_t> dist_;
};

BipartiteGraph normalized(const BipartiteGraph& graph) {
  BipartiteGraph copy = graph;
  copy.finalize();
  return copy;
}

}  // namespace

std::vector<std::uint32_t> maximum_matching(const BipartiteGraph& graph) {
  const BipartiteGraph g = normalized(graph);
  return HopcroftKarp(g).run();
}

bool has_perfect_matching(const BipartiteGraph& graph) {
  if (graph.left() != graph.right()) return false;
  const auto mate = maximum_matching(graph);
  return std::none_of(mate.begin(), mate.end(),
                      [](std::uint32_t v) { return v == kUnmatched; });
}

std::optional<std::vector<std::uint32_t>> lex_least_perfect_matching(
    const BipartiteGraph& graph) {
  if (graph.left() != graph.right()) return std::nullopt;
  const BipartiteGraph g = normalized(graph);
  std::vector<std::uint32_t> mate_left = HopcroftKarp(g).run();
  const std::size_t n = g.left();
  for (std::uint32_t v : mate_left) {
    if (v == kUnmatched) return std::nullopt;
  }
  std::vector<std::uint32_t> mate_right(n, kUnmatched);
  for (std::size_t u = 0; u < n; ++u) {
    mate_right[mate_left[u]] = static_cast<std::uint32_t>(u);
  }

  // Left vertices are fixed in order. For vertex i we try its neighbors in
  // ascending order; moving i onto a smaller partner b requires an
  // alternating path from mate_right[b] back to i's current partner that
  // avoids every fixed vertex, i.e. an alternating cycle through (i, b).
  std::vector<char> fixed_left(n, 0), fixed_right(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<std::uint32_t> parent_right(n, kUnmatched);

  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t current = mate_left[i];
    for (std::uint32_t b : g.neighbors(i)) {
      if (fixed_right[b]) continue;
      if (b == current) break;
      const std::uint32_t start = mate_right[b];
      std::fill(seen.begin(), seen.end(), 0);
      // Iterative DFS over left vertices; parent_right[v] records the left
      // vertex from which right vertex v was reached.
      std::vector<std::pair<std::uint32_t, std::size_t>> stack;
      stack.emplace_back(start, 0);
      bool found = false;
      while (!stack.empty() && !found) {
        auto& [u, pos] = stack.back();
        const auto& nbrs = g.neighbors(u);
        if (pos == nbrs.size()) {
          stack.pop_back();
          continue;
        }
        const std::uint32_t v = nbrs[pos++];
        if (fixed_right[v] || v == b || v == mate_left[u] || seen[v]) continue;
        seen[v] = 1;
        parent_right[v] = u;
        if (v == current) {
          found = true;
          break;
        }
        const std::uint32_t w = mate_right[v];
        if (w == i || fixed_left[w]) continue;
        stack.emplace_back(w, 0);
      }
      if (!found) continue;
      // Flip the path: walk back from `current` to `start`.
      std::uint32_t v = current;
      while (true) {
        const std::uint32_t u = parent_right[v];
        const std::uint32_t previous = mate_left[u];
        mate_left[u] = v;
        mate_right[v] = u;
        if (u == start) break;
        v = previous;
      }
      mate_left[i] = b;
      mate_right[b] = static_cast<std::uint32_t>(i);
      break;
    }
    fixed_left[i] = 1;
    fixed_right[mate_left[i]] = 1;
  }
  return mate_left;
}

}  // namespace matchkit
