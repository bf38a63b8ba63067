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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace matchkit {

// Bipartite graph on left vertices [0, left) and right vertices [0, right).
// Adjacency lists are kept sorted ascending; searches visit right vertices
// in canonical order.
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t left, std::size_t right);

  void add_edge(std::size_t u, std::size_t v);
  // Sorts and deduplicates adjacency lists. Called automatically by the
  // matching routines on their private copy.
  void finalize();

  std::size_t left() const { return adj_.size(); }
  std::size_t right() const { return right_; }
  const std::vector<std::uint32_t>& neighbors(std::size_t u) const {
    return adj_[u];
  }

 private:
  std::size_t right_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

inline constexpr std::uint32_t kUnmatched = 0xffffffffu;

// Hopcroft-Karp. Returns mate[u] for every left vertex (kUnmatched if free).
std::vector<std::uint32_t> maximum_matching(const BipartiteGraph& graph);

bool has_perfect_matching(const BipartiteGraph& graph);

// The perfect matching whose sequence mate[0], mate[1], ... is
// lexicographically least, or nullopt when no perfect matching exists.
std::optional<std::vector<std::uint32_t>> lex_least_perfect_matching(
    const BipartiteGraph& graph);

}  // namespace matchkit
