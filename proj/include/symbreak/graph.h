// Copyright 2026 The symbreak Authors
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

#ifndef SYMBREAK_GRAPH_H_
#define SYMBREAK_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symbreak {

using Edge = std::pair<int, int>;

// A finite simple undirected graph on the dense vertex set {0, ..., n-1}.
//
// Graphs are immutable once constructed. The optional label records the
// family the graph was built from (e.g. "path:6") and does not take part in
// equality.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  // Duplicate edges (in either orientation) are merged.
  Graph(int order, std::span<const Edge> edges, std::string label = {});

  int order() const { return order_; }
  std::size_t size() const { return num_edges_; }

  bool adjacent(int u, int v) const {
    return adjacency_[static_cast<std::size_t>(u) * order_ + v] != 0;
  }
  // Sorted ascending.
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  int degree(int v) const { return static_cast<int>(neighbors_[v].size()); }

  // Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && adjacency_ == other.adjacency_;
  }

 private:
  int order_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<char> adjacency_;
  std::vector<std::vector<int>> neighbors_;
  std::string label_;
};

// Returns a pair u < v of distinct vertices with N(u) \ {v} == N(v) \ {u},
// or nullopt when no such pair exists. Such pairs are exactly what prevents
// every (n-1)-coloring from being distinguishing.
std::optional<std::pair<int, int>> twin_obstruction(const Graph& g);

// The empty graph on zero vertices counts as connected.
bool is_connected(const Graph& g);

}  // namespace symbreak

#endif  // SYMBREAK_GRAPH_H_
