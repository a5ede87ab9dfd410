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

#include "symbreak/graph.h"

#include <algorithm>
#include <stdexcept>

namespace symbreak {

Graph::Graph(int order, std::span<const Edge> edges, std::string label)
    : order_(order), label_(std::move(label)) {
  if (order < 0) throw std::invalid_argument("negative vertex count");
  const auto n = static_cast<std::size_t>(order);
  adjacency_.assign(n * n, 0);
  neighbors_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    char& cell = adjacency_[static_cast<std::size_t>(u) * n + v];
    if (cell) continue;
    cell = 1;
    adjacency_[static_cast<std::size_t>(v) * n + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++num_edges_;
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < order_; ++u) {
    for (int v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_label(std::string label) const {
  Graph copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

std::optional<std::pair<int, int>> twin_obstruction(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.degree(u) - (g.adjacent(u, v) ? 1 : 0) !=
          g.degree(v) - (g.adjacent(u, v) ? 1 : 0)) {
        continue;
      }
      bool twins = true;
      for (int w = 0; w < n && twins; ++w) {
        if (w == u || w == v) continue;
        twins = g.adjacent(u, w) == g.adjacent(v, w);
      }
      if (twins) return std::make_pair(u, v);
    }
  }
  return std::nullopt;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

}  // namespace symbreak
