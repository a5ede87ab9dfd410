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

#include "symbreak/join.h"

#include <stdexcept>

namespace symbreak {

std::vector<int> FiberOffsets(std::span<const Graph> fibers) {
  std::vector<int> offsets{0};
  for (const auto& fiber : fibers) offsets.push_back(offsets.back() + fiber.order());
  return offsets;
}

Graph x_join(const Graph& x, std::span<const Graph> fibers) {
  if (static_cast<int>(fibers.size()) != x.order()) {
    throw std::invalid_argument("x_join needs exactly one fiber per vertex of X");
  }
  for (const auto& fiber : fibers) {
    if (fiber.order() == 0) throw std::invalid_argument("x_join fibers must be nonempty");
  }
  const auto offsets = FiberOffsets(fibers);
  std::vector<Edge> edges;
  for (int u = 0; u < x.order(); ++u) {
    for (const auto& [i, j] : fibers[u].edges()) {
      edges.emplace_back(offsets[u] + i, offsets[u] + j);
    }
    for (int w : x.neighbors(u)) {
      if (w <= u) continue;
      for (int i = offsets[u]; i < offsets[u + 1]; ++i) {
        for (int j = offsets[w]; j < offsets[w + 1]; ++j) edges.emplace_back(i, j);
      }
    }
  }
  return Graph(offsets.back(), edges);
}

Graph lexicographic_product(const Graph& x, const Graph& y) {
  if (y.order() == 0) return Graph();
  std::vector<Graph> fibers(x.order(), y);
  return x_join(x, fibers);
}

}  // namespace symbreak
