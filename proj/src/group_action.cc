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

#include "symbreak/group_action.h"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace symbreak {

namespace {
void CheckDegree(const Permutation& p, int degree) {
  if (p.degree() != degree) throw std::invalid_argument("permutation/target degree mismatch");
}

int Find(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}
}  // namespace

Coloring act(const Permutation& p, const Coloring& c) {
  CheckDegree(p, c.degree());
  std::vector<int> colors(c.degree());
  for (int v = 0; v < c.degree(); ++v) colors[p[v]] = c[v];
  return Coloring(std::move(colors), c.palette());
}

SetPartition act(const Permutation& p, const SetPartition& partition) {
  CheckDegree(p, partition.degree());
  std::vector<int> labels(partition.degree());
  for (int v = 0; v < partition.degree(); ++v) labels[p[v]] = partition.cell_of(v);
  return SetPartition::FromLabels(labels);
}

bool preserves(const Permutation& p, const Coloring& c) {
  CheckDegree(p, c.degree());
  for (int v = 0; v < c.degree(); ++v) {
    if (c[p[v]] != c[v]) return false;
  }
  return true;
}

SetPartition orbits_under(std::span<const Permutation> elements, int degree) {
  std::vector<int> parent(degree);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& p : elements) {
    CheckDegree(p, degree);
    for (int v = 0; v < degree; ++v) parent[Find(parent, v)] = Find(parent, p[v]);
  }
  std::vector<int> labels(degree);
  for (int v = 0; v < degree; ++v) labels[v] = Find(parent, v);
  return SetPartition::FromLabels(labels);
}

}  // namespace symbreak
