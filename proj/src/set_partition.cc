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

#include "symbreak/set_partition.h"

#include <algorithm>
#include <stdexcept>

namespace symbreak {

void CanonicalizeLabels(std::span<int> labels, std::span<int> scratch) {
  std::fill(scratch.begin(), scratch.end(), -1);
  int next = 0;
  for (int& label : labels) {
    int& mapped = scratch[label];
    if (mapped < 0) mapped = next++;
    label = mapped;
  }
}

SetPartition::SetPartition(int n, std::vector<std::vector<int>> cells) {
  labels_.assign(n, -1);
  int cell_index = 0;
  for (const auto& cell : cells) {
    if (cell.empty()) throw std::invalid_argument("partition cells must be nonempty");
    for (int v : cell) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex out of range");
      if (labels_[v] >= 0) throw std::invalid_argument("partition cells overlap");
      labels_[v] = cell_index;
    }
    ++cell_index;
  }
  if (std::find(labels_.begin(), labels_.end(), -1) != labels_.end()) {
    throw std::invalid_argument("partition cells do not cover every vertex");
  }
  *this = FromLabels(labels_);
}

SetPartition SetPartition::FromLabels(std::span<const int> labels) {
  SetPartition p;
  p.labels_.assign(labels.begin(), labels.end());
  int max_label = -1;
  for (int label : p.labels_) {
    if (label < 0) throw std::invalid_argument("negative block label");
    max_label = std::max(max_label, label);
  }
  std::vector<int> scratch(max_label + 1);
  CanonicalizeLabels(p.labels_, scratch);
  for (int v = 0; v < p.degree(); ++v) {
    if (p.labels_[v] >= static_cast<int>(p.cells_.size())) p.cells_.emplace_back();
    p.cells_[p.labels_[v]].push_back(v);
  }
  return p;
}

std::string SetPartition::ToString() const {
  std::string out = "{";
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (c) out += '|';
    for (std::size_t i = 0; i < cells_[c].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cells_[c][i]);
    }
  }
  return out + "}";
}

}  // namespace symbreak
