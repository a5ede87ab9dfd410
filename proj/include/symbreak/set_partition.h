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

#ifndef SYMBREAK_SET_PARTITION_H_
#define SYMBREAK_SET_PARTITION_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace symbreak {

// An unordered family of disjoint nonempty cells covering {0..n-1}.
//
// Stored canonically: each cell sorted, cells ordered by least element. The
// equivalent restricted growth string labels each vertex with the index of
// its cell, so label[0] == 0 and each new label is one more than the largest
// label seen so far. Ordering is lexicographic on that string.
class SetPartition {
 public:
  SetPartition() = default;
  // Throws std::invalid_argument unless `cells` partition {0..n-1}.
  SetPartition(int n, std::vector<std::vector<int>> cells);

  // Any block labelling, e.g. a coloring; equal labels share a cell.
  static SetPartition FromLabels(std::span<const int> labels);

  int degree() const { return static_cast<int>(labels_.size()); }
  int num_cells() const { return static_cast<int>(cells_.size()); }
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  const std::vector<int>& restricted_growth_string() const { return labels_; }
  int cell_of(int v) const { return labels_[v]; }

  std::string ToString() const;

  bool operator==(const SetPartition& other) const { return labels_ == other.labels_; }
  std::strong_ordering operator<=>(const SetPartition& other) const {
    return labels_ <=> other.labels_;
  }

 private:
  std::vector<int> labels_;
  std::vector<std::vector<int>> cells_;
};

// Relabels `labels` in place into restricted growth form. `scratch` must
// have room for max(label) + 1 entries.
void CanonicalizeLabels(std::span<int> labels, std::span<int> scratch);

}  // namespace symbreak

#endif  // SYMBREAK_SET_PARTITION_H_
