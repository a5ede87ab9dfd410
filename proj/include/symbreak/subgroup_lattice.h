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

#ifndef SYMBREAK_SUBGROUP_LATTICE_H_
#define SYMBREAK_SUBGROUP_LATTICE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symbreak/permutation_group.h"

namespace symbreak {

struct LatticeLimits {
  std::size_t max_group_order = 2000;
  std::size_t max_subgroups = 200'000;
};

// Every subgroup of a finite permutation group, ordered by (order, element
// bitset) so index 0 is the trivial subgroup and the last index is the whole
// group. Subgroups are stored as sets of indices into group.elements().
class SubgroupLattice {
 public:
  // Throws SizeBoundExceeded when |group| or the subgroup count exceeds the
  // limits.
  static SubgroupLattice Compute(const PermutationGroup& group, const LatticeLimits& limits = {});

  std::size_t size() const { return bits_.size(); }
  std::size_t trivial() const { return 0; }
  std::size_t whole() const { return bits_.size() - 1; }

  std::size_t order_of(std::size_t h) const { return members_[h].size(); }
  // Sorted indices into the parent group's element list.
  const std::vector<std::uint32_t>& members(std::size_t h) const { return members_[h]; }
  std::vector<Permutation> elements(std::size_t h) const;
  // Number of orbits of subgroup h on the points {0..degree-1}.
  int orbit_count(std::size_t h) const { return orbit_counts_[h]; }

  bool is_subgroup(std::size_t h, std::size_t k) const;
  // Strict supergroups of h, in lattice order.
  const std::vector<std::uint32_t>& strict_supergroups(std::size_t h) const { return up_[h]; }

  // mu(h, k) for every k; zero where h is not below k.
  std::vector<std::int64_t> moebius_row(std::size_t h) const;
  std::int64_t moebius(std::size_t h, std::size_t k) const { return moebius_row(h)[k]; }

  // The subgroup with exactly this element set, if it is one.
  std::optional<std::size_t> find(std::span<const std::uint32_t> sorted_members) const;

  const PermutationGroup& group() const { return group_; }

 private:
  using Bits = std::vector<std::uint64_t>;

  PermutationGroup group_;
  std::vector<Bits> bits_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<int> orbit_counts_;
  std::vector<std::vector<std::uint32_t>> up_;
};

SubgroupLattice subgroup_lattice(const PermutationGroup& group, const LatticeLimits& limits = {});

}  // namespace symbreak

#endif  // SYMBREAK_SUBGROUP_LATTICE_H_
