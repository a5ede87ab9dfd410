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

#ifndef SYMBREAK_PERMUTATION_GROUP_H_
#define SYMBREAK_PERMUTATION_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symbreak/bigint.h"
#include "symbreak/graph.h"
#include "symbreak/permutation.h"

namespace symbreak {

// A permutation group with its complete element list materialized.
// Elements are sorted lexicographically by image sequence, so elements()[0]
// is always the identity.
class PermutationGroup {
 public:
  PermutationGroup() = default;

  static PermutationGroup Trivial(int degree);
  // Closure of `generators` under composition.
  static PermutationGroup Generate(int degree, std::span<const Permutation> generators);
  // `elements` must already form a group; it is sorted and deduplicated.
  // Throws std::invalid_argument if the identity is missing or a product
  // falls outside the set (checked on the generators only).
  static PermutationGroup FromElements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() <= 1; }

  const std::vector<Permutation>& elements() const { return elements_; }
  // A generating set drawn from elements(), chosen greedily in element order.
  const std::vector<Permutation>& generators() const { return generators_; }

  std::optional<std::size_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

 private:
  void ChooseGenerators();

  int degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

struct SearchLimits {
  // Largest vertex count the backtracking search accepts.
  int max_vertices = 64;
  // Largest group that may be materialized element by element.
  std::size_t max_elements = 2'000'000;
};

// Full automorphism group of g by backtracking over vertex images, pruned by
// color refinement and adjacency consistency with the partial map.
// Throws SizeBoundExceeded when a limit is hit.
PermutationGroup automorphism_group(const Graph& g, const SearchLimits& limits = {});

// |Aut(g)| without materializing the group, via a stabilizer chain whose
// orbits are found by existence searches.
BigInt automorphism_group_order(const Graph& g, const SearchLimits& limits = {});

// Calls `visit` with the image sequence of every isomorphism a -> b until it
// returns false. Returns the number of isomorphisms visited.
std::uint64_t for_each_isomorphism(const Graph& a, const Graph& b,
                                   const std::function<bool(const std::vector<int>&)>& visit,
                                   const SearchLimits& limits = {});

std::uint64_t count_isomorphisms(const Graph& a, const Graph& b,
                                 const SearchLimits& limits = {});

bool are_isomorphic(const Graph& a, const Graph& b, const SearchLimits& limits = {});

}  // namespace symbreak

#endif  // SYMBREAK_PERMUTATION_GROUP_H_
