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

#ifndef SYMBREAK_FAMILY_H_
#define SYMBREAK_FAMILY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/graph.h"

namespace symbreak {

enum class FamilyKind { kPath, kCycle, kComplete, kBiclique, kEmpty, kKneser };

std::string_view FamilyName(FamilyKind kind);

// A named graph family with its integer parameters, written `kind:p1[,p2]`:
//   path:n (n >= 1), cycle:n (n >= 3), complete:n, empty:n (n >= 0),
//   biclique:m,n (m, n >= 0), kneser:n,k (0 <= k <= n/2).
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<int> params;

  // Throws ParseError when the arity or parameter ranges are wrong.
  void Validate() const;
  std::string ToString() const;

  bool operator==(const FamilySpec&) const = default;
};

// Throws ParseError on unknown kinds, bad integers, or invalid parameters.
FamilySpec ParseFamilySpec(std::string_view text);

// Returns nullopt instead of throwing.
std::optional<FamilySpec> TryParseFamilySpec(std::string_view text);

// Builds the canonical member of the family, labelled with spec.ToString().
// Path and cycle vertices follow the walk order; biclique parts are
// {0..m-1} and {m..m+n-1}; Kneser vertices are the k-subsets of {0..n-1} in
// colexicographic order.
Graph make_family(const FamilySpec& spec);

// The k-subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<int>> ColexSubsets(int n, int k);

}  // namespace symbreak

#endif  // SYMBREAK_FAMILY_H_
