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

#ifndef SYMBREAK_GROUP_ACTION_H_
#define SYMBREAK_GROUP_ACTION_H_

#include <span>

#include "symbreak/coloring.h"
#include "symbreak/permutation.h"
#include "symbreak/set_partition.h"

namespace symbreak {

// Left actions: act(p * q, x) == act(p, act(q, x)).
// For colorings the result r satisfies r(p(v)) = c(v); partitions are mapped
// cell by cell. Both throw std::invalid_argument on a degree mismatch.
Coloring act(const Permutation& p, const Coloring& c);
SetPartition act(const Permutation& p, const SetPartition& partition);

// act(p, c) == c, i.e. c is constant on every cycle of p.
bool preserves(const Permutation& p, const Coloring& c);

// Orbit partition of {0..degree-1} under the group generated by `elements`.
SetPartition orbits_under(std::span<const Permutation> elements, int degree);

}  // namespace symbreak

#endif  // SYMBREAK_GROUP_ACTION_H_
