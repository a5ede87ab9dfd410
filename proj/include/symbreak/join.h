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

#ifndef SYMBREAK_JOIN_H_
#define SYMBREAK_JOIN_H_

#include <span>
#include <vector>

#include "symbreak/graph.h"

namespace symbreak {

// The X-join of the fibers {Y_u : u in X}. Vertex (u, i) gets index
// offset(u) + i with fibers laid out in the order of X's vertices; (u, i) and
// (u', i') are adjacent iff uu' is an edge of X, or u == u' and ii' is an
// edge of Y_u.
//
// Throws std::invalid_argument when fibers.size() != x.order() or a fiber is
// empty.
Graph x_join(const Graph& x, std::span<const Graph> fibers);

// X o Y: the X-join with every fiber equal to Y.
Graph lexicographic_product(const Graph& x, const Graph& y);

// First vertex index of each fiber inside x_join(x, fibers), plus a final
// entry equal to the total order.
std::vector<int> FiberOffsets(std::span<const Graph> fibers);

}  // namespace symbreak

#endif  // SYMBREAK_JOIN_H_
