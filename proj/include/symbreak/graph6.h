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

#ifndef SYMBREAK_GRAPH6_H_
#define SYMBREAK_GRAPH6_H_

#include <string>
#include <string_view>

#include "symbreak/graph.h"

namespace symbreak {

// graph6 words with the one-byte size header, so 0 <= n <= 62. The upper
// triangle is read column by column: (0,1), (0,2), (1,2), (0,3), ...
// six bits per character, most significant first, offset by 63.
inline constexpr int kMaxGraph6Order = 62;

// Throws ParseError on a malformed header, wrong length, characters outside
// 63..126, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

// Throws std::invalid_argument when g.order() > kMaxGraph6Order.
std::string serialize_graph6(const Graph& g);

}  // namespace symbreak

#endif  // SYMBREAK_GRAPH6_H_
