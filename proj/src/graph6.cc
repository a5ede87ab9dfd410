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

#include "symbreak/graph6.h"

#include <stdexcept>
#include <vector>

#include "symbreak/errors.h"

namespace symbreak {

namespace {
constexpr int kOffset = 63;
constexpr int kMaxChar = 126;

std::size_t PayloadChars(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 word");
  for (char c : text) {
    const int value = static_cast<unsigned char>(c);
    if (value < kOffset || value > kMaxChar) {
      throw ParseError("graph6 character out of range 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kOffset;
  if (n > kMaxGraph6Order) {
    throw ParseError("graph6 multi-byte size headers (n > 62) are not supported");
  }
  const auto payload = text.substr(1);
  if (payload.size() != PayloadChars(n)) {
    throw ParseError("graph6 word has " + std::to_string(payload.size()) +
                     " data characters, expected " + std::to_string(PayloadChars(n)) +
                     " for n=" + std::to_string(n));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  auto read_bit = [&](std::size_t index) {
    const int word = static_cast<unsigned char>(payload[index / 6]) - kOffset;
    return (word >> (5 - index % 6)) & 1;
  };
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (read_bit(bit)) edges.emplace_back(u, v);
    }
  }
  for (; bit < payload.size() * 6; ++bit) {
    if (read_bit(bit)) throw ParseError("graph6 padding bits must be zero");
  }
  return Graph(n, edges);
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw std::invalid_argument("graph6 output is limited to n <= 62");
  }
  std::string out(1 + PayloadChars(n), static_cast<char>(kOffset));
  out[0] = static_cast<char>(n + kOffset);
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.adjacent(u, v)) out[1 + bit / 6] += static_cast<char>(1 << (5 - bit % 6));
    }
  }
  return out;
}

}  // namespace symbreak
