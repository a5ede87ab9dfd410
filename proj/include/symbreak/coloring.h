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

#ifndef SYMBREAK_COLORING_H_
#define SYMBREAK_COLORING_H_

#include <compare>
#include <vector>

namespace symbreak {

// A vertex coloring with colors drawn from the palette {1..k}.
class Coloring {
 public:
  Coloring() = default;
  // Throws std::invalid_argument if a color lies outside 1..palette.
  Coloring(std::vector<int> colors, int palette);

  int degree() const { return static_cast<int>(colors_.size()); }
  int palette() const { return palette_; }
  int operator[](int v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  int colors_used() const;
  // Every color of the palette appears.
  bool is_exact() const { return colors_used() == palette_; }

  auto operator<=>(const Coloring&) const = default;

 private:
  std::vector<int> colors_;
  int palette_ = 0;
};

}  // namespace symbreak

#endif  // SYMBREAK_COLORING_H_
