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

#include "symbreak/coloring.h"

#include <algorithm>
#include <stdexcept>

namespace symbreak {

Coloring::Coloring(std::vector<int> colors, int palette)
    : colors_(std::move(colors)), palette_(palette) {
  for (int c : colors_) {
    if (c < 1 || c > palette_) throw std::invalid_argument("color outside palette 1..k");
  }
}

int Coloring::colors_used() const {
  std::vector<char> seen(palette_ + 1, 0);
  int used = 0;
  for (int c : colors_) {
    if (!seen[c]) {
      seen[c] = 1;
      ++used;
    }
  }
  return used;
}

}  // namespace symbreak
