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

#include "symbreak/permutation.h"

#include <stdexcept>

namespace symbreak {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int image : images_) {
    if (image < 0 || image >= degree() || seen[image]) {
      throw std::invalid_argument("image sequence is not a permutation");
    }
    seen[image] = 1;
  }
}

Permutation Permutation::Identity(int degree) {
  Permutation p;
  p.images_.resize(degree);
  for (int v = 0; v < degree; ++v) p.images_[v] = v;
  return p;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < degree(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (int v = 0; v < degree(); ++v) inv.images_[images_[v]] = v;
  return inv;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in composition");
  Permutation r;
  r.images_.resize(q.images_.size());
  for (int v = 0; v < q.degree(); ++v) r.images_[v] = p.images_[q.images_[v]];
  return r;
}

std::string Permutation::ToJson() const {
  std::string out = "[";
  for (int v = 0; v < degree(); ++v) {
    if (v) out += ',';
    out += std::to_string(images_[v]);
  }
  return out + "]";
}

int cycle_count(const Permutation& p) {
  std::vector<char> seen(p.degree(), 0);
  int cycles = 0;
  for (int v = 0; v < p.degree(); ++v) {
    if (seen[v]) continue;
    ++cycles;
    for (int w = v; !seen[w]; w = p[w]) seen[w] = 1;
  }
  return cycles;
}

std::vector<std::vector<int>> Cycles(const Permutation& p) {
  std::vector<char> seen(p.degree(), 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < p.degree(); ++v) {
    if (seen[v]) continue;
    auto& cycle = out.emplace_back();
    for (int w = v; !seen[w]; w = p[w]) {
      seen[w] = 1;
      cycle.push_back(w);
    }
  }
  return out;
}

}  // namespace symbreak
