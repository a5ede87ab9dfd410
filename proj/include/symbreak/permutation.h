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

#ifndef SYMBREAK_PERMUTATION_H_
#define SYMBREAK_PERMUTATION_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace symbreak {

// A bijection of {0..n-1}, stored as its image sequence. Ordering is
// lexicographic on the image sequence.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument if `images` is not a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation Identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int v) const { return images_[v]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // (p * q)(v) = p(q(v)): apply q first.
  friend Permutation operator*(const Permutation& p, const Permutation& q);

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

  // One-line notation as a JSON array, e.g. "[1,0,2]".
  std::string ToJson() const;

 private:
  std::vector<int> images_;
};

// Number of cycles of p on {0..n-1}, fixed points included.
int cycle_count(const Permutation& p);

// Cycles of p, each starting at its least point, ordered by that point.
std::vector<std::vector<int>> Cycles(const Permutation& p);

}  // namespace symbreak

#endif  // SYMBREAK_PERMUTATION_H_
