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

#ifndef SYMBREAK_PRODUCTS_H_
#define SYMBREAK_PRODUCTS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symbreak/bigint.h"
#include "symbreak/coloring.h"
#include "symbreak/coloring_counts.h"
#include "symbreak/graph.h"

namespace symbreak {

// Natural automorphisms of an X-join map every fiber onto a fiber.
struct JoinAnalysis {
  BigInt natural_count;   // sum over a in Aut(X) of prod_x |Iso(Y_x, Y_a(x))|
  BigInt full_aut_order;  // |Aut(Z)|, computed on Z itself
  bool all_natural = false;
};

// Throws std::invalid_argument unless fibers has one entry per vertex of x
// and z has the X-join's vertex count.
JoinAnalysis naturality_check(const Graph& z, const Graph& x, std::span<const Graph> fibers);

struct LexicographicResult {
  IndexValue value;
  JoinAnalysis analysis;
  // Some automorphism is unnatural, so the Phi_k(Y) rule was skipped and value is
  // the distinguishing number of the product computed directly.
  bool used_fallback = false;
  // Direct distinguishing number of the product, when it was small enough
  // to cross-check.
  std::optional<BigInt> direct;
};

struct ProductOptions {
  // Products with at most this many vertices are cross-checked directly.
  int cross_check_order = 14;
  CountOptions counts;
};

// D(X o Y): the least k with Phi_k(Y) >= D(X) when every automorphism of
// X o Y is natural; otherwise the product's own distinguishing number.
LexicographicResult d_lexicographic(const Graph& x, const Graph& y,
                                    const ProductOptions& options = {});

struct XJoinBoundTerm {
  Coloring coloring;  // f, a distinguishing coloring of X with D(X) colors
  std::vector<int> class_sizes;  // |C(x)| per vertex x
  std::vector<int> fiber_colors;  // D_x per vertex x
  int bound = 0;  // d_f = max_x D_x
};

struct XJoinBoundResult {
  IndexValue bound;  // min over f of d_f
  JoinAnalysis analysis;
  std::vector<XJoinBoundTerm> terms;  // every f considered, in enumeration order
  std::optional<BigInt> direct;       // D(Z) when computable
};

struct XJoinOptions {
  // Largest D(X)^|V(X)| for enumerating the colorings f.
  std::uint64_t coloring_limit = 2'000'000;
  // D(Z) is computed directly when Z has at most this many vertices.
  int direct_order = 30;
  CountOptions counts;
};

// Upper bound min_f d_f on D(Z) for the X-join Z of `fibers`, where f ranges
// over all distinguishing colorings of X with D(X) colors,
// C(x) = {w : f(w) != f(x), Y_w ~ Y_x} + {x}, and
// D_x = min{k : Phi_k(Y_x) >= |C(x)|}. Throws std::domain_error when Z has
// an unnatural automorphism, SizeBoundExceeded when f cannot be enumerated.
XJoinBoundResult d_xjoin_upper_bound(const Graph& x, std::span<const Graph> fibers,
                                     const XJoinOptions& options = {});

// The asymmetric trees with three branches of lengths 1, 2, 3 (7 vertices)
// and 1, 2, 4 (8 vertices).
Graph AsymmetricTree7();
Graph AsymmetricTree8();

// C_n joined with AsymmetricTree7() at vertex 0, AsymmetricTree8() at
// vertex 2, and K_1 everywhere else.
struct StrictnessInstance {
  Graph x;
  std::vector<Graph> fibers;
};
StrictnessInstance strictness_instance(int cycle_length);

}  // namespace symbreak

#endif  // SYMBREAK_PRODUCTS_H_
