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

#include "symbreak/products.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "symbreak/errors.h"
#include "symbreak/family.h"
#include "symbreak/join.h"
#include "symbreak/permutation_group.h"

namespace symbreak {

namespace {

// iso_type[u] is the least w whose fiber is isomorphic to fiber u.
std::vector<int> IsoTypes(std::span<const Graph> fibers) {
  std::vector<int> type(fibers.size());
  for (std::size_t u = 0; u < fibers.size(); ++u) {
    type[u] = static_cast<int>(u);
    for (std::size_t w = 0; w < u; ++w) {
      if (type[w] == static_cast<int>(w) && are_isomorphic(fibers[u], fibers[w])) {
        type[u] = static_cast<int>(w);
        break;
      }
    }
  }
  return type;
}

}  // namespace

JoinAnalysis naturality_check(const Graph& z, const Graph& x, std::span<const Graph> fibers) {
  if (static_cast<int>(fibers.size()) != x.order()) {
    throw std::invalid_argument("naturality_check needs one fiber per vertex of X");
  }
  if (!(z == x_join(x, fibers))) {
    throw std::invalid_argument("z is not the X-join of the given fibers");
  }
  const auto aut_x = automorphism_group(x);
  const auto type = IsoTypes(fibers);
  // |Iso(Y_u, Y_w)| is |Aut(Y_u)| for isomorphic fibers and 0 otherwise.
  std::map<int, BigInt> aut_order;
  for (std::size_t u = 0; u < fibers.size(); ++u) {
    if (type[u] == static_cast<int>(u)) aut_order[type[u]] = count_isomorphisms(fibers[u], fibers[u]);
  }
  JoinAnalysis analysis;
  analysis.natural_count = 0;
  for (const auto& alpha : aut_x.elements()) {
    BigInt term = 1;
    for (int u = 0; u < x.order() && term != 0; ++u) {
      term = type[u] == type[alpha[u]] ? term * aut_order[type[u]] : BigInt(0);
    }
    analysis.natural_count += term;
  }
  analysis.full_aut_order = automorphism_group_order(z);
  analysis.all_natural = analysis.natural_count == analysis.full_aut_order;
  return analysis;
}

LexicographicResult d_lexicographic(const Graph& x, const Graph& y,
                                    const ProductOptions& options) {
  const Graph z = lexicographic_product(x, y);
  std::vector<Graph> fibers(x.order(), y);
  LexicographicResult result;
  result.analysis = naturality_check(z, x, fibers);
  if (result.analysis.all_natural) {
    const BigInt dx = distinguishing_number(x, options.counts).value;
    const GraphSymmetry y_sym(y, options.counts.search);
    for (int k = 1;; ++k) {
      const auto phi = count_phi(y_sym, k, Mode::kAtMost, Backend::kAuto, options.counts);
      if (phi.value >= dx) {
        result.value = {k, phi.backend, "least k with Phi_k(Y) >= D(X) (naturality verified)"};
        break;
      }
    }
    if (z.order() <= options.cross_check_order) {
      result.direct = distinguishing_number(z, options.counts).value;
    }
  } else {
    result.value = distinguishing_number(z, options.counts);
    result.value.rule = "direct distinguishing number (unnatural automorphisms present)";
    result.used_fallback = true;
    result.direct = result.value.value;
  }
  return result;
}

XJoinBoundResult d_xjoin_upper_bound(const Graph& x, std::span<const Graph> fibers,
                                     const XJoinOptions& options) {
  const Graph z = x_join(x, fibers);
  XJoinBoundResult result;
  result.analysis = naturality_check(z, x, fibers);
  if (!result.analysis.all_natural) {
    throw std::domain_error("the X-join has unnatural automorphisms; the bound does not apply");
  }
  const GraphSymmetry x_sym(x, options.counts.search);
  const int colors = static_cast<int>(distinguishing_number(x_sym, options.counts).value);
  const int n = x.order();

  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(colors);
    if (total > options.coloring_limit) {
      throw SizeBoundExceeded("X-join bound: D(X)^|X| exceeds coloring_limit=" +
                              std::to_string(options.coloring_limit));
    }
  }

  const auto type = IsoTypes(fibers);
  std::map<int, GraphSymmetry> fiber_sym;
  std::map<int, std::vector<BigInt>> phi_cache;  // Phi_k(Y_type) at index k
  auto fiber_colors_needed = [&](int t, int class_size) {
    auto& phis = phi_cache[t];
    if (!fiber_sym.contains(t)) fiber_sym.emplace(t, GraphSymmetry(fibers[t], options.counts.search));
    for (int k = 1;; ++k) {
      if (static_cast<int>(phis.size()) <= k) {
        phis.resize(k + 1);
        phis[k] = count_phi(fiber_sym.at(t), k, Mode::kAtMost, Backend::kAuto, options.counts).value;
      }
      if (phis[k] >= class_size) return k;
    }
  };

  std::vector<int> f(n, 1);
  int best = -1;
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (int v = n - 1; v >= 0; --v) {
      f[v] = static_cast<int>(rest % colors) + 1;
      rest /= colors;
    }
    Coloring coloring(f, colors);
    if (!is_distinguishing(x, coloring, x_sym.aut())) continue;
    XJoinBoundTerm term{coloring, std::vector<int>(n), std::vector<int>(n), 0};
    for (int u = 0; u < n; ++u) {
      int size = 1;
      for (int w = 0; w < n; ++w) {
        if (w != u && f[w] != f[u] && type[w] == type[u]) ++size;
      }
      term.class_sizes[u] = size;
      term.fiber_colors[u] = fiber_colors_needed(type[u], size);
      term.bound = std::max(term.bound, term.fiber_colors[u]);
    }
    if (best < 0 || term.bound < best) best = term.bound;
    result.terms.push_back(std::move(term));
  }
  result.bound = {best, Backend::kClosedForm, "min over f of d_f"};

  if (z.order() <= options.direct_order) {
    try {
      result.direct = distinguishing_number(z, options.counts).value;
    } catch (const SizeBoundExceeded&) {
      result.direct.reset();
    }
    if (result.direct && *result.direct > best) {
      throw std::logic_error("X-join bound " + std::to_string(best) + " is below D(Z) = " +
                             result.direct->str());
    }
  }
  return result;
}

Graph AsymmetricTree7() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  return Graph(7, edges, "tree:1,2,3");
}

Graph AsymmetricTree8() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}};
  return Graph(8, edges, "tree:1,2,4");
}

StrictnessInstance strictness_instance(int cycle_length) {
  StrictnessInstance instance;
  instance.x = make_family(FamilySpec{FamilyKind::kCycle, {cycle_length}});
  const Graph single = make_family(FamilySpec{FamilyKind::kComplete, {1}});
  instance.fibers.assign(cycle_length, single);
  instance.fibers[0] = AsymmetricTree7();
  instance.fibers[2] = AsymmetricTree8();
  return instance;
}

}  // namespace symbreak
