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

#include "symbreak/permutation_group.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "symbreak/errors.h"

namespace symbreak {

namespace {

// Stable color refinement on the disjoint union of a and b, so that color
// ids are comparable across the two graphs. Returns colors of a followed by
// colors of b.
std::vector<int> RefineColors(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int total = na + b.order();
  auto graph_of = [&](int v) -> std::pair<const Graph*, int> {
    return v < na ? std::make_pair(&a, v) : std::make_pair(&b, v - na);
  };
  std::vector<int> color(total);
  for (int v = 0; v < total; ++v) {
    auto [g, local] = graph_of(v);
    color[v] = g->degree(local);
  }
  std::size_t classes = 0;
  while (true) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> signature(total);
    for (int v = 0; v < total; ++v) {
      auto [g, local] = graph_of(v);
      const int shift = v < na ? 0 : na;
      signature[v].first = color[v];
      for (int w : g->neighbors(local)) signature[v].second.push_back(color[w + shift]);
      std::sort(signature[v].second.begin(), signature[v].second.end());
      ids.emplace(signature[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < total; ++v) color[v] = ids[signature[v]];
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b, const SearchLimits& limits)
      : a_(a), b_(b), n_(a.order()) {
    if (std::max(a.order(), b.order()) > limits.max_vertices) {
      throw SizeBoundExceeded("automorphism search bound exceeded: n=" +
                              std::to_string(std::max(a.order(), b.order())) +
                              " > max_vertices=" + std::to_string(limits.max_vertices));
    }
    feasible_ = a.order() == b.order() && a.size() == b.size();
    if (!feasible_) return;
    const auto colors = RefineColors(a, b);
    color_a_.assign(colors.begin(), colors.begin() + n_);
    color_b_.assign(colors.begin() + n_, colors.end());
    auto hist_a = color_a_;
    auto hist_b = color_b_;
    std::sort(hist_a.begin(), hist_a.end());
    std::sort(hist_b.begin(), hist_b.end());
    feasible_ = hist_a == hist_b;
    if (!feasible_) return;

    std::vector<int> class_size(*std::max_element(colors.begin(), colors.end()) + 1, 0);
    for (int c : color_a_) ++class_size[c];
    // Greedy order: most already-placed neighbors first, then smallest class.
    std::vector<char> placed(n_, 0);
    std::vector<int> placed_neighbors(n_, 0);
    for (int step = 0; step < n_; ++step) {
      int best = -1;
      for (int v = 0; v < n_; ++v) {
        if (placed[v]) continue;
        if (best < 0 || placed_neighbors[v] > placed_neighbors[best] ||
            (placed_neighbors[v] == placed_neighbors[best] &&
             class_size[color_a_[v]] < class_size[color_a_[best]])) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(best);
      for (int w : a.neighbors(best)) ++placed_neighbors[w];
    }
  }

  bool feasible() const { return feasible_; }
  const std::vector<int>& order() const { return order_; }
  int color_a(int v) const { return color_a_[v]; }
  int color_b(int v) const { return color_b_[v]; }

  // Enumerates isomorphisms extending the forced (vertex of a -> vertex of b)
  // pairs. `visit` returns false to stop. Returns the number visited.
  std::uint64_t Run(std::span<const std::pair<int, int>> forced,
                    const std::function<bool(const std::vector<int>&)>& visit) {
    if (!feasible_) return 0;
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    mapped_.clear();
    for (const auto& [v, w] : forced) {
      if (map_[v] >= 0) {
        if (map_[v] != w) return 0;
        continue;
      }
      if (used_[w] || !Compatible(v, w)) return 0;
      Assign(v, w);
    }
    remaining_.clear();
    for (int v : order_) {
      if (map_[v] < 0) remaining_.push_back(v);
    }
    count_ = 0;
    stop_ = false;
    Recurse(0, visit);
    return count_;
  }

 private:
  bool Compatible(int v, int w) const {
    if (color_a_[v] != color_b_[w]) return false;
    for (int u : mapped_) {
      if (a_.adjacent(u, v) != b_.adjacent(map_[u], w)) return false;
    }
    return true;
  }

  void Assign(int v, int w) {
    map_[v] = w;
    used_[w] = 1;
    mapped_.push_back(v);
  }

  void Unassign(int v) {
    used_[map_[v]] = 0;
    map_[v] = -1;
    mapped_.pop_back();
  }

  void Recurse(std::size_t depth, const std::function<bool(const std::vector<int>&)>& visit) {
    if (depth == remaining_.size()) {
      ++count_;
      if (!visit(map_)) stop_ = true;
      return;
    }
    const int v = remaining_[depth];
    for (int w = 0; w < n_ && !stop_; ++w) {
      if (used_[w] || !Compatible(v, w)) continue;
      Assign(v, w);
      Recurse(depth + 1, visit);
      Unassign(v);
    }
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  bool feasible_ = false;
  std::vector<int> color_a_, color_b_, order_;
  std::vector<int> map_, mapped_, remaining_;
  std::vector<char> used_;
  std::uint64_t count_ = 0;
  bool stop_ = false;
};

}  // namespace

PermutationGroup PermutationGroup::Trivial(int degree) {
  return FromElements(degree, {Permutation::Identity(degree)});
}

PermutationGroup PermutationGroup::Generate(int degree, std::span<const Permutation> generators) {
  std::vector<Permutation> elements{Permutation::Identity(degree)};
  std::map<Permutation, bool> seen{{elements[0], true}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      auto next = g * elements[i];
      if (seen.emplace(next, true).second) elements.push_back(std::move(next));
    }
  }
  return FromElements(degree, std::move(elements));
}

PermutationGroup PermutationGroup::FromElements(int degree, std::vector<Permutation> elements) {
  PermutationGroup group;
  group.degree_ = degree;
  for (const auto& p : elements) {
    if (p.degree() != degree) throw std::invalid_argument("element degree mismatch");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  group.elements_ = std::move(elements);
  if (group.elements_.empty() || !group.elements_[0].is_identity()) {
    throw std::invalid_argument("group elements must include the identity");
  }
  group.ChooseGenerators();
  for (const auto& g : group.generators_) {
    for (const auto& h : group.elements_) {
      if (!group.contains(g * h)) throw std::invalid_argument("element set is not closed");
    }
  }
  return group;
}

void PermutationGroup::ChooseGenerators() {
  generators_.clear();
  std::vector<char> in_span(elements_.size(), 0);
  in_span[0] = 1;
  std::vector<std::size_t> span_list{0};
  for (std::size_t candidate = 1; candidate < elements_.size(); ++candidate) {
    if (in_span[candidate]) continue;
    generators_.push_back(elements_[candidate]);
    // The old span is a subgroup, so its elements only need the new
    // generator; newly reached elements need every generator.
    const std::size_t old_size = span_list.size();
    for (std::size_t i = 0; i < span_list.size(); ++i) {
      const std::size_t first = i < old_size ? generators_.size() - 1 : 0;
      for (std::size_t j = first; j < generators_.size(); ++j) {
        const auto index = index_of(generators_[j] * elements_[span_list[i]]);
        if (index && !in_span[*index]) {
          in_span[*index] = 1;
          span_list.push_back(*index);
        }
      }
    }
  }
}

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

std::uint64_t for_each_isomorphism(const Graph& a, const Graph& b,
                                   const std::function<bool(const std::vector<int>&)>& visit,
                                   const SearchLimits& limits) {
  IsomorphismSearch search(a, b, limits);
  return search.Run({}, visit);
}

std::uint64_t count_isomorphisms(const Graph& a, const Graph& b, const SearchLimits& limits) {
  return for_each_isomorphism(a, b, [](const std::vector<int>&) { return true; }, limits);
}

bool are_isomorphic(const Graph& a, const Graph& b, const SearchLimits& limits) {
  return for_each_isomorphism(a, b, [](const std::vector<int>&) { return false; }, limits) > 0;
}

PermutationGroup automorphism_group(const Graph& g, const SearchLimits& limits) {
  std::vector<Permutation> elements;
  bool overflow = false;
  for_each_isomorphism(
      g, g,
      [&](const std::vector<int>& images) {
        if (elements.size() >= limits.max_elements) {
          overflow = true;
          return false;
        }
        elements.emplace_back(images);
        return true;
      },
      limits);
  if (overflow) {
    throw SizeBoundExceeded("automorphism group has more than max_elements=" +
                            std::to_string(limits.max_elements) + " elements");
  }
  return PermutationGroup::FromElements(g.order(), std::move(elements));
}

BigInt automorphism_group_order(const Graph& g, const SearchLimits& limits) {
  IsomorphismSearch search(g, g, limits);
  const int n = g.order();
  BigInt order = 1;
  std::vector<std::pair<int, int>> fixed;
  for (int base : search.order()) {
    // Orbit of `base` under the pointwise stabilizer of the earlier base points.
    std::vector<char> in_orbit(n, 0);
    in_orbit[base] = 1;
    std::vector<std::vector<int>> found;  // stabilizer elements discovered so far
    auto close_orbit = [&] {
      bool grew = true;
      while (grew) {
        grew = false;
        for (const auto& images : found) {
          for (int v = 0; v < n; ++v) {
            if (in_orbit[v] && !in_orbit[images[v]]) {
              in_orbit[images[v]] = 1;
              grew = true;
            }
          }
        }
      }
    };
    for (int w = 0; w < n; ++w) {
      if (in_orbit[w] || search.color_b(w) != search.color_a(base)) continue;
      auto forced = fixed;
      forced.emplace_back(base, w);
      search.Run(forced, [&](const std::vector<int>& images) {
        found.push_back(images);
        return false;
      });
      close_orbit();
    }
    order *= static_cast<long>(std::count(in_orbit.begin(), in_orbit.end(), 1));
    fixed.emplace_back(base, base);
  }
  return order;
}

}  // namespace symbreak
