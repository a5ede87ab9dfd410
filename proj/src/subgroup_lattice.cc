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

#include "symbreak/subgroup_lattice.h"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "symbreak/errors.h"
#include "symbreak/group_action.h"

namespace symbreak {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& bits) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto word : bits) h = (h ^ word) * 0x100000001b3ULL + (h >> 29);
    return h;
  }
};

bool Test(const Bits& bits, std::size_t i) { return (bits[i / 64] >> (i % 64)) & 1; }
void Set(Bits& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

bool IsSubset(const Bits& a, const Bits& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

struct Candidate {
  Bits bits;
  std::vector<std::uint32_t> members;
  std::vector<std::uint32_t> generators;
};

// Multiplication table over element indices: table[i * n + j] = e_i * e_j.
std::vector<std::uint32_t> MultiplicationTable(const PermutationGroup& group) {
  const auto& elements = group.elements();
  const std::size_t n = elements.size();
  std::unordered_map<std::vector<int>, std::uint32_t,
                     decltype([](const std::vector<int>& v) {
                       std::size_t h = 0;
                       for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x);
                       return h;
                     })>
      index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(elements[i].images(), i);
  std::vector<std::uint32_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index.at((elements[i] * elements[j]).images());
    }
  }
  return table;
}

}  // namespace

SubgroupLattice SubgroupLattice::Compute(const PermutationGroup& group,
                                         const LatticeLimits& limits) {
  const std::size_t n = group.order();
  if (n > limits.max_group_order) {
    throw SizeBoundExceeded("subgroup lattice bound exceeded: |G|=" + std::to_string(n) +
                            " > max_group_order=" + std::to_string(limits.max_group_order));
  }
  const std::size_t words = (n + 63) / 64;
  const auto table = MultiplicationTable(group);

  // Closure of `start` (already a subgroup, or just {identity}) with one
  // extra generator.
  auto join = [&](const Candidate& start, std::uint32_t extra) {
    Candidate out = start;
    out.generators.push_back(extra);
    const std::size_t old_size = out.members.size();
    for (std::size_t i = 0; i < out.members.size(); ++i) {
      const std::size_t first = i < old_size ? out.generators.size() - 1 : 0;
      for (std::size_t g = first; g < out.generators.size(); ++g) {
        const std::uint32_t product = table[out.generators[g] * n + out.members[i]];
        if (!Test(out.bits, product)) {
          Set(out.bits, product);
          out.members.push_back(product);
        }
      }
    }
    return out;
  };

  Candidate trivial{Bits(words, 0), {0}, {}};
  Set(trivial.bits, 0);

  // Seeds: cyclic subgroups of prime-power order. Every subgroup is generated
  // by its prime-power-order elements, so joining with these seeds from the
  // trivial subgroup upward reaches the whole lattice.
  auto is_prime_power = [](std::size_t m) {
    if (m < 2) return false;
    std::size_t p = 2;
    while (m % p) ++p;
    while (m % p == 0) m /= p;
    return m == 1;
  };
  std::vector<std::uint32_t> seeds;
  {
    std::unordered_map<Bits, bool, BitsHash> seen;
    for (std::uint32_t e = 1; e < n; ++e) {
      auto cyclic = join(trivial, e);
      if (!is_prime_power(cyclic.members.size())) continue;
      if (seen.emplace(cyclic.bits, true).second) seeds.push_back(e);
    }
  }

  std::vector<Candidate> found{trivial};
  std::unordered_map<Bits, std::size_t, BitsHash> index{{trivial.bits, 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::uint32_t seed : seeds) {
      if (Test(found[i].bits, seed)) continue;
      auto joined = join(found[i], seed);
      if (index.contains(joined.bits)) continue;
      if (found.size() >= limits.max_subgroups) {
        throw SizeBoundExceeded("subgroup lattice has more than max_subgroups=" +
                                std::to_string(limits.max_subgroups) + " subgroups");
      }
      index.emplace(joined.bits, found.size());
      found.push_back(std::move(joined));
    }
  }

  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return std::lexicographical_compare(a.bits.rbegin(), a.bits.rend(), b.bits.rbegin(),
                                        b.bits.rend());
  });

  SubgroupLattice lattice;
  lattice.group_ = group;
  const std::size_t s = found.size();
  lattice.bits_.reserve(s);
  lattice.members_.reserve(s);
  for (auto& candidate : found) {
    std::sort(candidate.members.begin(), candidate.members.end());
    lattice.bits_.push_back(std::move(candidate.bits));
    lattice.members_.push_back(std::move(candidate.members));
    std::vector<Permutation> gens;
    for (auto g : candidate.generators) gens.push_back(group.elements()[g]);
    lattice.orbit_counts_.push_back(orbits_under(gens, group.degree()).num_cells());
  }
  lattice.up_.resize(s);
  for (std::size_t h = 0; h < s; ++h) {
    for (std::size_t k = h + 1; k < s; ++k) {
      const auto small = lattice.members_[h].size();
      const auto big = lattice.members_[k].size();
      if (big > small && big % small == 0 && IsSubset(lattice.bits_[h], lattice.bits_[k])) {
        lattice.up_[h].push_back(static_cast<std::uint32_t>(k));
      }
    }
  }
  return lattice;
}

std::vector<Permutation> SubgroupLattice::elements(std::size_t h) const {
  std::vector<Permutation> out;
  out.reserve(members_[h].size());
  for (auto i : members_[h]) out.push_back(group_.elements()[i]);
  return out;
}

bool SubgroupLattice::is_subgroup(std::size_t h, std::size_t k) const {
  if (h == k) return true;
  const auto& up = up_[h];
  return std::binary_search(up.begin(), up.end(), static_cast<std::uint32_t>(k));
}

std::vector<std::int64_t> SubgroupLattice::moebius_row(std::size_t h) const {
  // mu(h, h) = 1 and mu(h, k) = -sum_{h <= l < k} mu(h, l), evaluated upward
  // through the interval [h, whole] in lattice order.
  std::vector<std::int64_t> mu(size(), 0);
  mu[h] = 1;
  const auto& interval = up_[h];
  for (std::size_t a = 0; a < interval.size(); ++a) {
    const std::size_t k = interval[a];
    std::int64_t sum = mu[h];
    for (std::size_t b = 0; b < a; ++b) {
      const std::size_t l = interval[b];
      if (mu[l] != 0 && is_subgroup(l, k)) sum += mu[l];
    }
    mu[k] = -sum;
  }
  return mu;
}

std::optional<std::size_t> SubgroupLattice::find(
    std::span<const std::uint32_t> sorted_members) const {
  for (std::size_t h = 0; h < size(); ++h) {
    if (members_[h].size() == sorted_members.size() &&
        std::equal(members_[h].begin(), members_[h].end(), sorted_members.begin())) {
      return h;
    }
  }
  return std::nullopt;
}

SubgroupLattice subgroup_lattice(const PermutationGroup& group, const LatticeLimits& limits) {
  return SubgroupLattice::Compute(group, limits);
}

}  // namespace symbreak
