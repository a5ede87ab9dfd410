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

// Brute-force reference implementations used only by the tests. They share
// nothing with the library beyond the Graph type, and are meant for n <= 7.

#ifndef SYMBREAK_TESTS_ORACLES_H_
#define SYMBREAK_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "symbreak/graph.h"

namespace symbreak::testing {

using Perm = std::vector<int>;

// Every vertex permutation preserving adjacency, identity first.
inline std::vector<Perm> BruteAutomorphisms(const Graph& g) {
  const int n = g.order();
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool IsIdentity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

// labels[p[v]] = labels[v] for all v.
inline bool Fixes(const Perm& p, const std::vector<int>& labels) {
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (labels[p[v]] != labels[v]) return false;
  }
  return true;
}

inline std::vector<int> Image(const Perm& p, const std::vector<int>& labels) {
  std::vector<int> out(labels.size());
  for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = labels[v];
  return out;
}

// Calls visit(colors) for each of the k^n colorings with colors 0..k-1.
template <typename Visit>
void ForEachColoring(int n, int k, Visit visit) {
  std::vector<int> c(n, 0);
  while (true) {
    visit(c);
    int i = n - 1;
    while (i >= 0 && c[i] == k - 1) c[i--] = 0;
    if (i < 0) return;
    ++c[i];
  }
}

// Number of inequivalent distinguishing colorings with at most (or exactly) k
// colors, counted as distinct orbit representatives.
inline std::uint64_t BrutePhi(const Graph& g, int k, bool exact) {
  const auto aut = BruteAutomorphisms(g);
  std::set<std::vector<int>> reps;
  ForEachColoring(g.order(), k, [&](const std::vector<int>& c) {
    if (exact && static_cast<int>(std::set<int>(c.begin(), c.end()).size()) != k) return;
    for (const auto& p : aut) {
      if (!IsIdentity(p) && Fixes(p, c)) return;
    }
    std::vector<int> best = c;
    for (const auto& p : aut) best = std::min(best, Image(p, c));
    reps.insert(best);
  });
  return reps.size();
}

// Least t such that every coloring using at least t colors is distinguishing.
inline int BruteThreshold(const Graph& g) {
  const auto aut = BruteAutomorphisms(g);
  const int n = g.order();
  int worst = 0;  // most colors used by a non-distinguishing coloring
  ForEachColoring(n, n, [&](const std::vector<int>& c) {
    const int used = static_cast<int>(std::set<int>(c.begin(), c.end()).size());
    if (used <= worst) return;
    for (const auto& p : aut) {
      if (!IsIdentity(p) && Fixes(p, c)) {
        worst = used;
        return;
      }
    }
  });
  return worst + 1;
}

inline std::vector<int> Canonical(const std::vector<int>& labels) {
  std::map<int, int> relabel;
  std::vector<int> out;
  for (int x : labels) out.push_back(relabel.emplace(x, static_cast<int>(relabel.size())).first->second);
  return out;
}

struct PartitionCounts {
  // Indexed by exact cell count.
  std::vector<std::uint64_t> pi, psi, xi;
};

// Orbits of set partitions under Aut(G), with stabilizers computed directly.
inline PartitionCounts BrutePartitions(const Graph& g) {
  const int n = g.order();
  const auto aut = BruteAutomorphisms(g);
  std::set<std::vector<int>> partitions;
  ForEachColoring(n, n, [&](const std::vector<int>& c) { partitions.insert(Canonical(c)); });
  PartitionCounts out{std::vector<std::uint64_t>(n + 1), std::vector<std::uint64_t>(n + 1),
                      std::vector<std::uint64_t>(n + 1)};
  std::set<std::vector<int>> done;
  for (const auto& part : partitions) {
    if (done.contains(part)) continue;
    for (const auto& p : aut) done.insert(Canonical(Image(p, part)));
    const int cells = *std::max_element(part.begin(), part.end()) + 1;
    bool cellwise_trivial = true, setwise_trivial = true;
    for (const auto& p : aut) {
      if (IsIdentity(p)) continue;
      if (Fixes(p, part)) cellwise_trivial = false;
      if (Canonical(Image(p, part)) == part) setwise_trivial = false;
    }
    ++out.pi[cells];
    out.psi[cells] += cellwise_trivial;
    out.xi[cells] += setwise_trivial;
  }
  return out;
}

// Burnside: number of partition orbits with exactly `cells` cells.
inline std::uint64_t BurnsidePartitionOrbits(const Graph& g, int cells) {
  const int n = g.order();
  const auto aut = BruteAutomorphisms(g);
  std::set<std::vector<int>> partitions;
  ForEachColoring(n, cells, [&](const std::vector<int>& c) {
    auto canon = Canonical(c);
    if (*std::max_element(canon.begin(), canon.end()) + 1 == cells) partitions.insert(canon);
  });
  std::uint64_t fixed = 0;
  for (const auto& p : aut) {
    for (const auto& part : partitions) fixed += Canonical(Image(p, part)) == part;
  }
  return fixed / aut.size();
}

// Distinguishing number by exhaustive search over colorings.
inline int BruteDistinguishingNumber(const Graph& g) {
  const auto aut = BruteAutomorphisms(g);
  for (int k = 1;; ++k) {
    bool found = false;
    ForEachColoring(g.order(), k, [&](const std::vector<int>& c) {
      if (found) return;
      for (const auto& p : aut) {
        if (!IsIdentity(p) && Fixes(p, c)) return;
      }
      found = true;
    });
    if (found) return k;
  }
}

}  // namespace symbreak::testing

#endif  // SYMBREAK_TESTS_ORACLES_H_
