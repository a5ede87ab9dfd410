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

#ifndef SYMBREAK_COLORING_COUNTS_H_
#define SYMBREAK_COLORING_COUNTS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "symbreak/bigint.h"
#include "symbreak/coloring.h"
#include "symbreak/family.h"
#include "symbreak/graph.h"
#include "symbreak/permutation_group.h"
#include "symbreak/subgroup_lattice.h"

namespace symbreak {

enum class Backend { kAuto, kOracle, kMoebius, kClosedForm };
enum class Mode { kAtMost, kExact };

std::string_view BackendName(Backend backend);
// Accepts auto, oracle, moebius, closed / closed-form.
Backend ParseBackend(std::string_view text);

// A computed index together with the backend (and rule) that produced it.
struct IndexValue {
  BigInt value;
  Backend backend = Backend::kOracle;
  std::string rule;
};

struct CountOptions {
  // The oracle enumerates k^n colorings; above this it is not run.
  std::uint64_t oracle_limit = 10'000'000;
  LatticeLimits lattice;
  SearchLimits search;
};

// A graph with its automorphism group, and the subgroup lattice computed on
// first use. Cheap to copy; copies share the lattice.
class GraphSymmetry {
 public:
  explicit GraphSymmetry(Graph g, const SearchLimits& limits = {});

  const Graph& graph() const { return graph_; }
  const PermutationGroup& aut() const { return aut_; }
  // The family this graph was built from, recovered from its label.
  const std::optional<FamilySpec>& family() const { return family_; }

  // Throws SizeBoundExceeded when the group is too large for the lattice.
  const SubgroupLattice& lattice(const LatticeLimits& limits = {}) const;

 private:
  struct LatticeCache;

  Graph graph_;
  PermutationGroup aut_;
  std::optional<FamilySpec> family_;
  std::shared_ptr<LatticeCache> lattice_;
};

// Stirling number of the second kind, S(n, k); zero outside 0 <= k <= n.
BigInt stirling2(int n, int k);

// True iff no non-identity element of `aut` preserves c. Throws
// std::invalid_argument if c does not color exactly g's vertices.
bool is_distinguishing(const Graph& g, const Coloring& c, const PermutationGroup& aut);

// Least d admitting a distinguishing coloring with at most d colors.
IndexValue distinguishing_number(const GraphSymmetry& sym, const CountOptions& options = {});
IndexValue distinguishing_number(const Graph& g, const CountOptions& options = {});

// Distinguishing threshold: 1 + the largest cycle count of a non-identity
// automorphism, or 1 when the group is trivial. A non-identity p preserves
// some coloring with exactly t colors iff t <= cycle_count(p).
IndexValue threshold(const GraphSymmetry& sym);
IndexValue threshold(const Graph& g);

// Number of inequivalent distinguishing colorings with colors from {1..k}
// (kAtMost) or using all k colors (kExact). Throws std::invalid_argument for
// k < 1, SizeBoundExceeded when the chosen backend's bound is exceeded, and
// NoClosedForm for kClosedForm requests no rule covers.
IndexValue count_phi(const GraphSymmetry& sym, int k, Mode mode, Backend backend = Backend::kAuto,
                     const CountOptions& options = {});
IndexValue count_phi(const Graph& g, int k, Mode mode, Backend backend = Backend::kAuto,
                     const CountOptions& options = {});

// Closed forms: the path recursions, K_n (and its complement), K_{m,m}, and
// for any graph the exact counts at k = n and in the regime k >= threshold.
IndexValue closed_form_phi(const GraphSymmetry& sym, int k, Mode mode);
IndexValue closed_form_phi(const FamilySpec& spec, int k, Mode mode);

}  // namespace symbreak

#endif  // SYMBREAK_COLORING_COUNTS_H_
