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

#ifndef SYMBREAK_PARTITION_COUNTS_H_
#define SYMBREAK_PARTITION_COUNTS_H_

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "symbreak/coloring_counts.h"
#include "symbreak/set_partition.h"

namespace symbreak {

// Pi: all partitions. Psi: distinguishing coloring partitions (only the
// identity fixes every cell). Xi: distinguishing partitions (only the
// identity maps the partition onto itself, cells possibly permuted).
enum class PartitionFamily { kPi = 0, kPsi = 1, kXi = 2 };

std::string_view PartitionFamilyName(PartitionFamily family);

struct StabilizerKind {
  bool cellwise_trivial = false;
  bool setwise_trivial = false;
};

// One Aut(G)-orbit of set partitions. Two partitions are equivalent when some
// automorphism (the identity included) maps one onto the other.
struct PartitionClass {
  SetPartition representative;  // least restricted growth string in the orbit
  std::uint64_t orbit_size = 0;
  StabilizerKind stabilizer;
};

struct PartitionLimits {
  // Upper bound on the number of set partitions enumerated.
  std::uint64_t max_partitions = 5'000'000;
};

// Calls `visit` once per orbit of partitions with at most `max_cells` cells,
// in increasing order of representative. Throws SizeBoundExceeded when more
// than limits.max_partitions partitions would be enumerated.
void for_each_partition_class(const GraphSymmetry& sym, int max_cells,
                              const std::function<void(const PartitionClass&)>& visit,
                              const PartitionLimits& limits = {});

std::vector<PartitionClass> partition_orbits(const GraphSymmetry& sym, int max_cells,
                                             const PartitionLimits& limits = {});

// Orbit counts by family and exact cell count, from one enumeration.
class PartitionCensus {
 public:
  PartitionCensus(int degree, int max_cells);

  void Add(const PartitionClass& c);

  int max_cells() const { return max_cells_; }
  // Classes with exactly / at most k cells; k is clamped to max_cells.
  std::uint64_t exact(PartitionFamily family, int k) const;
  std::uint64_t at_most(PartitionFamily family, int k) const;

 private:
  int max_cells_;
  std::array<std::vector<std::uint64_t>, 3> by_cells_;
};

PartitionCensus partition_census(const GraphSymmetry& sym, int max_cells,
                                 const PartitionLimits& limits = {});

// Pi_k / Psi_k / Xi_k (kAtMost) or pi_k / psi_k / xi_k (kExact, computed as
// the at-most difference). Throws std::invalid_argument for k < 1.
IndexValue count_partition_index(const GraphSymmetry& sym, int k, PartitionFamily family,
                                 Mode mode, const PartitionLimits& limits = {});

// Minimum number of cells of a distinguishing partition; nullopt when the
// graph has none (K_2, for instance).
std::optional<IndexValue> dp_number(const GraphSymmetry& sym, const PartitionLimits& limits = {});

// psi_2(P_n), psi_{n-1}(P_n) for n >= 4, and psi_{n-1}(C_n). Throws
// NoClosedForm otherwise.
IndexValue closed_form_psi(const FamilySpec& spec, int k);

}  // namespace symbreak

#endif  // SYMBREAK_PARTITION_COUNTS_H_
