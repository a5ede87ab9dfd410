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

#include "symbreak/partition_counts.h"

#include <algorithm>
#include <stdexcept>

#include "symbreak/errors.h"

namespace symbreak {

namespace {

std::uint64_t PartitionCount(int n, int max_cells, std::uint64_t cap) {
  BigInt total = 0;
  for (int j = 0; j <= std::min(n, max_cells); ++j) total += stirling2(n, j);
  return total > cap ? cap + 1 : static_cast<std::uint64_t>(total);
}

}  // namespace

std::string_view PartitionFamilyName(PartitionFamily family) {
  switch (family) {
    case PartitionFamily::kPi:
      return "Pi";
    case PartitionFamily::kPsi:
      return "Psi";
    case PartitionFamily::kXi:
      return "Xi";
  }
  return "?";
}

void for_each_partition_class(const GraphSymmetry& sym, int max_cells,
                              const std::function<void(const PartitionClass&)>& visit,
                              const PartitionLimits& limits) {
  const int n = sym.graph().order();
  if (max_cells < 1 || n == 0) return;
  const auto count = PartitionCount(n, max_cells, limits.max_partitions);
  if (count > limits.max_partitions) {
    throw SizeBoundExceeded("partition enumeration bound exceeded: more than max_partitions=" +
                            std::to_string(limits.max_partitions) + " partitions of " +
                            std::to_string(n) + " vertices");
  }

  const auto& elements = sym.aut().elements();
  std::vector<std::vector<int>> inverses;
  for (const auto& p : elements) {
    if (!p.is_identity()) inverses.push_back(p.inverse().images());
  }
  const std::uint64_t group_order = elements.size();

  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);  // largest label among rgs[0..i]
  std::vector<int> relabel(n);
  while (true) {
    // Compare each image partition's restricted growth string with rgs.
    bool minimal = true;
    std::uint64_t setwise = 1;
    bool cellwise_fixed_by_nonidentity = false;
    for (const auto& inv : inverses) {
      std::fill(relabel.begin(), relabel.end(), -1);
      int next = 0;
      int cmp = 0;
      for (int v = 0; v < n && cmp == 0; ++v) {
        int& mapped = relabel[rgs[inv[v]]];
        if (mapped < 0) mapped = next++;
        cmp = mapped < rgs[v] ? -1 : (mapped > rgs[v] ? 1 : 0);
      }
      if (cmp < 0) {
        minimal = false;
        break;
      }
      if (cmp == 0) {
        ++setwise;
        bool cellwise = true;
        for (int v = 0; v < n && cellwise; ++v) cellwise = rgs[inv[v]] == rgs[v];
        cellwise_fixed_by_nonidentity |= cellwise;
      }
    }
    if (minimal) {
      PartitionClass c;
      c.representative = SetPartition::FromLabels(rgs);
      c.orbit_size = group_order / setwise;
      c.stabilizer.setwise_trivial = setwise == 1;
      c.stabilizer.cellwise_trivial = !cellwise_fixed_by_nonidentity;
      visit(c);
    }
    // Next restricted growth string with labels < max_cells.
    int i = n - 1;
    while (i > 0 && (rgs[i] > prefix_max[i - 1] || rgs[i] + 1 >= max_cells)) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<PartitionClass> partition_orbits(const GraphSymmetry& sym, int max_cells,
                                             const PartitionLimits& limits) {
  std::vector<PartitionClass> out;
  for_each_partition_class(sym, max_cells, [&](const PartitionClass& c) { out.push_back(c); },
                           limits);
  return out;
}

PartitionCensus::PartitionCensus(int degree, int max_cells)
    : max_cells_(std::min(degree, max_cells)) {
  for (auto& counts : by_cells_) counts.assign(max_cells_ + 1, 0);
}

void PartitionCensus::Add(const PartitionClass& c) {
  const int cells = c.representative.num_cells();
#ifdef SYMBREAK_FAULT_SWAP_PI_PSI
  // Deliberate defect for the verifier smoke test.
  ++by_cells_[static_cast<int>(PartitionFamily::kPsi)][cells];
  if (c.stabilizer.cellwise_trivial) ++by_cells_[static_cast<int>(PartitionFamily::kPi)][cells];
#else
  ++by_cells_[static_cast<int>(PartitionFamily::kPi)][cells];
  if (c.stabilizer.cellwise_trivial) ++by_cells_[static_cast<int>(PartitionFamily::kPsi)][cells];
#endif
  if (c.stabilizer.setwise_trivial) ++by_cells_[static_cast<int>(PartitionFamily::kXi)][cells];
}

std::uint64_t PartitionCensus::exact(PartitionFamily family, int k) const {
  if (k < 0 || k > max_cells_) return 0;
  return by_cells_[static_cast<int>(family)][k];
}

std::uint64_t PartitionCensus::at_most(PartitionFamily family, int k) const {
  std::uint64_t total = 0;
  for (int j = 0; j <= std::min(k, max_cells_); ++j) total += exact(family, j);
  return total;
}

PartitionCensus partition_census(const GraphSymmetry& sym, int max_cells,
                                 const PartitionLimits& limits) {
  PartitionCensus census(sym.graph().order(), max_cells);
  for_each_partition_class(sym, max_cells, [&](const PartitionClass& c) { census.Add(c); },
                           limits);
  return census;
}

IndexValue count_partition_index(const GraphSymmetry& sym, int k, PartitionFamily family,
                                 Mode mode, const PartitionLimits& limits) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const auto census = partition_census(sym, k, limits);
  const std::uint64_t at_most = census.at_most(family, k);
  if (mode == Mode::kAtMost) return {at_most, Backend::kOracle, "orbit enumeration"};
  return {at_most - census.at_most(family, k - 1), Backend::kOracle,
          "orbit enumeration (at-most difference)"};
}

std::optional<IndexValue> dp_number(const GraphSymmetry& sym, const PartitionLimits& limits) {
  const int n = sym.graph().order();
  const auto census = partition_census(sym, n, limits);
  for (int k = 1; k <= n; ++k) {
    if (census.exact(PartitionFamily::kXi, k) > 0) {
      return IndexValue{k, Backend::kOracle, "least k with xi_k > 0"};
    }
  }
  return std::nullopt;
}

IndexValue closed_form_psi(const FamilySpec& spec, int k) {
  spec.Validate();
  const int n = spec.params[0];
  if (spec.kind == FamilyKind::kPath && k == 2) {
    const BigInt phi2 = closed_form_phi(spec, 2, Mode::kExact).value;
    if (n % 2 == 1) return {phi2 / 2, Backend::kClosedForm, "psi_2(P_odd) = phi_2/2"};
    // Partitions whose two colorings are swapped by the reversal: 2^{n/2 - 1}.
    return {(phi2 + Power(2, n / 2 - 1)) / 2, Backend::kClosedForm,
            "psi_2(P_even) = (phi_2 + 2^{n/2-1})/2"};
  }
  if (spec.kind == FamilyKind::kPath && k == n - 1 && n >= 4) {
    return {n * n / 4, Backend::kClosedForm, "psi_{n-1}(P_n) = floor(n^2/4)"};
  }
  if (spec.kind == FamilyKind::kCycle && k == n - 1) {
    const int value = n == 3 ? 0 : (n == 4 ? 1 : n / 2);
    return {value, Backend::kClosedForm, "psi_{n-1}(C_n)"};
  }
  throw NoClosedForm("no closed form for psi_" + std::to_string(k) + " of " + spec.ToString());
}

}  // namespace symbreak
