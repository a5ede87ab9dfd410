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

#ifndef SYMBREAK_VERIFY_H_
#define SYMBREAK_VERIFY_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symbreak/bigint.h"
#include "symbreak/graph.h"
#include "symbreak/table.h"

namespace symbreak {

struct GoldenTable {
  std::string name;     // file stem, e.g. "Psi_path"
  std::string caption;  // from the leading '#' line
  IndexName index = IndexName::kPhi;
  std::string family;  // "path" or "cycle"
  std::vector<int> ks;
  struct Row {
    int n = 0;
    std::vector<BigInt> values;  // parallel to ks
  };
  std::vector<Row> rows;
};

GoldenTable LoadGoldenTable(const std::filesystem::path& file);

// The sixteen golden tables in reporting order: Phi, phi, Psi, psi, Pi, pi, Xi, xi, paths before cycles.
std::vector<GoldenTable> LoadGoldenTables(const std::filesystem::path& dir);

// A printed cell known to contradict another golden table.
struct Erratum {
  std::string table;
  int n = 0;
  int k = 0;
  BigInt printed;
  BigInt recomputed;
  std::string evidence;
};

// Reads errata.csv from the golden directory; a missing file means no errata.
std::vector<Erratum> LoadErrata(const std::filesystem::path& dir);

struct CellMismatch {
  std::string table;
  int n = 0;
  int k = 0;
  std::string expected;
  std::string actual;
  // Set when the cell is a documented erratum and the computed value is the recomputed one.
  std::optional<std::string> erratum;
};

struct TableVerdict {
  std::string name;
  std::string caption;
  std::size_t cells = 0;
  std::size_t mismatches = 0;
};

struct GoldenReport {
  std::vector<TableVerdict> tables;
  std::vector<CellMismatch> first_mismatches;  // at most 10, in table order
  // First mismatch that is not a documented erratum, if any.
  std::optional<CellMismatch> first_unexplained;
  std::size_t explained_mismatches = 0;
  double seconds = 0;
  bool ok() const;
};

// Every cell is recomputed with the auto backend and compared exactly.
// Errata only annotate mismatches; they never turn one into a match.
GoldenReport verify_golden_tables(const std::vector<GoldenTable>& tables, int jobs,
                               const std::vector<Erratum>& errata = {});

struct PropertyResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Cross-module invariants; each entry is independent.
std::vector<PropertyResult> verify_properties();

// All graphs on n vertices up to isomorphism, optionally only connected ones.
std::vector<Graph> graph_catalog(int n, bool connected_only);

// Seeded random graphs; order uniform in [1, max_order], edges with probability 1/2.
std::vector<Graph> random_graph_corpus(std::size_t count, int max_order, std::uint64_t seed);

// Threshold from the definition: one more than the most cells of a partition
// fixed cellwise by a non-identity automorphism.
int threshold_by_definition(const Graph& g);

}  // namespace symbreak

#endif  // SYMBREAK_VERIFY_H_
