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

#ifndef SYMBREAK_TABLE_H_
#define SYMBREAK_TABLE_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symbreak/coloring_counts.h"
#include "symbreak/partition_counts.h"

namespace symbreak {

// Lowercase names count with exactly k colors/cells, capitalized ones with at most k.
enum class IndexName { kPhi, kPhiExact, kPsi, kPsiExact, kPi, kPiExact, kXi, kXiExact, kD, kTheta, kDP };

std::string_view IndexNameString(IndexName index);
IndexName ParseIndexName(std::string_view text);  // throws ParseError
bool IsKIndexed(IndexName index);
IndexName WithExactMode(IndexName index);  // Phi -> phi, etc.

// Evaluates indices of one graph, sharing the automorphism group and the
// partition census between queries. Not thread-safe.
class IndexEvaluator {
 public:
  explicit IndexEvaluator(Graph g, const CountOptions& counts = {},
                          const PartitionLimits& partitions = {});

  const GraphSymmetry& symmetry() const { return sym_; }

  // nullopt only for DP on a graph with no distinguishing partition.
  // Throws NoClosedForm, SizeBoundExceeded, ParseError (bad k or backend).
  std::optional<IndexValue> Evaluate(IndexName index, std::optional<int> k,
                                     Backend backend = Backend::kAuto);

 private:
  const PartitionCensus& Census(int max_cells);

  GraphSymmetry sym_;
  CountOptions counts_;
  PartitionLimits partitions_;
  std::unique_ptr<PartitionCensus> census_;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// "a..b" or a single integer.
IntRange ParseRange(std::string_view text);

enum class TableFormat { kCsv, kJson, kMarkdown };
TableFormat ParseTableFormat(std::string_view text);

struct TableRequest {
  IndexName index = IndexName::kPhi;
  // Family name with the ranged parameter written as "n", e.g. "path" or "kneser:n,2".
  std::string family;
  IntRange n;
  std::optional<IntRange> k;
  Backend backend = Backend::kAuto;
  int jobs = 1;
  CountOptions counts;
  PartitionLimits partitions;
};

struct TableCell {
  int k = 0;  // 0 for indices without k
  std::optional<IndexValue> value;
  std::string note;  // set when value is missing
};

struct TableRow {
  int n = 0;
  std::vector<TableCell> cells;
};

struct CountTable {
  IndexName index = IndexName::kPhi;
  std::string family;
  std::vector<int> ks;  // empty for indices without k
  std::vector<TableRow> rows;
};

FamilySpec InstantiateFamily(std::string_view pattern, int n);  // throws ParseError

// Rows are computed concurrently up to request.jobs; output order is fixed.
CountTable compute_table(const TableRequest& request);

std::string CellText(const TableCell& cell);
std::string FormatTable(const CountTable& table, TableFormat format);

// SYMBREAK_JOBS when set and positive, otherwise the hardware concurrency.
int DefaultJobs();

}  // namespace symbreak

#endif  // SYMBREAK_TABLE_H_
