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

#include "symbreak/table.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>
#include "symbreak/errors.h"

namespace symbreak {

namespace {

constexpr std::array<std::string_view, 11> kIndexNames = {
    "Phi", "phi", "Psi", "psi", "Pi", "pi", "Xi", "xi", "D", "theta", "DP"};

std::optional<PartitionFamily> PartitionFamilyOf(IndexName index) {
  switch (index) {
    case IndexName::kPi:
    case IndexName::kPiExact:
      return PartitionFamily::kPi;
    case IndexName::kPsi:
    case IndexName::kPsiExact:
      return PartitionFamily::kPsi;
    case IndexName::kXi:
    case IndexName::kXiExact:
      return PartitionFamily::kXi;
    default:
      return std::nullopt;
  }
}

bool IsExact(IndexName index) {
  return index == IndexName::kPhiExact || index == IndexName::kPsiExact ||
         index == IndexName::kPiExact || index == IndexName::kXiExact;
}

int ParseInt(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string_view IndexNameString(IndexName index) { return kIndexNames[static_cast<int>(index)]; }

IndexName ParseIndexName(std::string_view text) {
  for (std::size_t i = 0; i < kIndexNames.size(); ++i) {
    if (kIndexNames[i] == text) return static_cast<IndexName>(i);
  }
  throw ParseError("unknown index '" + std::string(text) +
                   "' (expected Phi, phi, Psi, psi, Pi, pi, Xi, xi, D, theta or DP)");
}

bool IsKIndexed(IndexName index) {
  return index != IndexName::kD && index != IndexName::kTheta && index != IndexName::kDP;
}

IndexName WithExactMode(IndexName index) {
  switch (index) {
    case IndexName::kPhi:
      return IndexName::kPhiExact;
    case IndexName::kPsi:
      return IndexName::kPsiExact;
    case IndexName::kPi:
      return IndexName::kPiExact;
    case IndexName::kXi:
      return IndexName::kXiExact;
    default:
      return index;
  }
}

IndexEvaluator::IndexEvaluator(Graph g, const CountOptions& counts,
                               const PartitionLimits& partitions)
    : sym_(std::move(g), counts.search), counts_(counts), partitions_(partitions) {}

const PartitionCensus& IndexEvaluator::Census(int max_cells) {
  const int needed = std::min(max_cells, sym_.graph().order());
  if (!census_ || census_->max_cells() < needed) {
    census_ = std::make_unique<PartitionCensus>(partition_census(sym_, needed, partitions_));
  }
  return *census_;
}

std::optional<IndexValue> IndexEvaluator::Evaluate(IndexName index, std::optional<int> k,
                                                   Backend backend) {
  if (IsKIndexed(index)) {
    if (!k) throw ParseError(std::string(IndexNameString(index)) + " needs --k");
    if (*k < 1) throw ParseError("k must be at least 1");
  }
  const Mode mode = IsExact(index) ? Mode::kExact : Mode::kAtMost;
  switch (index) {
    case IndexName::kPhi:
    case IndexName::kPhiExact:
      return count_phi(sym_, *k, mode, backend, counts_);
    case IndexName::kD:
      return distinguishing_number(sym_, counts_);
    case IndexName::kTheta:
      return threshold(sym_);
    case IndexName::kDP: {
      const int n = sym_.graph().order();
      const auto& census = Census(n);
      for (int j = 1; j <= n; ++j) {
        if (census.exact(PartitionFamily::kXi, j) > 0) {
          return IndexValue{j, Backend::kOracle, "least k with xi_k > 0"};
        }
      }
      return std::nullopt;
    }
    default:
      break;
  }

  const PartitionFamily family = *PartitionFamilyOf(index);
  const bool closed_applies = index == IndexName::kPsiExact && sym_.family().has_value();
  if (backend == Backend::kMoebius) {
    throw ParseError("the moebius backend applies to Phi and phi only");
  }
  if (backend == Backend::kClosedForm) {
    if (!closed_applies) {
      throw NoClosedForm("no closed form for " + std::string(IndexNameString(index)));
    }
    return closed_form_psi(*sym_.family(), *k);
  }
  try {
    const auto& census = Census(std::max(*k, 1));
    const std::uint64_t value =
        mode == Mode::kExact ? census.exact(family, *k) : census.at_most(family, *k);
    return IndexValue{value, Backend::kOracle, "orbit enumeration"};
  } catch (const SizeBoundExceeded&) {
    if (backend == Backend::kAuto && closed_applies) {
      try {
        return closed_form_psi(*sym_.family(), *k);
      } catch (const NoClosedForm&) {
      }
    }
    throw;
  }
}

IntRange ParseRange(std::string_view text) {
  const auto dots = text.find("..");
  IntRange range;
  if (dots == std::string_view::npos) {
    range.lo = range.hi = ParseInt(text);
  } else {
    range.lo = ParseInt(text.substr(0, dots));
    range.hi = ParseInt(text.substr(dots + 2));
  }
  if (range.lo > range.hi) throw ParseError("empty range '" + std::string(text) + "'");
  return range;
}

TableFormat ParseTableFormat(std::string_view text) {
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  if (text == "markdown" || text == "md") return TableFormat::kMarkdown;
  throw ParseError("unknown format '" + std::string(text) + "' (expected csv, json or markdown)");
}

FamilySpec InstantiateFamily(std::string_view pattern, int n) {
  std::string text(pattern);
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    text += ":" + std::to_string(n);
  } else {
    std::string params = text.substr(colon + 1);
    std::string out;
    std::size_t start = 0;
    int placeholders = 0;
    while (start <= params.size()) {
      auto comma = params.find(',', start);
      if (comma == std::string::npos) comma = params.size();
      std::string item = params.substr(start, comma - start);
      if (item == "n") {
        item = std::to_string(n);
        ++placeholders;
      }
      if (!out.empty()) out += ",";
      out += item;
      start = comma + 1;
    }
    if (placeholders != 1) {
      throw ParseError("family pattern '" + std::string(pattern) + "' needs exactly one 'n'");
    }
    text = text.substr(0, colon + 1) + out;
  }
  return ParseFamilySpec(text);
}

CountTable compute_table(const TableRequest& request) {
  CountTable table;
  table.index = request.index;
  table.family = request.family;
  if (IsKIndexed(request.index)) {
    if (!request.k) throw ParseError(std::string(IndexNameString(request.index)) + " needs --k");
    for (int k = request.k->lo; k <= request.k->hi; ++k) table.ks.push_back(k);
  }
  std::vector<FamilySpec> specs;
  for (int n = request.n.lo; n <= request.n.hi; ++n) {
    specs.push_back(InstantiateFamily(request.family, n));
    table.rows.push_back({n, {}});
  }

  std::vector<std::exception_ptr> errors(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < specs.size(); r = next++) {
      try {
        IndexEvaluator evaluator(make_family(specs[r]), request.counts, request.partitions);
        auto& cells = table.rows[r].cells;
        if (table.ks.empty()) {
          TableCell cell;
          cell.value = evaluator.Evaluate(request.index, std::nullopt, request.backend);
          if (!cell.value) cell.note = "none";
          cells.push_back(std::move(cell));
          continue;
        }
        cells.resize(table.ks.size());
        // Largest k first so one partition census serves the whole row.
        for (std::size_t c = table.ks.size(); c-- > 0;) {
          cells[c].k = table.ks[c];
          try {
            cells[c].value = evaluator.Evaluate(request.index, table.ks[c], request.backend);
          } catch (const NoClosedForm&) {
            cells[c].note = "n/a";
          }
        }
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(request.jobs, static_cast<int>(specs.size())));
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return table;
}

std::string CellText(const TableCell& cell) {
  return cell.value ? ToDecimal(cell.value->value) : cell.note;
}

std::string FormatTable(const CountTable& table, TableFormat format) {
  const std::string index(IndexNameString(table.index));
  std::ostringstream out;
  switch (format) {
    case TableFormat::kCsv: {
      if (table.ks.empty()) {
        out << "n," << index << "\n";
      } else {
        out << "n\\k";
        for (int k : table.ks) out << "," << k;
        out << "\n";
      }
      for (const auto& row : table.rows) {
        out << row.n;
        for (const auto& cell : row.cells) out << "," << CellText(cell);
        out << "\n";
      }
      break;
    }
    case TableFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["index"] = index;
      doc["family"] = table.family;
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : table.rows) {
        nlohmann::ordered_json entry;
        entry["n"] = row.n;
        if (table.ks.empty()) {
          entry["value"] = CellText(row.cells.front());
        } else {
          nlohmann::ordered_json values = nlohmann::ordered_json::object();
          for (const auto& cell : row.cells) values[std::to_string(cell.k)] = CellText(cell);
          entry["values"] = std::move(values);
        }
        doc["rows"].push_back(std::move(entry));
      }
      out << doc.dump(2) << "\n";
      break;
    }
    case TableFormat::kMarkdown: {
      if (table.ks.empty()) {
        out << "| n | " << index << " |\n|---|---|\n";
      } else {
        out << "| n\\k |";
        for (int k : table.ks) out << " " << k << " |";
        out << "\n|---|";
        for (std::size_t i = 0; i < table.ks.size(); ++i) out << "---|";
        out << "\n";
      }
      for (const auto& row : table.rows) {
        out << "| " << row.n << " |";
        for (const auto& cell : row.cells) out << " " << CellText(cell) << " |";
        out << "\n";
      }
      break;
    }
  }
  return out.str();
}

int DefaultJobs() {
  if (const char* env = std::getenv("SYMBREAK_JOBS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace symbreak
