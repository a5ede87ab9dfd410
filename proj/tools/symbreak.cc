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

// Command-line front end: index, table, product and verify verbs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symbreak/errors.h"
#include "symbreak/family.h"
#include "symbreak/graph6.h"
#include "symbreak/products.h"
#include "symbreak/table.h"
#include "symbreak/verify.h"

namespace {

using namespace symbreak;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

#ifndef SYMBREAK_DATA_DIR
#define SYMBREAK_DATA_DIR "data/golden"
#endif

Graph ResolveGraph(const std::string& text) {
  if (text.size() > 1 && text[0] == '@') {  // a bare "@" is the graph6 word for K_1
    const std::string path = text.substr(1);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read graph file '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return parse_graph6(line).with_label(line);
    }
    throw ParseError("graph file '" + path + "' is empty");
  }
  if (auto spec = TryParseFamilySpec(text)) return make_family(*spec);
  if (text.find(':') != std::string::npos) ParseFamilySpec(text);  // rethrows the family error
  try {
    return parse_graph6(text).with_label(text);
  } catch (const ParseError& e) {
    throw ParseError("'" + text + "' is neither a family spec nor a graph6 word (" + e.what() + ")");
  }
}

void Provenance(const IndexValue& value) {
  std::cerr << "backend=" << BackendName(value.backend) << " rule=\"" << value.rule << "\"\n";
}

struct IndexArgs {
  std::string graph;
  std::string index;
  std::optional<int> k;
  bool exact = false;
  std::string backend = "auto";
};

int RunIndex(const IndexArgs& args) {
  IndexName index = ParseIndexName(args.index);
  if (args.exact) index = WithExactMode(index);
  IndexEvaluator evaluator(ResolveGraph(args.graph));
  const auto value = evaluator.Evaluate(index, args.k, ParseBackend(args.backend));
  if (!value) {
    std::cout << "none\n";
    std::cerr << "no distinguishing partition exists\n";
    return kExitOk;
  }
  std::cout << ToDecimal(value->value) << "\n";
  Provenance(*value);
  return kExitOk;
}

struct TableArgs {
  std::string index;
  std::string family;
  std::string n;
  std::string k;
  bool exact = false;
  std::string format = "csv";
  std::string backend = "auto";
  int jobs = 0;
};

int RunTable(const TableArgs& args) {
  TableRequest request;
  request.index = ParseIndexName(args.index);
  if (args.exact) request.index = WithExactMode(request.index);
  request.family = args.family;
  request.n = ParseRange(args.n);
  if (!args.k.empty()) request.k = ParseRange(args.k);
  request.backend = ParseBackend(args.backend);
  request.jobs = args.jobs > 0 ? args.jobs : DefaultJobs();
  const TableFormat format = ParseTableFormat(args.format);
  const CountTable table = compute_table(request);
  std::cout << FormatTable(table, format);
  std::map<std::string, int> tally;
  for (const auto& row : table.rows) {
    for (const auto& cell : row.cells) {
      if (cell.value) ++tally[std::string(BackendName(cell.value->backend)) + ": " + cell.value->rule];
    }
  }
  for (const auto& [what, count] : tally) std::cerr << count << " cell(s) via " << what << "\n";
  return kExitOk;
}

struct ProductArgs {
  std::string x;
  std::string y;
  std::vector<std::string> fibers;
  bool bound = false;
};

void ReportAnalysis(const JoinAnalysis& analysis) {
  std::cerr << "natural_count=" << analysis.natural_count
            << " full_aut_order=" << analysis.full_aut_order
            << " all_natural=" << (analysis.all_natural ? "true" : "false") << "\n";
}

int RunProduct(const ProductArgs& args) {
  const Graph x = ResolveGraph(args.x);
  if (!args.y.empty()) {
    if (!args.fibers.empty()) throw ParseError("--y and --fiber are mutually exclusive");
    const auto result = d_lexicographic(x, ResolveGraph(args.y));
    std::cout << ToDecimal(result.value.value) << "\n";
    Provenance(result.value);
    ReportAnalysis(result.analysis);
    if (result.used_fallback) std::cerr << "fallback: direct computation on the product\n";
    if (result.direct) std::cerr << "direct D(product)=" << *result.direct << "\n";
    return kExitOk;
  }
  if (args.fibers.empty()) throw ParseError("product needs --y or one --fiber per vertex of X");
  std::vector<Graph> fibers;
  for (const auto& f : args.fibers) fibers.push_back(ResolveGraph(f));
  if (!args.bound) throw ParseError("X-join products need --bound");
  const auto result = d_xjoin_upper_bound(x, fibers);
  std::cout << ToDecimal(result.bound.value) << "\n";
  Provenance(result.bound);
  ReportAnalysis(result.analysis);
  std::cerr << result.terms.size() << " distinguishing coloring(s) of X examined\n";
  if (result.direct) std::cerr << "direct D(Z)=" << *result.direct << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "appendix";
  std::string data = SYMBREAK_DATA_DIR;
  int jobs = 0;
};

int RunVerify(const VerifyArgs& args) {
  if (args.suite == "properties") {
    bool ok = true;
    for (const auto& p : verify_properties()) {
      std::cout << (p.passed ? "PASS " : "FAIL ") << p.name << "\n";
      if (!p.passed) {
        std::cout << "  " << p.detail << "\n";
        ok = false;
      }
    }
    return ok ? kExitOk : kExitMismatch;
  }
  if (args.suite != "appendix") throw ParseError("unknown suite '" + args.suite + "'");
  const auto tables = LoadGoldenTables(args.data);
  const auto report = verify_golden_tables(tables, args.jobs > 0 ? args.jobs : DefaultJobs(),
                                      LoadErrata(args.data));
  int passed = 0;
  for (const auto& t : report.tables) {
    const bool ok = t.mismatches == 0;
    passed += ok;
    std::cout << (ok ? "PASS " : "FAIL ") << t.name << " (" << t.cells << " cells";
    if (!ok) std::cout << ", " << t.mismatches << " mismatched";
    std::cout << ")  " << t.caption << "\n";
  }
  std::cout << passed << "/" << report.tables.size() << " tables match\n";
  for (const auto& m : report.first_mismatches) {
    std::cout << "mismatch " << m.table << " n=" << m.n << " k=" << m.k << ": expected "
              << m.expected << ", got " << m.actual;
    if (m.erratum) std::cout << " (documented erratum: " << *m.erratum << ")";
    std::cout << "\n";
  }
  if (report.explained_mismatches > 0) {
    std::cout << report.explained_mismatches << " mismatch(es) are documented errata\n";
  }
  if (report.first_unexplained) {
    const auto& m = *report.first_unexplained;
    std::cout << "first unexplained mismatch: " << m.table << " n=" << m.n << " k=" << m.k << "\n";
  }
  std::cerr << "runtime " << report.seconds << " s\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinguishing colorings and partitions of small graphs"};
  app.require_subcommand(1);

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Compute one index of one graph");
  index->add_option("graph", index_args.graph, "family spec, graph6 word or @file")->required();
  index->add_option("--index", index_args.index, "Phi phi Psi psi Pi pi Xi xi D theta DP")
      ->required();
  index->add_option("--k", index_args.k, "colors or cells");
  index->add_flag("--exact", index_args.exact, "count with exactly k colors or cells");
  index->add_option("--backend", index_args.backend, "auto oracle moebius closed");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Tabulate an index over a family");
  table->add_option("--index", table_args.index)->required();
  table->add_option("--family", table_args.family, "e.g. path, cycle, kneser:n,2")->required();
  table->add_option("--n", table_args.n, "range a..b")->required();
  table->add_option("--k", table_args.k, "range a..b");
  table->add_flag("--exact", table_args.exact);
  table->add_option("--format", table_args.format, "csv json markdown");
  table->add_option("--backend", table_args.backend);
  table->add_option("--jobs", table_args.jobs, "worker threads (default SYMBREAK_JOBS or cores)");

  ProductArgs product_args;
  auto* product = app.add_subcommand("product", "Lexicographic products and X-joins");
  product->add_option("--x", product_args.x)->required();
  product->add_option("--y", product_args.y, "lexicographic product X[Y]");
  product->add_option("--fiber", product_args.fibers, "one per vertex of X, in order");
  product->add_flag("--bound", product_args.bound, "X-join upper bound");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check golden tables or invariants");
  verify->add_option("--suite", verify_args.suite, "appendix or properties");
  verify->add_option("--data", verify_args.data, "directory of golden CSV tables");
  verify->add_option("--jobs", verify_args.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*index) return RunIndex(index_args);
    if (*table) return RunTable(table_args);
    if (*product) return RunProduct(product_args);
    return RunVerify(verify_args);
  } catch (const std::invalid_argument& e) {  // includes ParseError
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {  // includes NoClosedForm
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeBoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
}
