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

#include "symbreak/verify.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "symbreak/errors.h"
#include "symbreak/graph6.h"
#include "symbreak/join.h"
#include "symbreak/products.h"

namespace symbreak {

namespace {

std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

int ToInt(const std::string& text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw ParseError("bad integer '" + text + "' in golden table");
}

// Invariant key used to bucket graphs before isomorphism tests.
std::vector<int> DegreeKey(const Graph& g) {
  std::vector<int> key;
  for (int v = 0; v < g.order(); ++v) key.push_back(g.degree(v));
  std::sort(key.begin(), key.end());
  key.push_back(static_cast<int>(g.size()));
  return key;
}

// Calls visit(labels) for every restricted growth string of length n.
template <typename Visit>
void ForEachRgs(int n, Visit visit) {
  if (n == 0) return;
  std::vector<int> rgs(n, 0), prefix_max(n, 0);
  while (true) {
    visit(rgs);
    int i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) return;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

Graph Petersen() { return make_family(FamilySpec{FamilyKind::kKneser, {5, 2}}); }

Graph Family(FamilyKind kind, std::vector<int> params) {
  return make_family(FamilySpec{kind, std::move(params)});
}

std::string Describe(const Graph& g) {
  return g.label().empty() ? serialize_graph6(g) : g.label();
}

PropertyResult Check(std::string name, const std::function<std::string()>& body) {
  PropertyResult result{std::move(name), false, {}};
  try {
    result.detail = body();
    result.passed = result.detail.empty();
  } catch (const std::exception& e) {
    result.detail = std::string("exception: ") + e.what();
  }
  return result;
}

}  // namespace

GoldenTable LoadGoldenTable(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open golden table " + file.string());
  GoldenTable table;
  table.name = file.stem().string();
  const auto underscore = table.name.find('_');
  if (underscore == std::string::npos) throw ParseError("bad golden table name " + table.name);
  table.index = ParseIndexName(table.name.substr(0, underscore));
  table.family = table.name.substr(underscore + 1);
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      table.caption = line.substr(line.find_first_not_of("# "));
      continue;
    }
    const auto fields = SplitCsv(line);
    if (!header) {
      if (fields.empty() || fields[0] != "n\\k") throw ParseError("missing n\\k header in " + table.name);
      for (std::size_t i = 1; i < fields.size(); ++i) table.ks.push_back(ToInt(fields[i]));
      header = true;
      continue;
    }
    if (fields.size() != table.ks.size() + 1) throw ParseError("ragged row in " + table.name);
    GoldenTable::Row row;
    row.n = ToInt(fields[0]);
    for (std::size_t i = 1; i < fields.size(); ++i) row.values.push_back(ParseDecimal(fields[i]));
    table.rows.push_back(std::move(row));
  }
  if (!header) throw ParseError("empty golden table " + table.name);
  return table;
}

std::vector<GoldenTable> LoadGoldenTables(const std::filesystem::path& dir) {
  std::vector<GoldenTable> out;
  for (const char* index : {"Phi", "phi", "Psi", "psi", "Pi", "pi", "Xi", "xi"}) {
    for (const char* family : {"path", "cycle"}) {
      out.push_back(LoadGoldenTable(dir / (std::string(index) + "_" + family + ".csv")));
    }
  }
  // Group each index's two modes together: Phi, phi on paths, then on cycles.
  std::vector<GoldenTable> ordered;
  for (std::size_t base = 0; base < out.size(); base += 4) {
    ordered.push_back(std::move(out[base]));      // upper, path
    ordered.push_back(std::move(out[base + 2]));  // lower, path
    ordered.push_back(std::move(out[base + 1]));  // upper, cycle
    ordered.push_back(std::move(out[base + 3]));  // lower, cycle
  }
  return ordered;
}

std::vector<Erratum> LoadErrata(const std::filesystem::path& dir) {
  std::vector<Erratum> out;
  std::ifstream in(dir / "errata.csv");
  if (!in) return out;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    const auto fields = SplitCsv(line);
    if (fields.size() != 6) throw ParseError("bad errata row: " + line);
    out.push_back({fields[0], ToInt(fields[1]), ToInt(fields[2]), ParseDecimal(fields[3]),
                   ParseDecimal(fields[4]), fields[5]});
  }
  return out;
}

bool GoldenReport::ok() const {
  return std::all_of(tables.begin(), tables.end(),
                     [](const TableVerdict& t) { return t.cells > 0 && t.mismatches == 0; });
}

GoldenReport verify_golden_tables(const std::vector<GoldenTable>& tables, int jobs,
                               const std::vector<Erratum>& errata) {
  const auto start = std::chrono::steady_clock::now();
  // One unit per (family, n): every table row for that graph shares an evaluator.
  std::map<std::pair<std::string, int>, std::vector<std::pair<std::size_t, std::size_t>>> grouped;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    for (std::size_t r = 0; r < tables[t].rows.size(); ++r) {
      grouped[{tables[t].family, tables[t].rows[r].n}].push_back({t, r});
    }
  }
  std::vector<std::pair<std::pair<std::string, int>, std::vector<std::pair<std::size_t, std::size_t>>>>
      units(grouped.begin(), grouped.end());
  // Largest graphs first to balance the workers.
  std::stable_sort(units.begin(), units.end(),
                   [](const auto& a, const auto& b) { return a.first.second > b.first.second; });

  std::vector<std::vector<std::vector<std::string>>> actual(tables.size());
  for (std::size_t t = 0; t < tables.size(); ++t) {
    actual[t].resize(tables[t].rows.size());
    for (std::size_t r = 0; r < tables[t].rows.size(); ++r) {
      actual[t][r].resize(tables[t].ks.size());
    }
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t u = next++; u < units.size(); u = next++) {
      const auto& [key, cells] = units[u];
      std::optional<IndexEvaluator> evaluator;
      std::string failure;
      try {
        evaluator.emplace(make_family(InstantiateFamily(key.first, key.second)));
      } catch (const std::exception& e) {
        failure = std::string("error: ") + e.what();
      }
      for (const auto& [t, r] : cells) {
        for (std::size_t c = tables[t].ks.size(); c-- > 0;) {
          std::string& out = actual[t][r][c];
          if (!evaluator) {
            out = failure;
            continue;
          }
          try {
            const auto value = evaluator->Evaluate(tables[t].index, tables[t].ks[c], Backend::kAuto);
            out = value ? ToDecimal(value->value) : "none";
          } catch (const std::exception& e) {
            out = std::string("error: ") + e.what();
          }
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (int j = 1; j < std::max(1, jobs); ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  GoldenReport report;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    TableVerdict verdict{tables[t].name, tables[t].caption, 0, 0};
    for (std::size_t r = 0; r < tables[t].rows.size(); ++r) {
      for (std::size_t c = 0; c < tables[t].ks.size(); ++c) {
        ++verdict.cells;
        const std::string expected = ToDecimal(tables[t].rows[r].values[c]);
        if (actual[t][r][c] == expected) continue;
        ++verdict.mismatches;
        CellMismatch mismatch{tables[t].name, tables[t].rows[r].n, tables[t].ks[c], expected,
                              actual[t][r][c], std::nullopt};
        for (const auto& e : errata) {
          if (e.table == mismatch.table && e.n == mismatch.n && e.k == mismatch.k &&
              ToDecimal(e.printed) == expected && ToDecimal(e.recomputed) == mismatch.actual) {
            mismatch.erratum = e.evidence;
          }
        }
        if (mismatch.erratum) {
          ++report.explained_mismatches;
        } else if (!report.first_unexplained) {
          report.first_unexplained = mismatch;
        }
        if (report.first_mismatches.size() < 10) report.first_mismatches.push_back(mismatch);
      }
    }
    report.tables.push_back(std::move(verdict));
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Graph> graph_catalog(int n, bool connected_only) {
  if (n < 0) throw std::invalid_argument("graph_catalog needs n >= 0");
  std::vector<Graph> all{Graph(0, {})};
  for (int order = 1; order <= n; ++order) {
    // Every graph on `order` vertices extends one on order - 1 by a new vertex.
    std::map<std::vector<int>, std::vector<Graph>> buckets;
    std::vector<Graph> next;
    for (const Graph& base : all) {
      const auto base_edges = base.edges();
      for (std::uint32_t mask = 0; mask < (1u << (order - 1)); ++mask) {
        std::vector<Edge> edges = base_edges;
        for (int v = 0; v < order - 1; ++v) {
          if (mask & (1u << v)) edges.push_back({v, order - 1});
        }
        Graph candidate(order, edges);
        auto& bucket = buckets[DegreeKey(candidate)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](const Graph& g) {
          return are_isomorphic(g, candidate);
        });
        if (!seen) {
          bucket.push_back(candidate);
          next.push_back(std::move(candidate));
        }
      }
    }
    all = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& g : all) {
    if (connected_only && !is_connected(g)) continue;
    out.push_back(g.with_label(serialize_graph6(g)));
  }
  return out;
}

std::vector<Graph> random_graph_corpus(std::size_t count, int max_order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, max_order);
  std::bernoulli_distribution edge(0.5);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const int n = order(rng);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (edge(rng)) edges.push_back({u, v});
      }
    }
    Graph g(n, edges);
    out.push_back(g.with_label(serialize_graph6(g)));
  }
  return out;
}

int threshold_by_definition(const Graph& g) {
  const auto aut = automorphism_group(g);
  int most = 0;
  ForEachRgs(g.order(), [&](const std::vector<int>& labels) {
    const int cells = *std::max_element(labels.begin(), labels.end()) + 1;
    if (cells <= most) return;
    for (const auto& p : aut.elements()) {
      if (p.is_identity()) continue;
      bool fixes = true;
      for (int v = 0; v < g.order() && fixes; ++v) fixes = labels[p[v]] == labels[v];
      if (fixes) {
        most = cells;
        return;
      }
    }
  });
  return most + 1;
}

std::vector<PropertyResult> verify_properties() {
  std::vector<PropertyResult> results;

  results.push_back(Check("threshold formula matches definition (connected, n <= 6)", [] {
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : graph_catalog(n, true)) {
        const BigInt formula = threshold(g).value;
        const int direct = threshold_by_definition(g);
        if (formula != direct) {
          return Describe(g) + ": formula " + formula.str() + ", definition " +
                 std::to_string(direct);
        }
      }
    }
    return std::string();
  }));

  results.push_back(Check("phi_n = n!/|Aut| by oracle (all graphs, n <= 6)", [] {
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& g : graph_catalog(n, false)) {
        const GraphSymmetry sym(g);
        const BigInt oracle = count_phi(sym, n, Mode::kExact, Backend::kOracle).value;
        if (oracle * sym.aut().order() != Factorial(n)) {
          return Describe(g) + ": phi_n = " + oracle.str();
        }
      }
    }
    return std::string();
  }));

  results.push_back(Check("phi_k = k! S(n,k)/|Aut| for k >= theta (paths, cycles, Petersen)", [] {
    std::vector<Graph> graphs{Petersen()};
    for (int n = 2; n <= 9; ++n) graphs.push_back(Family(FamilyKind::kPath, {n}));
    for (int n = 3; n <= 9; ++n) graphs.push_back(Family(FamilyKind::kCycle, {n}));
    for (const Graph& g : graphs) {
      const GraphSymmetry sym(g);
      const int theta = static_cast<int>(threshold(sym).value);
      for (int k = theta; k <= g.order(); ++k) {
        const BigInt counted = count_phi(sym, k, Mode::kExact, Backend::kMoebius).value;
        const BigInt expected = Factorial(k) * stirling2(g.order(), k) / sym.aut().order();
        if (counted != expected) {
          return Describe(g) + " k=" + std::to_string(k) + ": " + counted.str() + " vs " +
                 expected.str();
        }
      }
    }
    return std::string();
  }));

  results.push_back(Check("oracle, moebius and closed-form backends agree (200 random graphs)", [] {
    std::size_t compared = 0;
    for (const Graph& g : random_graph_corpus(200, 6, 20261019)) {
      const GraphSymmetry sym(g);
      for (int k = 1; k <= g.order() + 1; ++k) {
        for (Mode mode : {Mode::kAtMost, Mode::kExact}) {
          std::vector<std::pair<Backend, BigInt>> values;
          for (Backend b : {Backend::kOracle, Backend::kMoebius, Backend::kClosedForm}) {
            try {
              values.push_back({b, count_phi(sym, k, mode, b).value});
            } catch (const NoClosedForm&) {
            } catch (const SizeBoundExceeded&) {
            }
          }
          for (std::size_t i = 1; i < values.size(); ++i) {
            if (values[i].second != values[0].second) {
              return Describe(g) + " k=" + std::to_string(k) + ": " +
                     std::string(BackendName(values[0].first)) + "=" + values[0].second.str() +
                     ", " + std::string(BackendName(values[i].first)) + "=" +
                     values[i].second.str();
            }
          }
          if (values.size() >= 2) ++compared;
        }
      }
    }
    return compared > 0 ? std::string() : std::string("no comparisons made");
  }));

  results.push_back(Check("partition orbit sizes sum to Bell numbers (n <= 7)", [] {
    for (const Graph& g : random_graph_corpus(40, 7, 7)) {
      const GraphSymmetry sym(g);
      BigInt total = 0;
      for_each_partition_class(sym, g.order(),
                               [&](const PartitionClass& c) { total += c.orbit_size; });
      BigInt bell = 0;
      for (int j = 0; j <= g.order(); ++j) bell += stirling2(g.order(), j);
      if (total != bell) return Describe(g) + ": " + total.str() + " vs Bell " + bell.str();
    }
    return std::string();
  }));

  results.push_back(Check("graph6 round trip (all graphs, n <= 5)", [] {
    for (int n = 0; n <= 5; ++n) {
      for (const Graph& g : graph_catalog(n, false)) {
        const std::string word = serialize_graph6(g);
        if (!(parse_graph6(word) == g) || serialize_graph6(parse_graph6(word)) != word) {
          return "round trip failed for " + word;
        }
      }
    }
    return std::string();
  }));

  results.push_back(Check("natural count for constant fibers is |Aut X| |Aut Y|^|X|", [] {
    const std::vector<Graph> bases{Family(FamilyKind::kPath, {3}), Family(FamilyKind::kCycle, {5}),
                                   Family(FamilyKind::kComplete, {3})};
    const std::vector<Graph> fibers{Family(FamilyKind::kComplete, {1}),
                                    Family(FamilyKind::kEmpty, {2}), Family(FamilyKind::kPath, {3})};
    for (const Graph& x : bases) {
      for (const Graph& y : fibers) {
        const std::vector<Graph> ys(x.order(), y);
        const auto analysis = naturality_check(lexicographic_product(x, y), x, ys);
        const BigInt expected =
            automorphism_group_order(x) * Power(static_cast<int64_t>(automorphism_group_order(y)),
                                                x.order());
        if (analysis.natural_count != expected) {
          return Describe(x) + "[" + Describe(y) + "]: " + analysis.natural_count.str();
        }
      }
    }
    return std::string();
  }));

  results.push_back(Check("lexicographic rule matches direct D on natural products <= 14 vertices", [] {
    const std::vector<Graph> xs{Family(FamilyKind::kPath, {3}), Family(FamilyKind::kPath, {4}),
                                Family(FamilyKind::kPath, {5}), Family(FamilyKind::kCycle, {5}),
                                Family(FamilyKind::kCycle, {6}), Family(FamilyKind::kCycle, {7})};
    const std::vector<Graph> ys{Family(FamilyKind::kComplete, {1}), Family(FamilyKind::kComplete, {2}),
                                Family(FamilyKind::kEmpty, {2})};
    for (const Graph& x : xs) {
      for (const Graph& y : ys) {
        if (x.order() * y.order() > 14) continue;
        const auto result = d_lexicographic(x, y);
        if (result.direct && *result.direct != result.value.value) {
          return Describe(x) + "[" + Describe(y) + "]: rule " + result.value.value.str() +
                 ", direct " + result.direct->str();
        }
      }
    }
    return std::string();
  }));

  results.push_back(Check("X-join bound is never below direct D(Z)", [] {
    const Graph k1 = Family(FamilyKind::kComplete, {1});
    const Graph k2 = Family(FamilyKind::kComplete, {2});
    std::vector<std::pair<Graph, std::vector<Graph>>> cases;
    cases.push_back({Family(FamilyKind::kPath, {3}), {k1, k1, k2}});
    cases.push_back({Family(FamilyKind::kPath, {4}), {k1, k2, k1, k1}});
    cases.push_back({Family(FamilyKind::kCycle, {5}), std::vector<Graph>(5, k1)});
    cases.push_back({Family(FamilyKind::kCycle, {6}), {k2, k1, k2, k1, k1, k1}});
    for (int n = 3; n <= 6; ++n) {
      auto instance = strictness_instance(n);
      cases.push_back({instance.x, instance.fibers});
    }
    for (const auto& [x, fibers] : cases) {
      const auto result = d_xjoin_upper_bound(x, fibers);
      if (result.direct && *result.direct > result.bound.value) {
        return Describe(x) + ": bound " + result.bound.value.str() + " < D(Z) " +
               result.direct->str();
      }
    }
    return std::string();
  }));

  return results;
}

}  // namespace symbreak
