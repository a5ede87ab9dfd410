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

// Acceptance checks: one PASS/FAIL line per criterion, details indented below.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symbreak/errors.h"
#include "symbreak/family.h"
#include "symbreak/graph6.h"
#include "symbreak/join.h"
#include "symbreak/partition_counts.h"
#include "symbreak/products.h"
#include "symbreak/verify.h"

namespace symbreak {
namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void Fail(const std::string& why) {
    passed = false;
    detail << "    " << why << "\n";
  }
  void Note(const std::string& what) { detail << "    " << what << "\n"; }
};

Graph Make(const std::string& spec) { return make_family(ParseFamilySpec(spec)); }

std::string Str(const BigInt& v) { return ToDecimal(v); }

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void CompareTables(Outcome& out, const std::vector<GoldenTable>& tables, double budget_seconds) {
  const auto errata = LoadErrata(SYMBREAK_TEST_DATA_DIR);
  const auto report = verify_golden_tables(tables, DefaultJobs(), errata);
  std::size_t cells = 0;
  for (const auto& t : report.tables) {
    cells += t.cells;
    if (t.mismatches > 0) {
      out.Fail(t.name + ": " + std::to_string(t.mismatches) + " of " + std::to_string(t.cells) +
               " cells differ");
    }
  }
  for (const auto& m : report.first_mismatches) {
    std::string line = m.table + " n=" + std::to_string(m.n) + " k=" + std::to_string(m.k) +
                       ": printed " + m.expected + ", computed " + m.actual;
    if (m.erratum) line += " [printed value contradicts " + *m.erratum + "]";
    out.Note(line);
  }
  out.Note(std::to_string(cells) + " cells compared in " + std::to_string(report.seconds) + " s");
  if (report.seconds > budget_seconds) {
    out.Fail("runtime " + std::to_string(report.seconds) + " s exceeds " +
             std::to_string(budget_seconds) + " s");
  }
}

std::vector<GoldenTable> Select(const std::vector<GoldenTable>& all, bool coloring_tables) {
  std::vector<GoldenTable> out;
  for (const auto& t : all) {
    const bool is_a = t.index == IndexName::kPhi || t.index == IndexName::kPhiExact;
    if (is_a == coloring_tables) out.push_back(t);
  }
  return out;
}

void Criterion1(Outcome& out) {
  const auto tables = Select(LoadGoldenTables(SYMBREAK_TEST_DATA_DIR), true);
  if (tables.size() != 4) out.Fail("expected 4 coloring-count tables");
  struct Spot {
    const char* spec;
    int k;
    Mode mode;
    const char* expected;
  };
  for (const Spot& s : {Spot{"path:10", 10, Mode::kAtMost, "4999950000"},
                        Spot{"path:10", 10, Mode::kExact, "1814400"},
                        Spot{"path:10", 9, Mode::kAtMost, "1743362676"},
                        Spot{"cycle:10", 9, Mode::kAtMost, "174189024"}}) {
    const auto value = count_phi(Make(s.spec), s.k, s.mode);
    if (Str(value.value) != s.expected) {
      out.Fail(std::string(s.spec) + " k=" + std::to_string(s.k) + ": " + Str(value.value));
    }
  }
  CompareTables(out, tables, 60);
}

void Criterion2(Outcome& out) {
  const auto tables = Select(LoadGoldenTables(SYMBREAK_TEST_DATA_DIR), false);
  if (tables.size() != 12) out.Fail("expected 12 partition-count tables");
  struct Spot {
    const char* spec;
    int k;
    PartitionFamily family;
    Mode mode;
    std::uint64_t expected;
  };
  for (const Spot& s : {Spot{"path:10", 6, PartitionFamily::kPsi, Mode::kAtMost, 55039},
                        Spot{"cycle:10", 5, PartitionFamily::kPi, Mode::kAtMost, 4704},
                        Spot{"cycle:10", 5, PartitionFamily::kXi, Mode::kExact, 1994},
                        Spot{"cycle:10", 6, PartitionFamily::kXi, Mode::kExact, 1044}}) {
    const auto value = count_partition_index(GraphSymmetry(Make(s.spec)), s.k, s.family, s.mode);
    if (value.value != s.expected) {
      out.Fail(std::string(s.spec) + " " + std::string(PartitionFamilyName(s.family)) +
               " k=" + std::to_string(s.k) + ": " + Str(value.value));
    }
  }
  CompareTables(out, tables, 600);
}

void Criterion3(Outcome& out) {
  for (int n = 2; n <= 12; ++n) {
    const BigInt theta = threshold(Make("path:" + std::to_string(n))).value;
    if (theta != (n + 1) / 2 + 1) out.Fail("theta(P_" + std::to_string(n) + ") = " + Str(theta));
  }
  for (int n = 3; n <= 12; ++n) {
    const BigInt theta = threshold(Make("cycle:" + std::to_string(n))).value;
    if (theta != n / 2 + 2) out.Fail("theta(C_" + std::to_string(n) + ") = " + Str(theta));
  }
  for (int n = 5; n <= 7; ++n) {
    const BigInt theta = threshold(Make("kneser:" + std::to_string(n) + ",2")).value;
    if (theta != (n * n - 3 * n + 6) / 2) {
      out.Fail("theta(K(" + std::to_string(n) + ",2)) = " + Str(theta));
    }
    if (n == 5 && theta != 8) out.Fail("Petersen threshold is not 8");
  }
  std::size_t checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graph_catalog(n, true)) {
      ++checked;
      const BigInt formula = threshold(g).value;
      const int direct = threshold_by_definition(g);
      if (formula != direct) {
        out.Fail(g.label() + ": cycle-count formula " + Str(formula) + ", definition " +
                 std::to_string(direct));
      }
    }
  }
  out.Note(std::to_string(checked) + " connected graphs with n <= 6 checked against the definition");
}

void Criterion4(Outcome& out) {
  std::size_t checked = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : graph_catalog(n, false)) {
      const GraphSymmetry sym(g);
      IndexValue value;
      try {
        value = count_phi(sym, n, Mode::kExact, Backend::kMoebius);
      } catch (const SizeBoundExceeded&) {
        value = count_phi(sym, n, Mode::kExact, Backend::kOracle);
      }
      ++checked;
      if (value.value * sym.aut().order() != Factorial(n)) {
        out.Fail(g.label() + ": phi_n = " + Str(value.value) + " with |Aut| = " +
                 std::to_string(sym.aut().order()));
      }
    }
  }
  out.Note(std::to_string(checked) + " graphs (all graphs with n <= 7) checked for phi_n = n!/|Aut|");

  std::vector<Graph> graphs{Make("kneser:5,2")};
  for (int n = 2; n <= 10; ++n) graphs.push_back(Make("path:" + std::to_string(n)));
  for (int n = 3; n <= 10; ++n) graphs.push_back(Make("cycle:" + std::to_string(n)));
  std::size_t cells = 0;
  for (const Graph& g : graphs) {
    const GraphSymmetry sym(g);
    const int theta = static_cast<int>(threshold(sym).value);
    for (int k = theta; k <= g.order() + 1; ++k) {
      const BigInt counted = count_phi(sym, k, Mode::kExact, Backend::kMoebius).value;
      const BigInt expected = Factorial(k) * stirling2(g.order(), k) / sym.aut().order();
      ++cells;
      if (counted != expected) {
        out.Fail(g.label() + " k=" + std::to_string(k) + ": " + Str(counted) + " vs " + Str(expected));
      }
    }
  }
  out.Note(std::to_string(cells) + " (G, k >= theta) pairs checked on paths, cycles and Petersen");
}

void Criterion5(Outcome& out) {
  std::vector<PartitionCensus> censuses;
  for (int n = 1; n <= 10; ++n) {
    censuses.push_back(partition_census(GraphSymmetry(Make("path:" + std::to_string(n))), 10));
  }
  auto at_most = [&](int n, PartitionFamily f, int k) { return censuses[n - 1].at_most(f, k); };
  std::size_t failures = 0;
  for (int n = 2; n <= 10; ++n) {
    const int half = (n + 1) / 2;
    for (int k = 2; k <= 10; ++k) {
      const BigInt left = at_most(n, PartitionFamily::kPsi, k);
      const BigInt right = BigInt(at_most(n, PartitionFamily::kPi, k)) -
                           at_most(half, PartitionFamily::kPi, k) -
                           at_most(half, PartitionFamily::kXi, k);
      if (left != right) {
        ++failures;
        if (failures <= 10) {
          out.Fail("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": Psi = " + Str(left) +
                   ", Pi - Pi(half) - Xi(half) = " + Str(right));
        }
      }
    }
  }
  if (failures > 0) out.Note(std::to_string(failures) + " of 81 (n, k) pairs violate the identity");
}

void Criterion6(Outcome& out) {
  struct LexCase {
    std::string x, y;
    int expected;  // 0 when only the cross-check is required
  };
  std::vector<LexCase> cases{{"cycle:6", "complete:2", 3}, {"path:4", "complete:2", 3},
                             {"path:5", "complete:1", 2},  {"cycle:6", "complete:1", 2}};
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& x : graph_catalog(n, true)) {
      for (const char* y : {"complete:1", "complete:2", "empty:2"}) cases.push_back({x.label(), y, 0});
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& x : graph_catalog(n, true)) {
      for (const char* y : {"path:3", "complete:3", "empty:3"}) cases.push_back({x.label(), y, 0});
    }
  }
  std::size_t natural = 0, skipped = 0;
  for (const auto& c : cases) {
    const Graph x = TryParseFamilySpec(c.x) ? Make(c.x) : parse_graph6(c.x);
    const Graph y = Make(c.y);
    if (x.order() * y.order() > 14) continue;
    try {
      const auto result = d_lexicographic(x, y);
      if (result.used_fallback) continue;
      ++natural;
      if (!result.direct) {
        ++skipped;
      } else if (*result.direct != result.value.value) {
        out.Fail(c.x + "[" + c.y + "]: rule " + Str(result.value.value) + ", direct " +
                 Str(*result.direct));
      }
      if (c.expected != 0 && result.value.value != c.expected) {
        out.Fail(c.x + "[" + c.y + "] = " + Str(result.value.value) + ", expected " +
                 std::to_string(c.expected));
      }
    } catch (const SizeBoundExceeded& e) {
      if (++skipped <= 3) out.Note(c.x + "[" + c.y + "] not checkable: " + e.what());
    }
  }
  out.Note(std::to_string(natural) + " natural products cross-checked; " + std::to_string(skipped) +
           " products (large automorphism groups) had no direct value within size bounds");

  const auto k2k2 = d_lexicographic(Make("complete:2"), Make("complete:2"));
  if (!k2k2.used_fallback || k2k2.value.value != 4) {
    out.Fail("K_2[K_2]: fallback " + std::string(k2k2.used_fallback ? "used" : "not used") +
             ", value " + Str(k2k2.value.value));
  }

  // X-join bound against direct D(Z).
  const Graph k1 = Make("complete:1"), k2 = Make("complete:2"), p3 = Make("path:3");
  std::vector<std::pair<Graph, std::vector<Graph>>> joins;
  joins.push_back({p3, {k1, k1, k2}});
  joins.push_back({Make("path:4"), {k1, k2, k1, k1}});
  joins.push_back({Make("path:4"), {p3, k1, k2, k1}});
  joins.push_back({Make("cycle:5"), {k2, k1, k1, p3, k1}});
  for (const char* base : {"path:3", "path:5", "cycle:4", "cycle:6", "kneser:5,2"}) {
    const Graph x = Make(base);
    joins.push_back({x, std::vector<Graph>(x.order(), k1)});
  }
  for (int n = 3; n <= 10; ++n) {
    const auto s = strictness_instance(n);
    joins.push_back({s.x, s.fibers});
  }
  std::size_t compared = 0;
  std::vector<std::string> strictness;
  bool construction_holds = false;
  for (const auto& [x, fibers] : joins) {
    try {
      const auto result = d_xjoin_upper_bound(x, fibers);
      if (!result.direct) continue;
      ++compared;
      if (*result.direct > result.bound.value) {
        out.Fail(x.label() + " join: bound " + Str(result.bound.value) + " < D(Z) " +
                 Str(*result.direct));
      }
    } catch (const std::domain_error&) {
      // Unnatural joins are outside the bound's hypothesis.
    }
  }
  for (int n = 3; n <= 10; ++n) {
    const auto s = strictness_instance(n);
    const auto result = d_xjoin_upper_bound(s.x, s.fibers);
    strictness.push_back("C_" + std::to_string(n) + ": bound " + Str(result.bound.value) +
                         ", D(Z) " + (result.direct ? Str(*result.direct) : "?"));
    if (result.bound.value == 2 && result.direct && *result.direct == 1) construction_holds = true;
  }
  out.Note(std::to_string(compared) + " X-joins compared with direct D(Z)");
  if (!construction_holds) {
    out.Fail("strictness construction (trees of 7 and 8 vertices on a cycle, K_1 elsewhere) never "
             "gives bound 2 with D(Z) = 1");
    for (const auto& line : strictness) out.Note(line);
  }
}

void Criterion7(Outcome& out) {
  const auto corpus = random_graph_corpus(250, 6, 0x5eed);
  std::size_t pairs = 0, triple = 0;
  for (const Graph& g : corpus) {
    const GraphSymmetry sym(g);
    for (int k = 1; k <= g.order() + 2; ++k) {
      for (Mode mode : {Mode::kAtMost, Mode::kExact}) {
        std::vector<std::pair<Backend, BigInt>> values;
        for (Backend b : {Backend::kOracle, Backend::kMoebius, Backend::kClosedForm}) {
          try {
            values.push_back({b, count_phi(sym, k, mode, b).value});
          } catch (const NoClosedForm&) {
          } catch (const SizeBoundExceeded&) {
          }
        }
        if (values.size() < 2) continue;
        ++pairs;
        triple += values.size() == 3;
        for (std::size_t i = 1; i < values.size(); ++i) {
          if (values[i].second != values[0].second) {
            out.Fail(g.label() + " k=" + std::to_string(k) + ": " +
                     std::string(BackendName(values[0].first)) + " " + Str(values[0].second) +
                     " vs " + std::string(BackendName(values[i].first)) + " " +
                     Str(values[i].second));
          }
        }
      }
    }
  }
  out.Note(std::to_string(corpus.size()) + " random graphs, " + std::to_string(pairs) +
           " (G, k, mode) cases with >= 2 backends, " + std::to_string(triple) + " with all three");
}

}  // namespace
}  // namespace symbreak

int main() {
  using namespace symbreak;
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"golden tables for Phi, phi on paths and cycles", Criterion1},
      {"golden tables for Psi, psi, Pi, pi, Xi, xi on paths and cycles", Criterion2},
      {"threshold formulas and cycle-count rule vs definition", Criterion3},
      {"phi_n = n!/|Aut| and phi_k = k! S(n,k)/|Aut| for k >= theta", Criterion4},
      {"Psi_k(P_n) = Pi_k(P_n) - Pi_k(P_ceil(n/2)) - Xi_k(P_ceil(n/2))", Criterion5},
      {"lexicographic products and X-join bound", Criterion6},
      {"oracle / moebius / closed-form agreement on random graphs", Criterion7},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.Fail(std::string("exception: ") + e.what());
    }
    failed += !out.passed;
    std::cout << (out.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << " (" << Seconds(start) << " s)\n"
              << out.detail.str() << std::flush;
  }
  return failed == 0 ? 0 : 1;
}
