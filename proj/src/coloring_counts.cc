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

#include "symbreak/coloring_counts.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "symbreak/errors.h"
#include "symbreak/group_action.h"

namespace symbreak {

namespace {

// Non-identity elements as lists of (v, p(v)) with v moved, fewest moved
// points first: small-support elements are the likeliest to preserve a
// coloring, so checking them first ends most rejections early.
std::vector<std::vector<std::pair<int, int>>> MovedPoints(const PermutationGroup& aut) {
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& p : aut.elements()) {
    if (p.is_identity()) continue;
    auto& moved = out.emplace_back();
    for (int v = 0; v < p.degree(); ++v) {
      if (p[v] != v) moved.emplace_back(v, p[v]);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

// k^n if it does not exceed `limit`.
std::optional<std::uint64_t> BoundedPower(int k, int n, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (result > limit / static_cast<std::uint64_t>(std::max(k, 1))) return std::nullopt;
    result *= static_cast<std::uint64_t>(k);
  }
  return result <= limit ? std::optional(result) : std::nullopt;
}

void RequireOracleSize(int k, int n, std::uint64_t limit) {
  if (!BoundedPower(k, n, limit)) {
    throw SizeBoundExceeded("oracle bound exceeded: k^n = " + std::to_string(k) + "^" +
                            std::to_string(n) + " > oracle_limit=" + std::to_string(limit));
  }
}

// Visits every coloring in {0..k-1}^n (exact: only surjective ones) that no
// non-identity automorphism preserves. `visit` returns false to stop early.
template <typename Visit>
void EnumerateDistinguishing(const GraphSymmetry& sym, int k, Mode mode, Visit visit) {
  const int n = sym.graph().order();
  const auto moved = MovedPoints(sym.aut());
  std::vector<int> colors(n, 0);
  std::vector<int> usage(k, 0);
  if (n > 0) usage[0] = n;
  int used = n > 0 ? 1 : 0;
  while (true) {
    if (mode == Mode::kAtMost || used == k) {
      bool distinguishing = true;
      for (const auto& element : moved) {
        bool preserved = true;
        for (const auto& [v, w] : element) {
          if (colors[v] != colors[w]) {
            preserved = false;
            break;
          }
        }
        if (preserved) {
          distinguishing = false;
          break;
        }
      }
      if (distinguishing && !visit(colors)) return;
    }
    // Advance the base-k counter.
    int pos = 0;
    while (pos < n) {
      const int old = colors[pos];
      if (--usage[old] == 0) --used;
      const int next = old + 1 == k ? 0 : old + 1;
      colors[pos] = next;
      if (usage[next]++ == 0) ++used;
      if (next != 0) break;
      ++pos;
    }
    if (pos == n) return;
  }
}

BigInt DivideExactly(const BigInt& numerator, std::size_t group_order, const char* what) {
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(numerator, BigInt(group_order), quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error(std::string(what) + ": count " + numerator.str() +
                           " is not divisible by |Aut| = " + std::to_string(group_order));
  }
  return quotient;
}

IndexValue OracleCount(const GraphSymmetry& sym, int k, Mode mode, const CountOptions& options) {
  RequireOracleSize(k, sym.graph().order(), options.oracle_limit);
  BigInt count = 0;
  EnumerateDistinguishing(sym, k, mode, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return {DivideExactly(count, sym.aut().order(), "oracle"), Backend::kOracle, "enumeration"};
}

BigInt MoebiusAtMost(const SubgroupLattice& lattice, int k) {
  // g(H) = #colorings whose stabilizer is exactly H, from
  // k^{orbits(H)} = sum_{K >= H} g(K), solved from the top of the lattice.
  std::vector<BigInt> exact_stabilizer(lattice.size());
  for (std::size_t h = lattice.size(); h-- > 0;) {
    BigInt value = Power(k, lattice.orbit_count(h));
    for (auto up : lattice.strict_supergroups(h)) value -= exact_stabilizer[up];
    exact_stabilizer[h] = std::move(value);
  }
  return DivideExactly(exact_stabilizer[lattice.trivial()], lattice.group().order(), "moebius");
}

IndexValue MoebiusCount(const GraphSymmetry& sym, int k, Mode mode, const CountOptions& options) {
  const auto& lattice = sym.lattice(options.lattice);
  if (mode == Mode::kAtMost) {
    return {MoebiusAtMost(lattice, k), Backend::kMoebius, "subgroup-lattice inversion"};
  }
  // phi_k = sum_i (-1)^{k-i} C(k,i) Phi_i, with Phi_0 = [n == 0].
  BigInt value = 0;
  for (int i = 0; i <= k; ++i) {
    const BigInt at_most = i == 0 ? BigInt(sym.graph().order() == 0 ? 1 : 0)
                                  : MoebiusAtMost(lattice, i);
    const BigInt term = Binomial(k, i) * at_most;
    if ((k - i) % 2 == 0) {
      value += term;
    } else {
      value -= term;
    }
  }
  return {value, Backend::kMoebius, "subgroup-lattice inversion + binomial inversion"};
}

// Phi_k(P_n) = C(k,2) k^{n-2} + k Phi_k(P_{n-2}), Phi_k(P_2) = C(k,2),
// Phi_k(P_3) = k C(k,2); Phi_k(P_1) = k.
BigInt PathAtMost(int n, int k) {
  if (n == 1) return k;
  if (n == 2) return Binomial(k, 2);
  if (n == 3) return k * Binomial(k, 2);
  return Binomial(k, 2) * Power(k, n - 2) + k * PathAtMost(n - 2, k);
}

BigInt PathExact(int n, int k, std::map<std::pair<int, int>, BigInt>& memo) {
  if (k < 1) return 0;
  if (auto it = memo.find({n, k}); it != memo.end()) return it->second;
  BigInt value = 0;
  if (n <= 3) {
    for (int i = 1; i <= k; ++i) {
      const BigInt term = Binomial(k, i) * PathAtMost(n, i);
      if ((k - i) % 2 == 0) {
        value += term;
      } else {
        value -= term;
      }
    }
  } else {
    value = k * (PathExact(n - 2, k, memo) + PathExact(n - 2, k - 1, memo)) +
            Binomial(k, 2) * (Factorial(k - 2) * stirling2(n - 2, k - 2) +
                              2 * Factorial(k - 1) * stirling2(n - 2, k - 1) +
                              Factorial(k) * stirling2(n - 2, k));
  }
  memo.emplace(std::make_pair(n, k), value);
  return value;
}

std::optional<IndexValue> FamilyClosedForm(const FamilySpec& spec, int k, Mode mode) {
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath: {
      if (mode == Mode::kAtMost) {
        return IndexValue{PathAtMost(p[0], k), Backend::kClosedForm, "path recursion (Phi)"};
      }
      std::map<std::pair<int, int>, BigInt> memo;
      return IndexValue{PathExact(p[0], k, memo), Backend::kClosedForm, "path recursion (phi)"};
    }
    case FamilyKind::kComplete:
    case FamilyKind::kEmpty: {
      // Aut is the full symmetric group: colors must be pairwise distinct.
      const int n = p[0];
      const BigInt value =
          mode == Mode::kAtMost ? Binomial(k, n) : BigInt(k == n ? 1 : 0);
      return IndexValue{value, Backend::kClosedForm, "symmetric group: C(k,n)"};
    }
    case FamilyKind::kBiclique: {
      const int m = p[0];
      if (m != p[1] || m < 2) return std::nullopt;
      if (mode == Mode::kAtMost) {
        const BigInt c = Binomial(k, m);
        return IndexValue{c * (c - 1) / 2, Backend::kClosedForm, "K_{m,m}"};
      }
      const BigInt value =
          (k >= m + 1 && k <= 2 * m) ? Binomial(k, m) * Binomial(m, k - m) / 2 : BigInt(0);
      return IndexValue{value, Backend::kClosedForm, "K_{m,m}"};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::string_view BackendName(Backend backend) {
  switch (backend) {
    case Backend::kAuto:
      return "auto";
    case Backend::kOracle:
      return "oracle";
    case Backend::kMoebius:
      return "moebius";
    case Backend::kClosedForm:
      return "closed-form";
  }
  return "?";
}

Backend ParseBackend(std::string_view text) {
  if (text == "auto") return Backend::kAuto;
  if (text == "oracle") return Backend::kOracle;
  if (text == "moebius" || text == "mobius") return Backend::kMoebius;
  if (text == "closed" || text == "closed-form") return Backend::kClosedForm;
  throw ParseError("unknown backend '" + std::string(text) + "'");
}

struct GraphSymmetry::LatticeCache {
  std::mutex mutex;
  std::unique_ptr<SubgroupLattice> lattice;
};

GraphSymmetry::GraphSymmetry(Graph g, const SearchLimits& limits)
    : graph_(std::move(g)),
      aut_(automorphism_group(graph_, limits)),
      lattice_(std::make_shared<LatticeCache>()) {
  if (!graph_.label().empty()) family_ = TryParseFamilySpec(graph_.label());
}

const SubgroupLattice& GraphSymmetry::lattice(const LatticeLimits& limits) const {
  std::lock_guard lock(lattice_->mutex);
  if (!lattice_->lattice) {
    lattice_->lattice = std::make_unique<SubgroupLattice>(subgroup_lattice(aut_, limits));
  }
  return *lattice_->lattice;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // Row-by-row S(m, j) = j S(m-1, j) + S(m-1, j-1).
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

bool is_distinguishing(const Graph& g, const Coloring& c, const PermutationGroup& aut) {
  if (c.degree() != g.order() || aut.degree() != g.order()) {
    throw std::invalid_argument("coloring degree does not match the graph");
  }
  for (const auto& p : aut.elements()) {
    if (!p.is_identity() && preserves(p, c)) return false;
  }
  return true;
}

IndexValue distinguishing_number(const GraphSymmetry& sym, const CountOptions& options) {
  const int n = sym.graph().order();
  if (sym.aut().is_trivial()) return {1, Backend::kOracle, "trivial automorphism group"};
  for (int k = 1; k <= n; ++k) {
    if (BoundedPower(k, n, options.oracle_limit)) {
      bool found = false;
      EnumerateDistinguishing(sym, k, Mode::kAtMost, [&](const std::vector<int>&) {
        found = true;
        return false;
      });
      if (found) return {k, Backend::kOracle, "least k with Phi_k > 0"};
      continue;
    }
    auto phi = count_phi(sym, k, Mode::kAtMost, Backend::kAuto, options);
    if (phi.value > 0) return {k, phi.backend, "least k with Phi_k > 0"};
  }
  throw std::logic_error("no distinguishing coloring with n colors");
}

IndexValue distinguishing_number(const Graph& g, const CountOptions& options) {
  return distinguishing_number(GraphSymmetry(g, options.search), options);
}

IndexValue threshold(const GraphSymmetry& sym) {
  if (sym.aut().is_trivial()) {
    return {1, Backend::kClosedForm, "trivial automorphism group"};
  }
  int max_cycles = 0;
  for (const auto& p : sym.aut().elements()) {
    if (!p.is_identity()) max_cycles = std::max(max_cycles, cycle_count(p));
  }
  return {max_cycles + 1, Backend::kClosedForm, "1 + max cycle count of a non-identity automorphism"};
}

IndexValue threshold(const Graph& g) { return threshold(GraphSymmetry(g)); }

IndexValue closed_form_phi(const GraphSymmetry& sym, int k, Mode mode) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (sym.family()) {
    if (auto value = FamilyClosedForm(*sym.family(), k, mode)) return *value;
  }
  const int n = sym.graph().order();
  if (mode == Mode::kExact) {
    const auto order = sym.aut().order();
    if (k > n) return {0, Backend::kClosedForm, "k > n"};
    if (k == n) {
      return {DivideExactly(Factorial(n), order, "k = n"), Backend::kClosedForm, "k = n: n!/|Aut|"};
    }
    if (BigInt(k) >= threshold(sym).value) {
      return {DivideExactly(Factorial(k) * stirling2(n, k), order, "threshold regime"),
              Backend::kClosedForm, "k >= threshold: k! S(n,k)/|Aut|"};
    }
  }
  throw NoClosedForm("no closed form for " +
                     std::string(mode == Mode::kAtMost ? "Phi_" : "phi_") + std::to_string(k) +
                     " of this graph");
}

IndexValue closed_form_phi(const FamilySpec& spec, int k, Mode mode) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (auto value = FamilyClosedForm(spec, k, mode)) return *value;
  return closed_form_phi(GraphSymmetry(make_family(spec)), k, mode);
}

IndexValue count_phi(const GraphSymmetry& sym, int k, Mode mode, Backend backend,
                     const CountOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  switch (backend) {
    case Backend::kOracle:
      return OracleCount(sym, k, mode, options);
    case Backend::kMoebius:
      return MoebiusCount(sym, k, mode, options);
    case Backend::kClosedForm:
      return closed_form_phi(sym, k, mode);
    case Backend::kAuto:
      break;
  }
  if (BoundedPower(k, sym.graph().order(), options.oracle_limit)) {
    return OracleCount(sym, k, mode, options);
  }
  if (sym.aut().order() <= options.lattice.max_group_order) {
    return MoebiusCount(sym, k, mode, options);
  }
  try {
    return closed_form_phi(sym, k, mode);
  } catch (const NoClosedForm&) {
    throw SizeBoundExceeded("no backend applies: k^n > oracle_limit=" +
                            std::to_string(options.oracle_limit) + ", |Aut|=" +
                            std::to_string(sym.aut().order()) + " > max_group_order=" +
                            std::to_string(options.lattice.max_group_order) +
                            ", and no closed form");
  }
}

IndexValue count_phi(const Graph& g, int k, Mode mode, Backend backend,
                     const CountOptions& options) {
  return count_phi(GraphSymmetry(g, options.search), k, mode, backend, options);
}

}  // namespace symbreak
