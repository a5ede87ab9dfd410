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

#include "symbreak/family.h"

#include <algorithm>
#include <charconv>

#include "symbreak/errors.h"

namespace symbreak {

namespace {

struct KindInfo {
  FamilyKind kind;
  std::string_view name;
  std::size_t arity;
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::kPath, "path", 1},         {FamilyKind::kCycle, "cycle", 1},
    {FamilyKind::kComplete, "complete", 1}, {FamilyKind::kBiclique, "biclique", 2},
    {FamilyKind::kEmpty, "empty", 1},       {FamilyKind::kKneser, "kneser", 2},
};

const KindInfo& Info(FamilyKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info;
  }
  throw std::logic_error("unknown family kind");
}

int ParseInt(std::string_view text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("bad integer '" + std::string(text) + "' in family spec");
  }
  return value;
}

}  // namespace

std::string_view FamilyName(FamilyKind kind) { return Info(kind).name; }

void FamilySpec::Validate() const {
  const auto& info = Info(kind);
  if (params.size() != info.arity) {
    throw ParseError(std::string(info.name) + " takes " + std::to_string(info.arity) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
  for (int p : params) {
    if (p < 0) throw ParseError("negative family parameter");
  }
  switch (kind) {
    case FamilyKind::kPath:
      if (params[0] < 1) throw ParseError("path requires n >= 1");
      break;
    case FamilyKind::kCycle:
      if (params[0] < 3) throw ParseError("cycle requires n >= 3");
      break;
    case FamilyKind::kKneser:
      if (2 * params[1] > params[0]) throw ParseError("kneser:n,k requires 0 <= k <= n/2");
      break;
    default:
      break;
  }
}

std::string FamilySpec::ToString() const {
  std::string out(FamilyName(kind));
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

FamilySpec ParseFamilySpec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("family spec must look like kind:p1[,p2], got '" + std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  FamilySpec spec;
  bool found = false;
  for (const auto& info : kKinds) {
    if (info.name == name) {
      spec.kind = info.kind;
      found = true;
    }
  }
  if (!found) throw ParseError("unknown graph family '" + std::string(name) + "'");
  auto rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    spec.params.push_back(ParseInt(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  spec.Validate();
  return spec;
}

std::optional<FamilySpec> TryParseFamilySpec(std::string_view text) {
  try {
    return ParseFamilySpec(text);
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::vector<std::vector<int>> ColexSubsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  while (true) {
    out.push_back(subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  // A precedes B in colex order iff max(A xor B) lies in B.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

Graph make_family(const FamilySpec& spec) {
  spec.Validate();
  std::vector<Edge> edges;
  int order = 0;
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath:
      order = p[0];
      for (int v = 0; v + 1 < order; ++v) edges.emplace_back(v, v + 1);
      break;
    case FamilyKind::kCycle:
      order = p[0];
      for (int v = 0; v < order; ++v) edges.emplace_back(v, (v + 1) % order);
      break;
    case FamilyKind::kComplete:
      order = p[0];
      for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v) edges.emplace_back(u, v);
      }
      break;
    case FamilyKind::kEmpty:
      order = p[0];
      break;
    case FamilyKind::kBiclique:
      order = p[0] + p[1];
      for (int u = 0; u < p[0]; ++u) {
        for (int v = p[0]; v < order; ++v) edges.emplace_back(u, v);
      }
      break;
    case FamilyKind::kKneser: {
      const auto subsets = ColexSubsets(p[0], p[1]);
      order = static_cast<int>(subsets.size());
      for (int u = 0; u < order; ++u) {
        for (int v = u + 1; v < order; ++v) {
          std::vector<int> common;
          std::set_intersection(subsets[u].begin(), subsets[u].end(), subsets[v].begin(),
                                subsets[v].end(), std::back_inserter(common));
          if (common.empty()) edges.emplace_back(u, v);
        }
      }
      break;
    }
  }
  return Graph(order, edges, spec.ToString());
}

}  // namespace symbreak
