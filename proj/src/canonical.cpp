// Copyright 2026 The skewen Authors
//
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

#include <algorithm>
#include <stdexcept>

#include "skewen/extremal.hpp"

namespace skewen {

namespace {

std::string tree_code(const Graph& g, const std::vector<char>& on_cycle, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : g.neighbors(v))
    if (w != parent && !on_cycle[static_cast<size_t>(w)]) kids.push_back(tree_code(g, on_cycle, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ')';
  return out;
}

}  // namespace

std::string unicyclic_certificate(const Graph& g) {
  const std::vector<Vertex> cycle = unique_cycle(g);
  std::vector<char> on_cycle(static_cast<size_t>(g.order()), 0);
  for (Vertex c : cycle) on_cycle[static_cast<size_t>(c)] = 1;

  std::vector<std::string> codes;
  codes.reserve(cycle.size());
  for (Vertex c : cycle) codes.push_back(tree_code(g, on_cycle, c, -1));

  // Balanced-parenthesis codes concatenate unambiguously.
  const size_t len = codes.size();
  std::string best;
  for (size_t start = 0; start < len; ++start) {
    for (int dir : {1, -1}) {
      std::string candidate;
      for (size_t i = 0; i < len; ++i) {
        const size_t at = dir > 0 ? (start + i) % len : (start + len - i) % len;
        candidate += codes[at];
      }
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

std::optional<std::string> family_name(const Graph& g) {
  if (!is_unicyclic(g)) return std::nullopt;
  const int n = g.order();
  const int l = *girth(g);
  const std::string key = unicyclic_certificate(g);
  const std::string suffix = std::to_string(n) + "^" + std::to_string(l);
  if (l == n) return "C_" + std::to_string(n);
  if (key == unicyclic_certificate(make_family(FamilyKind::snl, n, l))) return "S_" + suffix;
  if (key == unicyclic_certificate(make_family(FamilyKind::pnl, n, l))) return "P_" + suffix;
  return std::nullopt;
}

}  // namespace skewen
