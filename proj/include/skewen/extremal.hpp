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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skewen/charpoly.hpp"
#include "skewen/graph.hpp"
#include "skewen/orient.hpp"

namespace skewen {

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

/// Isomorphism certificate of a unicyclic graph: the AHU codes of the trees
/// rooted at each cycle vertex, read around the cycle, minimized over all
/// rotations and both directions. Equal strings iff isomorphic.
/// std::domain_error for non-unicyclic input.
std::string unicyclic_certificate(const Graph& g);

/// "C_n", "S_n^l" or "P_n^l" when g is isomorphic to a named family
/// (preferring that order when names coincide), nullopt otherwise.
std::optional<std::string> family_name(const Graph& g);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

inline constexpr int kMinEnumerationOrder = 3;
inline constexpr int kMaxEnumerationOrder = 12;
inline constexpr int kMaxSearchOrder = 10;

/// Streams connected unicyclic graphs on n vertices (3 <= n <= 12).
///
/// With dedupe, one representative per isomorphism class, in certificate
/// order. Without, every labeled graph once: each labeled tree (by Pruefer
/// index) plus each non-tree edge that is the largest edge on the cycle it
/// closes. The visitor returns false to stop early.
void for_each_unicyclic(int n, bool dedupe, const std::function<bool(const Graph&)>& visit);

/// Collects for_each_unicyclic() into a vector.
std::vector<Graph> enumerate_unicyclic(int n, bool dedupe);

/// Tree with the given Pruefer sequence (entries in [0, n), length n-2).
Graph tree_from_pruefer(int n, const std::vector<int>& sequence);

// ---------------------------------------------------------------------------
// Extremal search and claim verification
// ---------------------------------------------------------------------------

enum class Objective { min, max };

struct SearchRecord {
  Graph graph;
  Sign sign = Sign::plus;
  SkewCoeffs coeffs;
  double energy = 0.0;
  std::string canonical_key;
  int girth = 0;
  /// 1-based tie group; records whose energies agree within
  /// kEnergyTieTolerance of the group's first record share a group.
  int group = 0;
  /// family_name() plus "+"/"-" for even girth.
  std::string label;
};

inline constexpr double kEnergyTieTolerance = 1e-9;

/// Scores every isomorphism class on n vertices under its canonical
/// orientations (plus only for odd girth, where both coincide) and returns
/// the records of the first `top` tie groups, sorted by energy (ascending
/// for min, descending for max). 3 <= n <= 10, top >= 1.
std::vector<SearchRecord> search_extremal(int n, Objective objective, int top);

struct Claim {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  int n = 0;
  std::vector<Claim> claims;

  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return !claims.empty();
  }
};

/// Exhaustively checks, at order n (4 <= n <= 9): the minimum and second
/// minimum energy orientations, the unique maximizer P_n^4+, plus-over-minus
/// dominance, quasi-order extremality of S_n^l and P_n^l within each girth
/// class, and the S_n^l / P_n^l coefficient chains.
VerificationReport verify_claims(int n);

const char* to_string(Sign s) noexcept;

}  // namespace skewen
