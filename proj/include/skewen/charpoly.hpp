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
#include <vector>

#include "skewen/graph.hpp"
#include "skewen/orient.hpp"

namespace skewen {

/// Even-index coefficients of det(xI - S) = sum_i b_i x^(n-i).
///
/// coeffs[k] holds b_{2k} for k = 0..floor(n/2); odd-index coefficients of
/// a skew-symmetric matrix vanish and are not stored.
struct SkewCoeffs {
  int order = 0;
  std::vector<std::int64_t> coeffs;

  /// b_{2k}; zero outside 0..floor(n/2).
  std::int64_t at(int k) const {
    return k < 0 || k >= static_cast<int>(coeffs.size()) ? 0 : coeffs[static_cast<size_t>(k)];
  }
  bool operator==(const SkewCoeffs&) const = default;
};

/// Throws InvariantViolation unless b_0 = 1, b_2 = edge_count, every
/// b_{2k} >= 0 and the vector has floor(order/2)+1 entries.
void check_coeff_invariants(const SkewCoeffs& c, int edge_count);

/// Full characteristic polynomial det(xI - S), highest degree first
/// (n+1 entries), by the division-free Samuelson-Berkowitz recurrence over
/// checked 64-bit integers.
std::vector<std::int64_t> characteristic_polynomial(const SkewMatrix& s);

/// Sum over evenly linear subgraphs L on 2k vertices of
/// (-2)^(#evenly oriented cycles of L) * 2^(#oddly oriented cycles of L).
SkewCoeffs coeffs_combinatorial(const OrientedGraph& og);

/// Unicyclic closed form: b_{2k} = m(G,k) for an odd cycle C, otherwise
/// m(G,k) -/+ 2 m(G-C, k-l/2) for an evenly/oddly oriented cycle.
/// std::domain_error unless the base graph is unicyclic.
SkewCoeffs coeffs_unicyclic(const OrientedGraph& og);

/// Exact coefficients from characteristic_polynomial(). Throws
/// InvariantViolation if an odd coefficient is nonzero or an even one
/// negative.
SkewCoeffs coeffs_exact(const OrientedGraph& og);

/// True if e lies on some even cycle of g (simple path search; desk scale).
bool edge_on_even_cycle(const Graph& g, Edge e);

/// Checks b_{2k}(G) = b_{2k}(G-e) + b_{2k-2}(G-u-v) for every k using the
/// exact engine. std::invalid_argument if e is missing or lies on an even
/// cycle.
bool verify_pendant_recurrence(const OrientedGraph& og, Edge e);

enum class ClosedFamily { snl, sn3, cycle };

/// Closed-form coefficients for S_n^3, S_n^4 (sign-dependent), S_n^l with
/// l >= 5 (b_4 closed form, higher terms from coeffs_unicyclic) and C_n
/// (girth must equal n). std::invalid_argument outside the valid range.
SkewCoeffs family_coeffs(ClosedFamily family, int n, int girth, Sign sign);

}  // namespace skewen
