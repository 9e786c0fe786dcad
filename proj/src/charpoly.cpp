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

#include "skewen/charpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "skewen/errors.hpp"

namespace skewen {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("integer overflow in coefficient arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("integer overflow in coefficient arithmetic");
  return r;
}

SkewCoeffs empty_coeffs(int n) {
  return SkewCoeffs{n, std::vector<std::int64_t>(static_cast<size_t>(n / 2 + 1), 0)};
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

void check_coeff_invariants(const SkewCoeffs& c, int edge_count) {
  if (c.coeffs.size() != static_cast<size_t>(c.order / 2 + 1))
    throw InvariantViolation("coefficient vector has wrong length");
  if (c.at(0) != 1) throw InvariantViolation("b_0 must equal 1");
  if (c.order >= 2 && c.at(1) != edge_count) throw InvariantViolation("b_2 must equal the edge count");
  for (auto b : c.coeffs)
    if (b < 0) throw InvariantViolation("negative skew coefficient");
}

std::vector<std::int64_t> characteristic_polynomial(const SkewMatrix& s) {
  const int n = s.order();
  if (n == 0) return {1};
  std::vector<std::int64_t> poly{1, -static_cast<std::int64_t>(s.at(0, 0))};
  for (int r = 1; r < n; ++r) {
    // Leading block A (r x r), row R = s[r][0..r), column C = s[0..r)[r].
    std::vector<std::int64_t> toeplitz(static_cast<size_t>(r + 2), 0);
    toeplitz[0] = 1;
    toeplitz[1] = -static_cast<std::int64_t>(s.at(r, r));
    std::vector<std::int64_t> v(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) v[static_cast<size_t>(i)] = s.at(i, r);
    for (int j = 0; j < r; ++j) {
      if (j > 0) {
        std::vector<std::int64_t> next(static_cast<size_t>(r), 0);
        for (int i = 0; i < r; ++i)
          for (int k = 0; k < r; ++k)
            if (s.at(i, k) != 0)
              next[static_cast<size_t>(i)] =
                  checked_add(next[static_cast<size_t>(i)], checked_mul(s.at(i, k), v[static_cast<size_t>(k)]));
        v = std::move(next);
      }
      std::int64_t dot = 0;
      for (int k = 0; k < r; ++k) dot = checked_add(dot, checked_mul(s.at(r, k), v[static_cast<size_t>(k)]));
      toeplitz[static_cast<size_t>(j + 2)] = -dot;
    }
    std::vector<std::int64_t> next_poly(static_cast<size_t>(r + 2), 0);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j)
        next_poly[static_cast<size_t>(i)] =
            checked_add(next_poly[static_cast<size_t>(i)],
                        checked_mul(toeplitz[static_cast<size_t>(i - j)], poly[static_cast<size_t>(j)]));
    poly = std::move(next_poly);
  }
  return poly;
}

SkewCoeffs coeffs_combinatorial(const OrientedGraph& og) {
  const int n = og.order();
  SkewCoeffs out = empty_coeffs(n);
  for (int k = 0; 2 * k <= n; ++k) {
    std::int64_t total = 0;
    for (const auto& sub : enumerate_evenly_linear(og.base(), 2 * k)) {
      std::int64_t term = 1;
      for (const auto& cycle : sub.cycles)
        term = checked_mul(term, cycle_parity(og, cycle) == CycleParity::evenly ? -2 : 2);
      total = checked_add(total, term);
    }
    out.coeffs[static_cast<size_t>(k)] = total;
  }
  return out;
}

SkewCoeffs coeffs_unicyclic(const OrientedGraph& og) {
  const Graph& g = og.base();
  if (!is_unicyclic(g)) throw std::domain_error("unicyclic coefficient formula needs a unicyclic graph");
  const std::vector<Vertex> cycle = unique_cycle(g);
  const int len = static_cast<int>(cycle.size());
  const MatchingCounts m = matching_counts(g);

  SkewCoeffs out{g.order(), m.counts};
  if (len % 2 != 0) return out;

  const MatchingCounts rest = matching_counts(g.without_vertices(cycle));
  const std::int64_t sign = cycle_parity(og, cycle) == CycleParity::evenly ? -2 : 2;
  for (int k = 0; k < static_cast<int>(out.coeffs.size()); ++k)
    out.coeffs[static_cast<size_t>(k)] =
        checked_add(out.coeffs[static_cast<size_t>(k)], checked_mul(sign, rest.at(k - len / 2)));
  return out;
}

SkewCoeffs coeffs_exact(const OrientedGraph& og) {
  const int n = og.order();
  const std::vector<std::int64_t> poly = characteristic_polynomial(skew_matrix(og));
  SkewCoeffs out = empty_coeffs(n);
  for (int i = 0; i <= n; ++i) {
    const std::int64_t c = poly[static_cast<size_t>(i)];
    if (i % 2 != 0) {
      if (c != 0) throw InvariantViolation("odd coefficient " + std::to_string(i) + " is nonzero");
      continue;
    }
    if (c < 0) throw InvariantViolation("even coefficient " + std::to_string(i) + " is negative");
    out.coeffs[static_cast<size_t>(i / 2)] = c;
  }
  return out;
}

namespace {

// Searches simple paths from `at` to `target` avoiding the edge itself;
// path_edges counts edges walked so far.
bool odd_path_exists(const Graph& g, Vertex at, Vertex target, Edge skip, int path_edges,
                     std::vector<char>& on_path) {
  for (Vertex y : g.neighbors(at)) {
    if (make_edge(at, y) == skip) continue;
    if (y == target) {
      if ((path_edges + 1) % 2 == 1) return true;
      continue;
    }
    if (on_path[static_cast<size_t>(y)]) continue;
    on_path[static_cast<size_t>(y)] = 1;
    const bool found = odd_path_exists(g, y, target, skip, path_edges + 1, on_path);
    on_path[static_cast<size_t>(y)] = 0;
    if (found) return true;
  }
  return false;
}

}  // namespace

bool edge_on_even_cycle(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("edge not present");
  const Edge key = make_edge(e.u, e.v);
  std::vector<char> on_path(static_cast<size_t>(g.order()), 0);
  on_path[static_cast<size_t>(key.u)] = 1;
  // A cycle through uv has even length iff the u..v path avoiding uv is odd.
  return odd_path_exists(g, key.u, key.v, key, 0, on_path);
}

bool verify_pendant_recurrence(const OrientedGraph& og, Edge e) {
  if (!og.base().has_edge(e.u, e.v)) throw std::invalid_argument("edge not present");
  if (edge_on_even_cycle(og.base(), e)) throw std::invalid_argument("edge lies on an even cycle");
  const SkewCoeffs whole = coeffs_exact(og);
  const SkewCoeffs cut = coeffs_exact(og.without_edge(e));
  const Vertex ends[] = {e.u, e.v};
  const SkewCoeffs removed = coeffs_exact(og.without_vertices(ends));
  for (int k = 0; k < static_cast<int>(whole.coeffs.size()); ++k)
    if (whole.at(k) != checked_add(cut.at(k), removed.at(k - 1))) return false;
  return true;
}

SkewCoeffs family_coeffs(ClosedFamily family, int n, int girth, Sign sign) {
  if (family == ClosedFamily::cycle) {
    if (n < 3 || girth != n) throw std::invalid_argument("cycle family needs n >= 3 and girth = n");
    SkewCoeffs out = empty_coeffs(n);
    for (int k = 0; 2 * k <= n; ++k)
      out.coeffs[static_cast<size_t>(k)] = k == 0 ? 1 : binomial(n - k, k) + binomial(n - k - 1, k - 1);
    if (n % 2 == 0) out.coeffs.back() += sign == Sign::plus ? 2 : -2;
    return out;
  }
  if (family == ClosedFamily::sn3 && girth != 3) throw std::invalid_argument("S_n^3 family needs girth 3");
  if (girth < 3 || girth > n) throw std::invalid_argument("girth must satisfy 3 <= girth <= n");

  SkewCoeffs out = empty_coeffs(n);
  out.coeffs[0] = 1;
  out.coeffs[1] = n;
  std::int64_t b4 = 0;
  if (girth == 3) {
    b4 = n - 3;
  } else if (girth == 4) {
    b4 = sign == Sign::plus ? 2 * n - 4 : 2 * n - 8;
  } else {
    const std::int64_t l = girth;
    b4 = (2 * n * l - l * l + l - 4 * n) / 2;
  }
  if (out.coeffs.size() > 2) out.coeffs[2] = b4;
  if (girth >= 5 && out.coeffs.size() > 3) {
    const SkewCoeffs tail = coeffs_unicyclic(orient_unicyclic(make_family(FamilyKind::snl, n, girth), sign));
    for (size_t k = 3; k < out.coeffs.size(); ++k) out.coeffs[k] = tail.coeffs[k];
  }
  return out;
}

}  // namespace skewen
