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

// Slow, obviously-correct reference implementations used only by tests.
// None of them call into the library's algorithms; they only read graphs.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "skewen/graph.hpp"
#include "skewen/orient.hpp"

namespace oracle {

using skewen::Edge;
using skewen::Graph;
using skewen::OrientedGraph;

// m(G, k) by checking every edge subset.
inline std::vector<std::int64_t> matchings(const Graph& g) {
  const auto& edges = g.edges();
  const int m = g.size();
  std::vector<std::int64_t> out(static_cast<size_t>(g.order() / 2 + 1), 0);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::uint32_t used = 0;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      if (!(mask >> i & 1u)) continue;
      const std::uint32_t ends = (1u << edges[static_cast<size_t>(i)].u) | (1u << edges[static_cast<size_t>(i)].v);
      ok = (used & ends) == 0;
      used |= ends;
    }
    if (ok) ++out[static_cast<size_t>(std::popcount(mask))];
  }
  return out;
}

// Polynomials as coefficient vectors, lowest degree first.
using Poly = std::vector<std::int64_t>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// det(xI - S) by the Leibniz permutation expansion, highest degree first.
inline std::vector<std::int64_t> leibniz_charpoly(const std::vector<std::vector<int>>& s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  Poly total(static_cast<size_t>(n + 1), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)];
    Poly term{inversions % 2 ? -1 : 1};
    for (int i = 0; i < n && !term.empty(); ++i) {
      const int j = perm[static_cast<size_t>(i)];
      const std::int64_t constant = -s[static_cast<size_t>(i)][static_cast<size_t>(j)];
      term = poly_mul(term, i == j ? Poly{constant, 1} : Poly{constant});
    }
    for (size_t d = 0; d < term.size(); ++d) total[d] += term[d];
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::reverse(total.begin(), total.end());
  return total;
}

inline std::vector<std::vector<int>> dense_skew(const OrientedGraph& og) {
  const int n = og.order();
  std::vector<std::vector<int>> s(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (const auto& a : og.arcs()) {
    s[static_cast<size_t>(a.tail)][static_cast<size_t>(a.head)] = 1;
    s[static_cast<size_t>(a.head)][static_cast<size_t>(a.tail)] = -1;
  }
  return s;
}

// Even coefficients b_0, b_2, ... straight from the definition: the sum over
// edge subsets forming evenly linear subgraphs (each component an edge or
// an even cycle) of (-2)^#evenly * 2^#oddly. A cycle is evenly oriented when
// the arcs agreeing with one traversal are even in number.
inline std::vector<std::int64_t> linear_subgraph_coeffs(const OrientedGraph& og) {
  const Graph& g = og.base();
  const int n = g.order();
  const int m = g.size();
  std::vector<std::int64_t> out(static_cast<size_t>(n / 2 + 1), 0);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      const Edge e = g.edges()[static_cast<size_t>(i)];
      adj[static_cast<size_t>(e.u)].push_back(e.v);
      adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    bool ok = true;
    int covered = 0;
    std::int64_t weight = 1;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int start = 0; start < n && ok; ++start) {
      if (seen[static_cast<size_t>(start)] || adj[static_cast<size_t>(start)].empty()) continue;
      std::vector<int> comp{start};
      seen[static_cast<size_t>(start)] = 1;
      for (size_t i = 0; i < comp.size(); ++i)
        for (int y : adj[static_cast<size_t>(comp[i])])
          if (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = 1;
            comp.push_back(y);
          }
      covered += static_cast<int>(comp.size());
      if (comp.size() == 2) continue;
      for (int v : comp) ok = ok && adj[static_cast<size_t>(v)].size() == 2;
      if (!ok || comp.size() % 2) {
        ok = false;
        break;
      }
      // Walk the cycle and count arcs agreeing with the walk.
      int agree = 0;
      int prev = start;
      int cur = adj[static_cast<size_t>(start)][0];
      if (og.has_arc(start, cur)) ++agree;
      while (cur != start) {
        const auto& nb = adj[static_cast<size_t>(cur)];
        const int next = nb[0] == prev ? nb[1] : nb[0];
        if (og.has_arc(cur, next)) ++agree;
        prev = cur;
        cur = next;
      }
      weight *= agree % 2 == 0 ? -2 : 2;
    }
    if (ok) out[static_cast<size_t>(covered / 2)] += weight;
  }
  return out;
}

// Canonical form by trying every vertex permutation.
inline std::string brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string bits(static_cast<size_t>(n * n), '0');
    for (const auto& e : g.edges()) {
      const int a = perm[static_cast<size_t>(e.u)];
      const int b = perm[static_cast<size_t>(e.v)];
      bits[static_cast<size_t>(a * n + b)] = '1';
      bits[static_cast<size_t>(b * n + a)] = '1';
    }
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x))
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++count;
        stack.push_back(y);
      }
  }
  return count == g.order();
}

// Every labeled graph on n vertices with exactly `edges` edges.
inline void for_each_labeled_graph(int n, int edges, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> all;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all.push_back(Edge{a, b});
  const int total = static_cast<int>(all.size());
  std::vector<char> pick(static_cast<size_t>(total), 0);
  std::fill(pick.begin(), pick.begin() + edges, 1);
  do {
    std::vector<Edge> chosen;
    for (int i = 0; i < total; ++i)
      if (pick[static_cast<size_t>(i)]) chosen.push_back(all[static_cast<size_t>(i)]);
    visit(Graph(n, std::move(chosen)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

// Connected labeled graphs with n vertices and n edges.
inline std::vector<Graph> labeled_unicyclic(int n) {
  std::vector<Graph> out;
  for_each_labeled_graph(n, n, [&](const Graph& g) {
    if (connected(g)) out.push_back(g);
  });
  return out;
}

// Singular values of S via Eigen's self-adjoint solver on S^T S, sorted
// descending.
inline std::vector<double> singular_values(const OrientedGraph& og) {
  const int n = og.order();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  for (const auto& a : og.arcs()) {
    s(a.tail, a.head) = 1.0;
    s(a.head, a.tail) = -1.0;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(s);
  std::vector<double> out(svd.singularValues().data(), svd.singularValues().data() + n);
  std::sort(out.rbegin(), out.rend());
  return out;
}

inline double trace_norm(const OrientedGraph& og) {
  const auto sv = singular_values(og);
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

// Uniform random labeled tree via a random Pruefer sequence, decoded here
// with the textbook O(n^2) procedure.
inline Graph random_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {Edge{0, 1}});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> seq(static_cast<size_t>(n - 2));
  for (auto& x : seq) x = pick(rng);
  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int x : seq) ++degree[static_cast<size_t>(x)];
  std::vector<Edge> edges;
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<size_t>(leaf)] != 1) continue;
      edges.push_back(skewen::make_edge(leaf, x));
      --degree[static_cast<size_t>(leaf)];
      --degree[static_cast<size_t>(x)];
      break;
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<size_t>(v)] == 1) {
      if (a < 0) a = v;
      else edges.push_back(skewen::make_edge(a, v));
    }
  return Graph(n, std::move(edges));
}

// Random tree plus one random non-tree edge.
inline Graph random_unicyclic(int n, std::mt19937_64& rng) {
  const Graph t = random_tree(n, rng);
  std::vector<Edge> missing;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!t.has_edge(a, b)) missing.push_back(Edge{a, b});
  std::vector<Edge> edges = t.edges();
  edges.push_back(missing[std::uniform_int_distribution<size_t>(0, missing.size() - 1)(rng)]);
  return Graph(n, std::move(edges));
}

inline OrientedGraph random_orientation(const Graph& g, std::mt19937_64& rng) {
  std::vector<skewen::Arc> arcs;
  for (const auto& e : g.edges())
    arcs.push_back(rng() & 1u ? skewen::Arc{e.u, e.v} : skewen::Arc{e.v, e.u});
  return OrientedGraph(g.order(), std::move(arcs));
}

}  // namespace oracle
