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

#include "skewen/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <string>

#include "skewen/errors.hpp"

namespace skewen {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  adj_.assign(static_cast<size_t>(n), {});
  for (const auto& e : edges_) {
    adj_[static_cast<size_t>(e.u)].push_back(e.v);
    adj_[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

std::optional<int> Graph::edge_index(Vertex a, Vertex b) const {
  const Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

Graph Graph::without_edge(Edge e) const {
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  const Edge key = make_edge(e.u, e.v);
  for (const auto& f : edges_)
    if (f != key) rest.push_back(f);
  if (rest.size() == edges_.size()) throw std::invalid_argument("edge not present");
  return Graph(n_, std::move(rest));
}

Graph Graph::without_vertices(std::span<const Vertex> removed) const {
  std::vector<int> label(static_cast<size_t>(n_), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    label[static_cast<size_t>(v)] = -1;
  }
  int next = 0;
  for (auto& l : label)
    if (l == 0) l = next++;
  std::vector<Edge> rest;
  for (const auto& e : edges_) {
    const int a = label[static_cast<size_t>(e.u)];
    const int b = label[static_cast<size_t>(e.v)];
    if (a >= 0 && b >= 0) rest.push_back(Edge{a, b});
  }
  return Graph(next, std::move(rest));
}

Graph Graph::with_pendant(Vertex attach) const {
  if (attach < 0 || attach >= n_) throw std::invalid_argument("vertex out of range");
  std::vector<Edge> more = edges_;
  more.push_back(Edge{attach, n_});
  return Graph(n_ + 1, std::move(more));
}

Graph make_family(FamilyKind kind, int n, std::optional<int> girth) {
  std::vector<Edge> edges;
  switch (kind) {
    case FamilyKind::path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      if (girth) throw std::invalid_argument("path takes no girth");
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Graph(n, std::move(edges));
    case FamilyKind::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      if (girth && *girth != n) throw std::invalid_argument("cycle girth must equal n");
      for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
      return Graph(n, std::move(edges));
    case FamilyKind::pnl:
    case FamilyKind::snl:
      break;
  }
  if (!girth) throw std::invalid_argument("family requires a girth");
  const int l = *girth;
  if (l < 3 || l > n) throw std::invalid_argument("girth must satisfy 3 <= girth <= n");
  for (int i = 0; i < l; ++i) edges.push_back(make_edge(i, (i + 1) % l));
  for (int v = l; v < n; ++v) {
    const bool chain = kind == FamilyKind::pnl && v > l;
    edges.push_back(Edge{chain ? v - 1 : 0, v});
  }
  return Graph(n, std::move(edges));
}

namespace {

void add_checked(std::int64_t& acc, std::int64_t x) {
  if (__builtin_add_overflow(acc, x, &acc)) throw InvariantViolation("matching count overflow");
}

class MatchingCounter {
 public:
  std::vector<std::int64_t> count(const std::vector<Edge>& edges) {
    if (edges.empty()) return {1};
    if (auto it = memo_.find(edges); it != memo_.end()) return it->second;

    const Edge e = edges.front();
    std::vector<Edge> minus_edge(edges.begin() + 1, edges.end());
    std::vector<Edge> minus_ends;
    for (const auto& f : minus_edge)
      if (f.u != e.u && f.u != e.v && f.v != e.u && f.v != e.v) minus_ends.push_back(f);

    std::vector<std::int64_t> out = count(minus_edge);
    const std::vector<std::int64_t> shifted = count(minus_ends);
    if (out.size() < shifted.size() + 1) out.resize(shifted.size() + 1, 0);
    for (size_t k = 0; k < shifted.size(); ++k) add_checked(out[k + 1], shifted[k]);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    memo_.emplace(edges, out);
    return out;
  }

 private:
  std::map<std::vector<Edge>, std::vector<std::int64_t>> memo_;
};

}  // namespace

MatchingCounts matching_counts(const Graph& g) {
  MatchingCounter counter;
  std::vector<std::int64_t> counts = counter.count(g.edges());
  counts.resize(static_cast<size_t>(g.order() / 2 + 1), 0);
  return MatchingCounts{std::move(counts)};
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  std::optional<int> best;
  std::vector<int> dist(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<size_t>(root)] = 0;
    parent[static_cast<size_t>(root)] = -1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (dist[static_cast<size_t>(y)] < 0) {
          dist[static_cast<size_t>(y)] = dist[static_cast<size_t>(x)] + 1;
          parent[static_cast<size_t>(y)] = x;
          queue.push_back(y);
        } else if (parent[static_cast<size_t>(x)] != y) {
          const int len = dist[static_cast<size_t>(x)] + dist[static_cast<size_t>(y)] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[static_cast<size_t>(y)]) {
        seen[static_cast<size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

bool is_forest(const Graph& g) { return !girth(g).has_value(); }

bool is_unicyclic(const Graph& g) { return g.order() >= 3 && g.size() == g.order() && is_connected(g); }

std::vector<Vertex> normalize_cycle(std::vector<Vertex> cycle) {
  const size_t len = cycle.size();
  if (len < 3) throw std::invalid_argument("a cycle has at least 3 vertices");
  const size_t at = static_cast<size_t>(std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
  const Vertex next = cycle[(at + 1) % len];
  const Vertex prev = cycle[(at + len - 1) % len];
  std::vector<Vertex> out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i)
    out.push_back(next < prev ? cycle[(at + i) % len] : cycle[(at + len - i) % len]);
  return out;
}

std::vector<Vertex> unique_cycle(const Graph& g) {
  if (!is_unicyclic(g)) throw std::domain_error("graph is not unicyclic");
  const int n = g.order();
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<size_t>(v)] = g.degree(v);
    if (deg[static_cast<size_t>(v)] == 1) leaves.push_back(v);
  }
  std::vector<char> pruned(static_cast<size_t>(n), 0);
  while (!leaves.empty()) {
    const Vertex x = leaves.back();
    leaves.pop_back();
    pruned[static_cast<size_t>(x)] = 1;
    for (Vertex y : g.neighbors(x))
      if (!pruned[static_cast<size_t>(y)] && --deg[static_cast<size_t>(y)] == 1) leaves.push_back(y);
  }
  Vertex start = 0;
  while (pruned[static_cast<size_t>(start)]) ++start;
  std::vector<Vertex> cycle{start};
  Vertex prev = -1;
  Vertex cur = start;
  for (;;) {
    Vertex step = -1;
    for (Vertex y : g.neighbors(cur)) {
      if (!pruned[static_cast<size_t>(y)] && y != prev) {
        step = y;
        break;
      }
    }
    if (step == start) break;
    prev = cur;
    cur = step;
    cycle.push_back(cur);
  }
  return normalize_cycle(std::move(cycle));
}

namespace {

class EvenLinearEnumerator {
 public:
  EvenLinearEnumerator(const Graph& g, int target)
      : g_(g), target_(target), used_(static_cast<size_t>(g.order()), 0) {}

  std::vector<LinearSubgraph> run() {
    place(0, 0);
    return std::move(out_);
  }

 private:
  // Vertices below `v` are settled. Every component is placed at its lowest
  // vertex, so each subgraph is generated once.
  void place(Vertex v, int covered) {
    if (covered == target_) {
      current_.vertex_count = covered;
      out_.push_back(current_);
      return;
    }
    const int n = g_.order();
    if (v >= n || covered + (n - v) < target_) return;
    if (used_[static_cast<size_t>(v)]) {
      place(v + 1, covered);
      return;
    }
    place(v + 1, covered);
    if (covered + 2 > target_) return;

    used_[static_cast<size_t>(v)] = 1;
    for (Vertex w : g_.neighbors(v)) {
      if (w < v || used_[static_cast<size_t>(w)]) continue;
      used_[static_cast<size_t>(w)] = 1;
      current_.matching_edges.push_back(Edge{v, w});
      place(v + 1, covered + 2);
      current_.matching_edges.pop_back();
      used_[static_cast<size_t>(w)] = 0;
    }
    std::vector<Vertex> path{v};
    extend_cycle(path, covered);
    used_[static_cast<size_t>(v)] = 0;
  }

  void extend_cycle(std::vector<Vertex>& path, int covered) {
    const Vertex root = path.front();
    const Vertex last = path.back();
    const int len = static_cast<int>(path.size());
    for (Vertex w : g_.neighbors(last)) {
      if (w == root) {
        // Closing edge; path[1] < last picks one of the two traversals.
        if (len >= 4 && len % 2 == 0 && path[1] < last) {
          current_.cycles.push_back(path);
          place(root + 1, covered + len);
          current_.cycles.pop_back();
        }
        continue;
      }
      if (w < root || used_[static_cast<size_t>(w)] || covered + len + 1 > target_) continue;
      used_[static_cast<size_t>(w)] = 1;
      path.push_back(w);
      extend_cycle(path, covered);
      path.pop_back();
      used_[static_cast<size_t>(w)] = 0;
    }
  }

  const Graph& g_;
  int target_;
  std::vector<char> used_;
  LinearSubgraph current_;
  std::vector<LinearSubgraph> out_;
};

}  // namespace

std::vector<LinearSubgraph> enumerate_evenly_linear(const Graph& g, int vertices) {
  if (vertices < 0 || vertices > g.order())
    throw std::invalid_argument("vertex count must lie in [0, n]");
  if (vertices % 2 != 0) return {};
  return EvenLinearEnumerator(g, vertices).run();
}

}  // namespace skewen
