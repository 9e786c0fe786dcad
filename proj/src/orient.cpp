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

#include "skewen/orient.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace skewen {

namespace {

std::vector<Edge> edges_of(const std::vector<Arc>& arcs) {
  std::vector<Edge> edges;
  edges.reserve(arcs.size());
  for (const auto& a : arcs) edges.push_back(Edge{a.tail, a.head});
  return edges;
}

}  // namespace

OrientedGraph::OrientedGraph(int n, std::vector<Arc> arcs) : base_(n, edges_of(arcs)) {
  arcs_.resize(arcs.size());
  for (const auto& a : arcs) arcs_[static_cast<size_t>(*base_.edge_index(a.tail, a.head))] = a;
}

bool OrientedGraph::has_arc(Vertex tail, Vertex head) const {
  const auto idx = base_.edge_index(tail, head);
  return idx && arcs_[static_cast<size_t>(*idx)].tail == tail;
}

OrientedGraph OrientedGraph::reversed() const {
  std::vector<Arc> flipped;
  flipped.reserve(arcs_.size());
  for (const auto& a : arcs_) flipped.push_back(Arc{a.head, a.tail});
  return OrientedGraph(order(), std::move(flipped));
}

OrientedGraph OrientedGraph::without_edge(Edge e) const {
  const auto idx = base_.edge_index(e.u, e.v);
  if (!idx) throw std::invalid_argument("edge not present");
  std::vector<Arc> rest = arcs_;
  rest.erase(rest.begin() + *idx);
  return OrientedGraph(order(), std::move(rest));
}

OrientedGraph OrientedGraph::without_vertices(std::span<const Vertex> removed) const {
  std::vector<int> label(static_cast<size_t>(order()), 0);
  for (Vertex v : removed) {
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex out of range");
    label[static_cast<size_t>(v)] = -1;
  }
  int next = 0;
  for (auto& l : label)
    if (l == 0) l = next++;
  std::vector<Arc> rest;
  for (const auto& a : arcs_) {
    const int t = label[static_cast<size_t>(a.tail)];
    const int h = label[static_cast<size_t>(a.head)];
    if (t >= 0 && h >= 0) rest.push_back(Arc{t, h});
  }
  return OrientedGraph(next, std::move(rest));
}

OrientedGraph orient_by_mask(const Graph& g, std::uint64_t mask) {
  if (g.size() > 64) throw std::invalid_argument("orientation mask covers at most 64 edges");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) {
    const Edge e = g.edges()[static_cast<size_t>(i)];
    arcs.push_back((mask >> i) & 1U ? Arc{e.v, e.u} : Arc{e.u, e.v});
  }
  return OrientedGraph(g.order(), std::move(arcs));
}

SkewMatrix skew_matrix(const OrientedGraph& og) {
  SkewMatrix s(og.order());
  for (const auto& a : og.arcs()) s.set_arc(a.tail, a.head);
  return s;
}

CycleParity cycle_parity(const OrientedGraph& og, std::span<const Vertex> cycle) {
  const size_t len = cycle.size();
  if (len < 3) throw std::invalid_argument("a cycle has at least 3 vertices");
  if (len % 2 != 0) throw std::invalid_argument("cycle parity is defined for even cycles only");
  std::vector<Vertex> sorted(cycle.begin(), cycle.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("cycle repeats a vertex");
  for (size_t i = 0; i < len; ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % len];
    if (a < 0 || a >= og.order() || !og.base().has_edge(a, b))
      throw std::invalid_argument("cycle uses a missing edge");
  }
  const std::vector<Vertex> walk = normalize_cycle(std::vector<Vertex>(cycle.begin(), cycle.end()));
  size_t agreeing = 0;
  for (size_t i = 0; i < len; ++i)
    if (og.has_arc(walk[i], walk[(i + 1) % len])) ++agreeing;
  return agreeing % 2 == 0 ? CycleParity::evenly : CycleParity::oddly;
}

OrientedGraph orient_unicyclic(const Graph& g, Sign sign) {
  const std::vector<Vertex> cycle = unique_cycle(g);
  const size_t len = cycle.size();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<size_t>(g.size()));
  for (size_t i = 0; i < len; ++i) arcs.push_back(Arc{cycle[i], cycle[(i + 1) % len]});
  if (sign == Sign::plus) std::swap(arcs[0].tail, arcs[0].head);

  std::vector<char> seen(static_cast<size_t>(g.order()), 0);
  std::deque<Vertex> queue;
  for (Vertex c : cycle) {
    seen[static_cast<size_t>(c)] = 1;
    queue.push_back(c);
  }
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (seen[static_cast<size_t>(y)]) continue;
      seen[static_cast<size_t>(y)] = 1;
      arcs.push_back(Arc{x, y});
      queue.push_back(y);
    }
  }
  return OrientedGraph(g.order(), std::move(arcs));
}

OrientedGraph apply_switching(const OrientedGraph& og, std::span<const Vertex> w) {
  std::vector<char> inside(static_cast<size_t>(og.order()), 0);
  for (Vertex v : w) {
    if (v < 0 || v >= og.order()) throw std::invalid_argument("vertex out of range");
    inside[static_cast<size_t>(v)] = 1;
  }
  std::vector<Arc> arcs = og.arcs();
  for (auto& a : arcs)
    if (inside[static_cast<size_t>(a.tail)] != inside[static_cast<size_t>(a.head)]) std::swap(a.tail, a.head);
  return OrientedGraph(og.order(), std::move(arcs));
}

bool switching_equivalent(const OrientedGraph& a, const OrientedGraph& b) {
  if (a.base() != b.base()) throw std::invalid_argument("orientations of different graphs");
  const Graph& g = a.base();
  const int n = g.order();
  // side[v] = 1 when v must be in the switching set; an edge whose arcs
  // disagree must cross the cut, an agreeing edge must not.
  std::vector<int> side(static_cast<size_t>(n), -1);
  auto differs = [&](Vertex x, Vertex y) {
    const auto idx = static_cast<size_t>(*g.edge_index(x, y));
    return a.arcs()[idx] != b.arcs()[idx] ? 1 : 0;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (side[static_cast<size_t>(root)] >= 0) continue;
    side[static_cast<size_t>(root)] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        const int want = side[static_cast<size_t>(x)] ^ differs(x, y);
        if (side[static_cast<size_t>(y)] < 0) {
          side[static_cast<size_t>(y)] = want;
          stack.push_back(y);
        } else if (side[static_cast<size_t>(y)] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace skewen
