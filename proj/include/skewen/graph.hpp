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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace skewen {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Builds the normalized edge {a, b}; a and b may be given in either order.
constexpr Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted, so two graphs with the same labeled edge set
/// compare equal regardless of construction order. Construction rejects
/// self-loops, duplicates and out-of-range endpoints with
/// std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<Edge> edges = {});

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex a, Vertex b) const;
  /// Position of {a, b} in edges(), if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const;

  /// Same vertex set, one edge removed.
  Graph without_edge(Edge e) const;
  /// Deletes the given vertices and relabels the survivors 0..n'-1 keeping
  /// their relative order.
  Graph without_vertices(std::span<const Vertex> removed) const;
  /// Adds vertex n joined to `attach`.
  Graph with_pendant(Vertex attach) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// m(G, k) for k = 0..floor(n/2).
struct MatchingCounts {
  std::vector<std::int64_t> counts;

  /// m(G, k), zero outside the stored range (including k < 0).
  std::int64_t at(int k) const {
    return k < 0 || k >= static_cast<int>(counts.size()) ? 0 : counts[static_cast<size_t>(k)];
  }
  bool operator==(const MatchingCounts&) const = default;
};

enum class FamilyKind { path, cycle, pnl, snl };

/// Named families. Cycle vertices are 0..girth-1 in cyclic order; the path
/// of P_n^l hangs off vertex 0 as girth, girth+1, ...; the pendants of S_n^l
/// are girth..n-1, all on vertex 0. For `cycle` the girth may be omitted or
/// equal to n; `path` takes no girth.
Graph make_family(FamilyKind kind, int n, std::optional<int> girth = std::nullopt);

/// Counts k-matchings with the edge-deletion recurrence
/// m(G,k) = m(G-e,k) + m(G-u-v,k-1), memoized on residual edge lists.
/// Throws InvariantViolation on 64-bit overflow.
MatchingCounts matching_counts(const Graph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
/// Connected with exactly n edges (n >= 3 is implied).
bool is_unicyclic(const Graph& g);

/// Rotates/reflects a cycle's vertex list so it starts at its minimum vertex
/// and continues toward the smaller of that vertex's two cycle neighbours.
std::vector<Vertex> normalize_cycle(std::vector<Vertex> cycle);

/// The unique cycle of a unicyclic graph in normalized traversal order.
/// Throws std::domain_error if g is not unicyclic.
std::vector<Vertex> unique_cycle(const Graph& g);

/// Vertex-disjoint union of edges and cycles.
struct LinearSubgraph {
  std::vector<Edge> matching_edges;
  std::vector<std::vector<Vertex>> cycles;  // each normalized, length >= 3
  int vertex_count = 0;
};

/// All linear subgraphs whose cycles are all even and which cover exactly
/// `vertices` vertices. Each subgraph appears once.
std::vector<LinearSubgraph> enumerate_evenly_linear(const Graph& g, int vertices);

}  // namespace skewen
