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
#include <span>
#include <vector>

#include "skewen/graph.hpp"

namespace skewen {

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Arc&) const = default;
};

/// Canonical orientations of a unicyclic graph. `minus` has every cycle arc
/// following one traversal of the cycle; `plus` has exactly one cycle arc
/// reversed. For even girth, minus is evenly oriented and plus oddly.
enum class Sign { plus, minus };

enum class CycleParity { evenly, oddly };

/// A graph together with a direction on each edge.
class OrientedGraph {
 public:
  OrientedGraph() = default;
  /// The base graph is the underlying edge set of `arcs`. Opposite arcs on
  /// the same pair count as a duplicate edge (std::invalid_argument).
  OrientedGraph(int n, std::vector<Arc> arcs);

  const Graph& base() const noexcept { return base_; }
  int order() const noexcept { return base_.order(); }
  /// arcs()[i] orients base().edges()[i].
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool has_arc(Vertex tail, Vertex head) const;

  OrientedGraph reversed() const;
  OrientedGraph without_edge(Edge e) const;
  OrientedGraph without_vertices(std::span<const Vertex> removed) const;

  bool operator==(const OrientedGraph& other) const = default;

 private:
  Graph base_;
  std::vector<Arc> arcs_;
};

/// Orients edges()[i] from the larger endpoint to the smaller when bit i of
/// `mask` is set, from smaller to larger otherwise. Needs size() <= 64.
OrientedGraph orient_by_mask(const Graph& g, std::uint64_t mask);

/// Dense antisymmetric {-1, 0, +1} matrix; at(i, j) = +1 iff i -> j.
class SkewMatrix {
 public:
  explicit SkewMatrix(int n) : n_(n), entries_(static_cast<size_t>(n) * static_cast<size_t>(n), 0) {}

  int order() const noexcept { return n_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }
  void set_arc(Vertex tail, Vertex head) {
    entries_[index(tail, head)] = 1;
    entries_[index(head, tail)] = -1;
  }

  bool operator==(const SkewMatrix&) const = default;

 private:
  size_t index(int i, int j) const { return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j); }

  int n_;
  std::vector<std::int8_t> entries_;
};

SkewMatrix skew_matrix(const OrientedGraph& og);

/// Parity of the number of cycle arcs that agree with the normalized
/// traversal (see normalize_cycle). The cycle must be an even cycle of the
/// base graph, given as consecutive vertices; otherwise std::invalid_argument.
CycleParity cycle_parity(const OrientedGraph& og, std::span<const Vertex> cycle);

/// Canonical plus/minus orientation of a unicyclic graph. The cycle follows
/// its normalized traversal; for plus the arc leaving the minimum cycle
/// vertex is reversed. Tree edges point away from the cycle.
/// std::domain_error if g is not unicyclic.
OrientedGraph orient_unicyclic(const Graph& g, Sign sign);

/// Reverses every arc with exactly one endpoint in `w`.
OrientedGraph apply_switching(const OrientedGraph& og, std::span<const Vertex> w);

/// True iff some vertex set switches `a` into `b`. Both must share a base
/// graph (std::invalid_argument otherwise).
bool switching_equivalent(const OrientedGraph& a, const OrientedGraph& b);

}  // namespace skewen
