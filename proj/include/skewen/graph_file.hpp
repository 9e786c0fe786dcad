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

#include <optional>
#include <string>
#include <string_view>

#include "skewen/graph.hpp"
#include "skewen/orient.hpp"

namespace skewen {

/// Text graph format:
///
///     # comment
///     n m
///     u > v      arc u -> v
///     u - v      undirected edge
///
/// 0-based vertices, exactly m edge lines after the header. Blank lines and
/// lines whose first non-blank character is '#' are skipped.
struct GraphFile {
  Graph graph;
  /// Present iff every edge line is an arc.
  std::optional<OrientedGraph> oriented;
};

/// Throws ParseError (with the offending 1-based line) on a malformed
/// header, bad edge line, out-of-range index, self-loop, duplicate edge,
/// conflicting directions on one edge, or an edge count differing from m.
GraphFile parse_graph_file(std::string_view text);

/// Writes the format above with one "u > v" line per arc, in edge order.
std::string serialize_graph(const OrientedGraph& og);
/// Same, with "u - v" lines.
std::string serialize_graph(const Graph& g);

}  // namespace skewen
