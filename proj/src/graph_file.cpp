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

#include "skewen/graph_file.hpp"

#include <charconv>
#include <map>
#include <vector>

#include "skewen/errors.hpp"

namespace skewen {

namespace {

class LineCursor {
 public:
  explicit LineCursor(std::string_view line) : rest_(line) {}

  void skip_blanks() {
    while (!rest_.empty() && (rest_.front() == ' ' || rest_.front() == '\t' || rest_.front() == '\r'))
      rest_.remove_prefix(1);
  }

  std::optional<long long> integer() {
    skip_blanks();
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(rest_.data(), rest_.data() + rest_.size(), value);
    if (ec != std::errc() || ptr == rest_.data()) return std::nullopt;
    rest_.remove_prefix(static_cast<size_t>(ptr - rest_.data()));
    return value;
  }

  std::optional<char> symbol() {
    skip_blanks();
    if (rest_.empty()) return std::nullopt;
    const char c = rest_.front();
    rest_.remove_prefix(1);
    return c;
  }

  bool at_end() {
    skip_blanks();
    return rest_.empty();
  }

 private:
  std::string_view rest_;
};

struct EdgeLine {
  Vertex a;
  Vertex b;
  bool directed;
  int line;
};

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  std::optional<long long> order;
  long long expected_edges = 0;
  int header_line = 0;
  std::vector<EdgeLine> lines;
  std::map<Edge, EdgeLine> seen;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    LineCursor cur(raw);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const size_t first = raw.find_first_not_of(" \t\r");
    if (raw[first] == '#') continue;

    if (!order) {
      const auto n = cur.integer();
      const auto m = cur.integer();
      if (!n || !m || !cur.at_end()) throw ParseError(line_no, "header must be \"n m\"");
      if (*n < 0 || *m < 0) throw ParseError(line_no, "header values must be non-negative");
      if (*n > 1'000'000) throw ParseError(line_no, "vertex count too large");
      order = *n;
      expected_edges = *m;
      header_line = line_no;
      continue;
    }

    const auto a = cur.integer();
    const auto op = cur.symbol();
    const auto b = cur.integer();
    if (!a || !op || !b || (*op != '>' && *op != '-') || !cur.at_end())
      throw ParseError(line_no, "edge line must be \"u > v\" or \"u - v\"");
    if (*a < 0 || *b < 0 || *a >= *order || *b >= *order)
      throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(*order) + ")");
    if (*a == *b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(*a));
    if (static_cast<long long>(lines.size()) >= expected_edges)
      throw ParseError(line_no, "more edge lines than the " + std::to_string(expected_edges) + " declared");

    const EdgeLine here{static_cast<Vertex>(*a), static_cast<Vertex>(*b), *op == '>', line_no};
    const Edge key = make_edge(here.a, here.b);
    if (auto it = seen.find(key); it != seen.end()) {
      const EdgeLine& prior = it->second;
      const bool same = prior.directed == here.directed && (!here.directed || prior.a == here.a);
      throw ParseError(line_no, std::string(same ? "duplicate edge" : "conflicting direction for edge") + " {" +
                                    std::to_string(key.u) + "," + std::to_string(key.v) + "}, first given on line " +
                                    std::to_string(prior.line));
    }
    seen.emplace(key, here);
    lines.push_back(here);
  }

  if (!order) throw ParseError(0, "missing header line");
  if (static_cast<long long>(lines.size()) != expected_edges)
    throw ParseError(header_line, "header declares " + std::to_string(expected_edges) + " edges but " +
                                      std::to_string(lines.size()) + " were given");

  const int n = static_cast<int>(*order);
  bool all_directed = true;
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  for (const auto& l : lines) {
    all_directed = all_directed && l.directed;
    edges.push_back(Edge{l.a, l.b});
    arcs.push_back(Arc{l.a, l.b});
  }
  GraphFile out{Graph(n, std::move(edges)), std::nullopt};
  if (all_directed) out.oriented = OrientedGraph(n, std::move(arcs));
  return out;
}

std::string serialize_graph(const OrientedGraph& og) {
  std::string out = std::to_string(og.order()) + " " + std::to_string(og.arcs().size()) + "\n";
  for (const auto& a : og.arcs()) out += std::to_string(a.tail) + " > " + std::to_string(a.head) + "\n";
  return out;
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " - " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace skewen
