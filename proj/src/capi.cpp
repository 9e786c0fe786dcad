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

#include "skewen/skewen.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "skewen/charpoly.hpp"
#include "skewen/energy.hpp"
#include "skewen/errors.hpp"
#include "skewen/extremal.hpp"
#include "skewen/graph.hpp"
#include "skewen/graph_file.hpp"
#include "skewen/orient.hpp"

struct skw_graph {
  skewen::Graph graph;
  std::optional<skewen::OrientedGraph> oriented;
};

struct skw_search {
  std::vector<skewen::SearchRecord> records;
};

struct skw_report {
  skewen::VerificationReport report;
};

namespace {

thread_local std::string last_error;

skw_status fail(skw_status status, const char* what) {
  last_error = what;
  return status;
}

template <class F>
skw_status guarded(F&& body) noexcept {
  try {
    return body();
  } catch (const skewen::ParseError& e) {
    return fail(SKW_ERR_PARSE, e.what());
  } catch (const skewen::InvariantViolation& e) {
    return fail(SKW_ERR_INVARIANT, e.what());
  } catch (const std::domain_error& e) {
    return fail(SKW_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SKW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SKW_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SKW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SKW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SKW_ERR_INTERNAL, "unknown error");
  }
}

skw_status null_argument() { return fail(SKW_ERR_INVALID_ARGUMENT, "null argument"); }

template <class T>
skw_status copy_out(const std::vector<T>& values, T* out, size_t capacity, size_t* length) {
  if (!length || (capacity > 0 && !out)) return null_argument();
  *length = values.size();
  std::copy_n(values.begin(), std::min(capacity, values.size()), out);
  if (capacity < values.size()) return fail(SKW_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  return SKW_OK;
}

skw_status copy_string(const std::string& s, char* out, size_t capacity, size_t* length) {
  if (!length || (capacity > 0 && !out)) return null_argument();
  *length = s.size() + 1;
  if (capacity < s.size() + 1) {
    if (capacity > 0) out[0] = '\0';
    return fail(SKW_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return SKW_OK;
}

const skewen::OrientedGraph& need_oriented(const skw_graph* g) {
  if (!g->oriented) throw std::invalid_argument("operation needs an oriented graph");
  return *g->oriented;
}

skw_graph* wrap(skewen::OrientedGraph og) {
  auto* out = new skw_graph{og.base(), std::move(og)};
  return out;
}

skw_graph* wrap(skewen::Graph g) { return new skw_graph{std::move(g), std::nullopt}; }

skewen::Sign to_sign(skw_sign s) {
  if (s != SKW_SIGN_PLUS && s != SKW_SIGN_MINUS) throw std::invalid_argument("unknown sign");
  return s == SKW_SIGN_PLUS ? skewen::Sign::plus : skewen::Sign::minus;
}

}  // namespace

extern "C" {

const char* skw_version(void) { return "1.0.0"; }

const char* skw_status_string(skw_status status) {
  switch (status) {
    case SKW_OK: return "ok";
    case SKW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SKW_ERR_PARSE: return "parse error";
    case SKW_ERR_DOMAIN: return "domain error";
    case SKW_ERR_INVARIANT: return "invariant violation";
    case SKW_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SKW_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* skw_last_error(void) { return last_error.c_str(); }

skw_status skw_graph_parse(const char* text, size_t length, skw_graph** out) {
  if ((!text && length > 0) || !out) return null_argument();
  return guarded([&] {
    skewen::GraphFile file = skewen::parse_graph_file(std::string_view(text ? text : "", length));
    *out = new skw_graph{std::move(file.graph), std::move(file.oriented)};
    return SKW_OK;
  });
}

skw_status skw_graph_from_arcs(int n, const int* tails, const int* heads, size_t count, skw_graph** out) {
  if ((count > 0 && (!tails || !heads)) || !out) return null_argument();
  return guarded([&] {
    std::vector<skewen::Arc> arcs;
    for (size_t i = 0; i < count; ++i) arcs.push_back(skewen::Arc{tails[i], heads[i]});
    *out = wrap(skewen::OrientedGraph(n, std::move(arcs)));
    return SKW_OK;
  });
}

skw_status skw_graph_from_edges(int n, const int* us, const int* vs, size_t count, skw_graph** out) {
  if ((count > 0 && (!us || !vs)) || !out) return null_argument();
  return guarded([&] {
    std::vector<skewen::Edge> edges;
    for (size_t i = 0; i < count; ++i) edges.push_back(skewen::Edge{us[i], vs[i]});
    *out = wrap(skewen::Graph(n, std::move(edges)));
    return SKW_OK;
  });
}

skw_status skw_graph_family(skw_family kind, int n, int girth, skw_graph** out) {
  if (!out) return null_argument();
  return guarded([&] {
    skewen::FamilyKind k{};
    switch (kind) {
      case SKW_FAMILY_PATH: k = skewen::FamilyKind::path; break;
      case SKW_FAMILY_CYCLE: k = skewen::FamilyKind::cycle; break;
      case SKW_FAMILY_PNL: k = skewen::FamilyKind::pnl; break;
      case SKW_FAMILY_SNL: k = skewen::FamilyKind::snl; break;
      default: throw std::invalid_argument("unknown family");
    }
    *out = wrap(skewen::make_family(k, n, girth > 0 ? std::optional<int>(girth) : std::nullopt));
    return SKW_OK;
  });
}

void skw_graph_free(skw_graph* graph) { delete graph; }

int skw_graph_order(const skw_graph* graph) { return graph ? graph->graph.order() : 0; }

int skw_graph_edge_count(const skw_graph* graph) { return graph ? graph->graph.size() : 0; }

int skw_graph_is_oriented(const skw_graph* graph) { return graph && graph->oriented ? 1 : 0; }

skw_status skw_graph_arc(const skw_graph* graph, int index, int* tail, int* head) {
  if (!graph || !tail || !head) return null_argument();
  if (index < 0 || index >= graph->graph.size()) return fail(SKW_ERR_INVALID_ARGUMENT, "arc index out of range");
  if (graph->oriented) {
    const skewen::Arc a = graph->oriented->arcs()[static_cast<size_t>(index)];
    *tail = a.tail;
    *head = a.head;
  } else {
    const skewen::Edge e = graph->graph.edges()[static_cast<size_t>(index)];
    *tail = e.u;
    *head = e.v;
  }
  return SKW_OK;
}

skw_status skw_graph_girth(const skw_graph* graph, int* out) {
  if (!graph || !out) return null_argument();
  return guarded([&] {
    *out = skewen::girth(graph->graph).value_or(0);
    return SKW_OK;
  });
}

skw_status skw_graph_is_unicyclic(const skw_graph* graph, int* out) {
  if (!graph || !out) return null_argument();
  *out = skewen::is_unicyclic(graph->graph) ? 1 : 0;
  return SKW_OK;
}

skw_status skw_graph_family_name(const skw_graph* graph, char* out, size_t capacity, size_t* length) {
  if (!graph) return null_argument();
  return guarded([&] { return copy_string(skewen::family_name(graph->graph).value_or(""), out, capacity, length); });
}

skw_status skw_graph_serialize(const skw_graph* graph, char* out, size_t capacity, size_t* length) {
  if (!graph) return null_argument();
  return guarded([&] {
    const std::string text =
        graph->oriented ? skewen::serialize_graph(*graph->oriented) : skewen::serialize_graph(graph->graph);
    return copy_string(text, out, capacity, length);
  });
}

skw_status skw_graph_orient_unicyclic(const skw_graph* graph, skw_sign sign, skw_graph** out) {
  if (!graph || !out) return null_argument();
  return guarded([&] {
    *out = wrap(skewen::orient_unicyclic(graph->graph, to_sign(sign)));
    return SKW_OK;
  });
}

skw_status skw_graph_orient_mask(const skw_graph* graph, uint64_t mask, skw_graph** out) {
  if (!graph || !out) return null_argument();
  return guarded([&] {
    *out = wrap(skewen::orient_by_mask(graph->graph, mask));
    return SKW_OK;
  });
}

skw_status skw_graph_switch(const skw_graph* graph, const int* vertices, size_t count, skw_graph** out) {
  if (!graph || !out || (count > 0 && !vertices)) return null_argument();
  return guarded([&] {
    std::vector<skewen::Vertex> w(vertices, vertices + count);
    *out = wrap(skewen::apply_switching(need_oriented(graph), w));
    return SKW_OK;
  });
}

skw_status skw_graph_switching_equivalent(const skw_graph* a, const skw_graph* b, int* out) {
  if (!a || !b || !out) return null_argument();
  return guarded([&] {
    *out = skewen::switching_equivalent(need_oriented(a), need_oriented(b)) ? 1 : 0;
    return SKW_OK;
  });
}

skw_status skw_matching_counts(const skw_graph* graph, int64_t* out, size_t capacity, size_t* length) {
  if (!graph) return null_argument();
  return guarded([&] {
    const auto m = skewen::matching_counts(graph->graph);
    const std::vector<int64_t> counts(m.counts.begin(), m.counts.end());
    return copy_out(counts, out, capacity, length);
  });
}

skw_status skw_coeffs(const skw_graph* graph, skw_engine engine, int64_t* out, size_t capacity, size_t* length) {
  if (!graph) return null_argument();
  return guarded([&] {
    const skewen::OrientedGraph& og = need_oriented(graph);
    skewen::SkewCoeffs c;
    switch (engine) {
      case SKW_ENGINE_COMBINATORIAL: c = skewen::coeffs_combinatorial(og); break;
      case SKW_ENGINE_UNICYCLIC: c = skewen::coeffs_unicyclic(og); break;
      case SKW_ENGINE_EXACT: c = skewen::coeffs_exact(og); break;
      default: throw std::invalid_argument("unknown engine");
    }
    const std::vector<int64_t> values(c.coeffs.begin(), c.coeffs.end());
    return copy_out(values, out, capacity, length);
  });
}

skw_status skw_family_coeffs(skw_closed_family family, int n, int girth, skw_sign sign, int64_t* out,
                             size_t capacity, size_t* length) {
  return guarded([&] {
    skewen::ClosedFamily f{};
    switch (family) {
      case SKW_CLOSED_SNL: f = skewen::ClosedFamily::snl; break;
      case SKW_CLOSED_SN3: f = skewen::ClosedFamily::sn3; break;
      case SKW_CLOSED_CYCLE: f = skewen::ClosedFamily::cycle; break;
      default: throw std::invalid_argument("unknown closed-form family");
    }
    const skewen::SkewCoeffs c = skewen::family_coeffs(f, n, girth, to_sign(sign));
    const std::vector<int64_t> values(c.coeffs.begin(), c.coeffs.end());
    return copy_out(values, out, capacity, length);
  });
}

skw_status skw_verify_pendant_recurrence(const skw_graph* graph, int u, int v, int* holds) {
  if (!graph || !holds) return null_argument();
  return guarded([&] {
    *holds = skewen::verify_pendant_recurrence(need_oriented(graph), skewen::make_edge(u, v)) ? 1 : 0;
    return SKW_OK;
  });
}

skw_status skw_quasi_compare(const int64_t* lhs, const int64_t* rhs, size_t length, skw_order* out) {
  if (!lhs || !rhs || !out || length == 0) return null_argument();
  return guarded([&] {
    const int order = static_cast<int>(2 * (length - 1));
    const skewen::SkewCoeffs a{order, std::vector<std::int64_t>(lhs, lhs + length)};
    const skewen::SkewCoeffs b{order, std::vector<std::int64_t>(rhs, rhs + length)};
    switch (skewen::quasi_compare(a, b)) {
      case skewen::OrderRelation::equal: *out = SKW_ORDER_EQUAL; break;
      case skewen::OrderRelation::greater: *out = SKW_ORDER_GREATER; break;
      case skewen::OrderRelation::less: *out = SKW_ORDER_LESS; break;
      case skewen::OrderRelation::incomparable: *out = SKW_ORDER_INCOMPARABLE; break;
    }
    return SKW_OK;
  });
}

skw_status skw_spectrum(const skw_graph* graph, double* out, size_t capacity, size_t* length) {
  if (!graph) return null_argument();
  return guarded([&] { return copy_out(skewen::spectrum(need_oriented(graph)).values, out, capacity, length); });
}

skw_status skw_energy_spectral(const skw_graph* graph, double* out) {
  if (!graph || !out) return null_argument();
  return guarded([&] {
    *out = skewen::energy_spectral(need_oriented(graph));
    return SKW_OK;
  });
}

skw_status skw_energy_coulson(const skw_graph* graph, double tolerance, double* out) {
  if (!graph || !out) return null_argument();
  return guarded([&] {
    *out = skewen::energy_coulson(need_oriented(graph), tolerance);
    return SKW_OK;
  });
}

skw_status skw_energy_report_compute(const skw_graph* graph, double tolerance, skw_energy_report* out) {
  if (!graph || !out) return null_argument();
  return guarded([&] {
    const skewen::EnergyReport r = skewen::energy_report(need_oriented(graph), tolerance);
    *out = skw_energy_report{r.spectral, r.coulson, r.tolerance, r.agreement ? 1 : 0};
    return SKW_OK;
  });
}

skw_status skw_quartic_energy(int64_t b2, int64_t b4, double* out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = skewen::quartic_energy(b2, b4);
    return SKW_OK;
  });
}

skw_status skw_count_unicyclic(int n, int dedupe, uint64_t* out) {
  if (!out) return null_argument();
  return guarded([&] {
    uint64_t count = 0;
    skewen::for_each_unicyclic(n, dedupe != 0, [&](const skewen::Graph&) {
      ++count;
      return true;
    });
    *out = count;
    return SKW_OK;
  });
}

skw_status skw_search_extremal(int n, skw_objective objective, int top, skw_search** out) {
  if (!out) return null_argument();
  return guarded([&] {
    if (objective != SKW_OBJECTIVE_MIN && objective != SKW_OBJECTIVE_MAX)
      throw std::invalid_argument("unknown objective");
    const auto obj = objective == SKW_OBJECTIVE_MIN ? skewen::Objective::min : skewen::Objective::max;
    *out = new skw_search{skewen::search_extremal(n, obj, top)};
    return SKW_OK;
  });
}

size_t skw_search_size(const skw_search* search) { return search ? search->records.size() : 0; }

skw_status skw_search_record(const skw_search* search, size_t index, skw_record_info* out) {
  if (!search || !out) return null_argument();
  if (index >= search->records.size()) return fail(SKW_ERR_INVALID_ARGUMENT, "record index out of range");
  const skewen::SearchRecord& r = search->records[index];
  static_assert(sizeof(int64_t) == sizeof(std::int64_t));
  *out = skw_record_info{r.group,
                         r.sign == skewen::Sign::plus ? SKW_SIGN_PLUS : SKW_SIGN_MINUS,
                         r.girth,
                         r.energy,
                         r.label.c_str(),
                         r.canonical_key.c_str(),
                         r.coeffs.coeffs.data(),
                         r.coeffs.coeffs.size()};
  return SKW_OK;
}

skw_status skw_search_graph(const skw_search* search, size_t index, skw_graph** out) {
  if (!search || !out) return null_argument();
  if (index >= search->records.size()) return fail(SKW_ERR_INVALID_ARGUMENT, "record index out of range");
  return guarded([&] {
    const skewen::SearchRecord& r = search->records[index];
    *out = wrap(skewen::orient_unicyclic(r.graph, r.sign));
    return SKW_OK;
  });
}

void skw_search_free(skw_search* search) { delete search; }

skw_status skw_verify_claims(int n, skw_report** out) {
  if (!out) return null_argument();
  return guarded([&] {
    *out = new skw_report{skewen::verify_claims(n)};
    return SKW_OK;
  });
}

int skw_report_order(const skw_report* report) { return report ? report->report.n : 0; }

size_t skw_report_size(const skw_report* report) { return report ? report->report.claims.size() : 0; }

skw_status skw_report_claim(const skw_report* report, size_t index, skw_claim_info* out) {
  if (!report || !out) return null_argument();
  if (index >= report->report.claims.size()) return fail(SKW_ERR_INVALID_ARGUMENT, "claim index out of range");
  const skewen::Claim& c = report->report.claims[index];
  *out = skw_claim_info{c.name.c_str(), c.expected.c_str(), c.observed.c_str(), c.pass ? 1 : 0};
  return SKW_OK;
}

int skw_report_all_pass(const skw_report* report) { return report && report->report.all_pass() ? 1 : 0; }

void skw_report_free(skw_report* report) { delete report; }

}  // extern "C"
