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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "skewen/skewen.h"

namespace {

skw_graph* parse(const std::string& text) {
  skw_graph* g = nullptr;
  REQUIRE(skw_graph_parse(text.data(), text.size(), &g) == SKW_OK);
  return g;
}

const char* kC4Minus = "4 4\n0 > 1\n1 > 2\n2 > 3\n3 > 0\n";

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(skw_version()) == "1.0.0");
  CHECK(std::string(skw_status_string(SKW_ERR_PARSE)) == "parse error");
}

TEST_CASE("parse errors surface status and message") {
  skw_graph* g = nullptr;
  const std::string bad = "3 2\n0 > 1\n0 > 1\n";
  CHECK(skw_graph_parse(bad.data(), bad.size(), &g) == SKW_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(skw_last_error()).find("line 3") == 0);
  CHECK(skw_graph_parse(bad.data(), bad.size(), nullptr) == SKW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("energy of the directed 4-cycle") {
  skw_graph* g = parse(kC4Minus);
  CHECK(skw_graph_order(g) == 4);
  CHECK(skw_graph_is_oriented(g) == 1);
  skw_energy_report r{};
  REQUIRE(skw_energy_report_compute(g, 1e-8, &r) == SKW_OK);
  CHECK(std::abs(r.spectral - 4.0) < 1e-9);
  CHECK(std::abs(r.coulson - 4.0) < 1e-8);
  CHECK(r.agreement == 1);
  skw_graph_free(g);
}

TEST_CASE("buffer protocol") {
  skw_graph* g = parse(kC4Minus);
  size_t len = 0;
  CHECK(skw_coeffs(g, SKW_ENGINE_EXACT, nullptr, 0, &len) == SKW_ERR_BUFFER_TOO_SMALL);
  CHECK(len == 3);
  std::vector<int64_t> c(len);
  CHECK(skw_coeffs(g, SKW_ENGINE_COMBINATORIAL, c.data(), c.size(), &len) == SKW_OK);
  CHECK(c == std::vector<int64_t>{1, 4, 0});
  int64_t small[2] = {-1, -1};
  CHECK(skw_coeffs(g, SKW_ENGINE_UNICYCLIC, small, 2, &len) == SKW_ERR_BUFFER_TOO_SMALL);
  CHECK(small[0] == 1);

  char name[8];
  CHECK(skw_graph_family_name(g, name, 2, &len) == SKW_ERR_BUFFER_TOO_SMALL);
  CHECK(len == 4);
  CHECK(skw_graph_family_name(g, name, sizeof name, &len) == SKW_OK);
  CHECK(std::string(name) == "C_4");

  std::vector<char> text(64);
  CHECK(skw_graph_serialize(g, text.data(), text.size(), &len) == SKW_OK);
  // Arcs come back in sorted edge order.
  CHECK(std::string(text.data()) == "4 4\n0 > 1\n3 > 0\n1 > 2\n2 > 3\n");
  skw_graph_free(g);
}

TEST_CASE("undirected graphs are rejected by orientation-dependent calls") {
  const int us[] = {0, 1, 2};
  const int vs[] = {1, 2, 0};
  skw_graph* g = nullptr;
  REQUIRE(skw_graph_from_edges(3, us, vs, 3, &g) == SKW_OK);
  double e = 0;
  CHECK(skw_energy_spectral(g, &e) == SKW_ERR_INVALID_ARGUMENT);
  int uni = 0;
  CHECK(skw_graph_is_unicyclic(g, &uni) == SKW_OK);
  CHECK(uni == 1);
  skw_graph* og = nullptr;
  REQUIRE(skw_graph_orient_unicyclic(g, SKW_SIGN_PLUS, &og) == SKW_OK);
  CHECK(skw_energy_spectral(og, &e) == SKW_OK);
  CHECK(e == doctest::Approx(2.0 * std::sqrt(3.0)));
  skw_graph_free(og);
  skw_graph_free(g);
}

TEST_CASE("domain and argument errors") {
  skw_graph* path = nullptr;
  REQUIRE(skw_graph_family(SKW_FAMILY_PATH, 4, 0, &path) == SKW_OK);
  skw_graph* og = nullptr;
  CHECK(skw_graph_orient_unicyclic(path, SKW_SIGN_PLUS, &og) == SKW_ERR_DOMAIN);
  REQUIRE(skw_graph_orient_mask(path, 0, &og) == SKW_OK);
  size_t len = 0;
  int64_t buf[4];
  CHECK(skw_coeffs(og, SKW_ENGINE_UNICYCLIC, buf, 4, &len) == SKW_ERR_DOMAIN);
  int girth = -1;
  CHECK(skw_graph_girth(og, &girth) == SKW_OK);
  CHECK(girth == 0);
  skw_graph_free(og);
  skw_graph_free(path);

  skw_graph* g = nullptr;
  CHECK(skw_graph_family(SKW_FAMILY_SNL, 4, 6, &g) == SKW_ERR_INVALID_ARGUMENT);
  skw_search* s = nullptr;
  CHECK(skw_search_extremal(12, SKW_OBJECTIVE_MIN, 1, &s) == SKW_ERR_INVALID_ARGUMENT);
  double q = 0;
  CHECK(skw_quartic_energy(1, 1, &q) == SKW_ERR_INVALID_ARGUMENT);
  CHECK(skw_quartic_energy(4, 4, &q) == SKW_OK);
  CHECK(q == doctest::Approx(4.0 * std::sqrt(2.0)));
  skw_graph_free(nullptr);
}

TEST_CASE("switching and quasi-order through the C API") {
  skw_graph* c4 = nullptr;
  REQUIRE(skw_graph_family(SKW_FAMILY_CYCLE, 4, 0, &c4) == SKW_OK);
  skw_graph *plus = nullptr, *minus = nullptr, *switched = nullptr;
  REQUIRE(skw_graph_orient_unicyclic(c4, SKW_SIGN_PLUS, &plus) == SKW_OK);
  REQUIRE(skw_graph_orient_unicyclic(c4, SKW_SIGN_MINUS, &minus) == SKW_OK);
  const int w[] = {1, 2};
  REQUIRE(skw_graph_switch(plus, w, 2, &switched) == SKW_OK);
  int eq = 0;
  CHECK(skw_graph_switching_equivalent(plus, switched, &eq) == SKW_OK);
  CHECK(eq == 1);
  CHECK(skw_graph_switching_equivalent(plus, minus, &eq) == SKW_OK);
  CHECK(eq == 0);

  const int64_t a[] = {1, 4, 4};
  const int64_t b[] = {1, 4, 0};
  skw_order rel{};
  CHECK(skw_quasi_compare(a, b, 3, &rel) == SKW_OK);
  CHECK(rel == SKW_ORDER_GREATER);

  int holds = 0;
  CHECK(skw_verify_pendant_recurrence(plus, 0, 1, &holds) == SKW_ERR_INVALID_ARGUMENT);

  int64_t fam[3];
  size_t len = 0;
  CHECK(skw_family_coeffs(SKW_CLOSED_CYCLE, 4, 4, SKW_SIGN_PLUS, fam, 3, &len) == SKW_OK);
  CHECK(fam[2] == 4);

  for (skw_graph* g : {c4, plus, minus, switched}) skw_graph_free(g);
}

TEST_CASE("search and verification handles") {
  skw_search* s = nullptr;
  REQUIRE(skw_search_extremal(5, SKW_OBJECTIVE_MIN, 1, &s) == SKW_OK);
  REQUIRE(skw_search_size(s) == 2);
  skw_record_info info{};
  REQUIRE(skw_search_record(s, 0, &info) == SKW_OK);
  CHECK(info.group == 1);
  CHECK(info.coeff_count == 3);
  CHECK(info.coeffs[2] == 2);
  CHECK(std::abs(info.energy - 2.0 * std::sqrt(5.0 + 2.0 * std::sqrt(2.0))) < 1e-9);
  skw_graph* g = nullptr;
  REQUIRE(skw_search_graph(s, 1, &g) == SKW_OK);
  CHECK(skw_graph_is_oriented(g) == 1);
  skw_graph_free(g);
  CHECK(skw_search_record(s, 2, &info) == SKW_ERR_INVALID_ARGUMENT);
  skw_search_free(s);

  skw_report* r = nullptr;
  REQUIRE(skw_verify_claims(6, &r) == SKW_OK);
  CHECK(skw_report_order(r) == 6);
  CHECK(skw_report_all_pass(r) == 1);
  REQUIRE(skw_report_size(r) > 0);
  skw_claim_info c{};
  REQUIRE(skw_report_claim(r, 0, &c) == SKW_OK);
  CHECK(c.pass == 1);
  skw_report_free(r);

  uint64_t count = 0;
  CHECK(skw_count_unicyclic(6, 1, &count) == SKW_OK);
  CHECK(count == 13);
  CHECK(skw_count_unicyclic(5, 0, &count) == SKW_OK);
  CHECK(count == 222);
}
