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

// Command-line front end. Talks to the library only through skewen.h.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skewen/skewen.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

// Carries a library status out of nested helpers.
struct Failure {
  skw_status status;
  std::string message;
};

void check(skw_status s) {
  if (s != SKW_OK) throw Failure{s, skw_last_error()};
}

struct GraphDeleter {
  void operator()(skw_graph* g) const { skw_graph_free(g); }
};
using GraphPtr = std::unique_ptr<skw_graph, GraphDeleter>;

struct SearchDeleter {
  void operator()(skw_search* s) const { skw_search_free(s); }
};
struct ReportDeleter {
  void operator()(skw_report* r) const { skw_report_free(r); }
};

// 9 significant digits, then re-read so the JSON writer emits exactly that.
double round9(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  double out = v;
  std::from_chars(buf, res.ptr, out);
  return out;
}

std::string real_text(double v) { return Json(round9(v)).dump(); }

template <class T, class F>
std::vector<T> fetch(F&& call) {
  size_t length = 0;
  const skw_status probe = call(nullptr, 0, &length);
  if (probe != SKW_OK && probe != SKW_ERR_BUFFER_TOO_SMALL) check(probe);
  std::vector<T> out(length);
  check(call(out.data(), out.size(), &length));
  return out;
}

std::string fetch_string(const std::function<skw_status(char*, size_t, size_t*)>& call) {
  std::vector<char> buf = fetch<char>(call);
  return buf.empty() ? std::string() : std::string(buf.data());
}

GraphPtr load_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{SKW_ERR_INVALID_ARGUMENT, "cannot open " + path};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  skw_graph* g = nullptr;
  const skw_status s = skw_graph_parse(text.data(), text.size(), &g);
  if (s != SKW_OK) throw Failure{s, path + ": " + skw_last_error()};
  return GraphPtr(g);
}

void require_oriented(const skw_graph* g) {
  if (!skw_graph_is_oriented(g))
    throw Failure{SKW_ERR_INVALID_ARGUMENT, "input has undirected edges; this command needs every edge as an arc"};
}

std::vector<int64_t> coeffs_of(const skw_graph* g, skw_engine engine) {
  return fetch<int64_t>([&](int64_t* o, size_t c, size_t* l) { return skw_coeffs(g, engine, o, c, l); });
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_ints(const std::vector<int64_t>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

Json real_array(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(round9(x));
  return a;
}

// Shared options. Each subcommand registers only the ones it uses.
struct Options {
  std::string input;
  int n = 0;
  int girth = 0;
  std::string sign = "plus";
  std::string objective = "min";
  int top = 1;
  double tol = 1e-8;
  std::string method = "both";
  std::string engine = "exact";
  std::string family;
  std::string format = "json";
  bool dedupe = true;
};

// One table of output, rendered as a JSON object or as CSV rows.
struct Output {
  Json json = Json::object();
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;

  void print(const std::string& format) const {
    if (format == "json") {
      std::cout << json.dump() << "\n";
      return;
    }
    auto line = [](const std::vector<std::string>& cells) {
      std::string out;
      for (size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
      return out;
    };
    std::cout << line(csv_header) << "\n";
    for (const auto& r : csv_rows) std::cout << line(r) << "\n";
  }
};

skw_sign parse_sign(const std::string& s) { return s == "minus" ? SKW_SIGN_MINUS : SKW_SIGN_PLUS; }

int cmd_energy(const Options& o, Output& out) {
  GraphPtr g = load_graph(o.input);
  require_oriented(g.get());
  std::optional<double> spectral, coulson;
  std::optional<bool> agreement;
  if (o.method == "both") {
    skw_energy_report r{};
    check(skw_energy_report_compute(g.get(), o.tol, &r));
    spectral = r.spectral;
    coulson = r.coulson;
    agreement = r.agreement != 0;
  } else if (o.method == "spectral") {
    double e = 0;
    check(skw_energy_spectral(g.get(), &e));
    spectral = e;
  } else {
    double e = 0;
    check(skw_energy_coulson(g.get(), o.tol, &e));
    coulson = e;
  }
  out.csv_header = {"method", "spectral", "coulson", "agreement"};
  std::vector<std::string> row{o.method, spectral ? real_text(*spectral) : "", coulson ? real_text(*coulson) : "",
                               agreement ? (*agreement ? "true" : "false") : ""};
  out.csv_rows.push_back(row);
  if (spectral) out.json["spectral"] = round9(*spectral);
  if (coulson) out.json["coulson"] = round9(*coulson);
  if (agreement) out.json["agreement"] = *agreement;
  if (agreement && !*agreement) {
    std::cerr << "error: spectral and Coulson energies differ beyond tolerance " << o.tol << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_spectrum(const Options& o, Output& out) {
  GraphPtr g = load_graph(o.input);
  require_oriented(g.get());
  const auto mags = fetch<double>([&](double* p, size_t c, size_t* l) { return skw_spectrum(g.get(), p, c, l); });
  out.json["order"] = skw_graph_order(g.get());
  out.json["magnitudes"] = real_array(mags);
  out.csv_header = {"index", "magnitude"};
  for (size_t i = 0; i < mags.size(); ++i) out.csv_rows.push_back({std::to_string(i), real_text(mags[i])});
  return kExitOk;
}

int cmd_charpoly(const Options& o, Output& out) {
  GraphPtr g = load_graph(o.input);
  require_oriented(g.get());
  out.csv_header = {"engine", "coeffs"};
  if (o.engine != "all") {
    const std::map<std::string, skw_engine> engines{{"combinatorial", SKW_ENGINE_COMBINATORIAL},
                                                    {"unicyclic", SKW_ENGINE_UNICYCLIC},
                                                    {"exact", SKW_ENGINE_EXACT}};
    const auto c = coeffs_of(g.get(), engines.at(o.engine));
    out.json["engine"] = o.engine;
    out.json["coeffs"] = c;
    out.csv_rows.push_back({o.engine, csv_quote(join_ints(c))});
    return kExitOk;
  }

  int unicyclic = 0;
  check(skw_graph_is_unicyclic(g.get(), &unicyclic));
  const auto exact = coeffs_of(g.get(), SKW_ENGINE_EXACT);
  const auto comb = coeffs_of(g.get(), SKW_ENGINE_COMBINATORIAL);
  std::optional<std::vector<int64_t>> uni;
  if (unicyclic) uni = coeffs_of(g.get(), SKW_ENGINE_UNICYCLIC);
  const bool agree = comb == exact && (!uni || *uni == exact);

  out.json["combinatorial"] = comb;
  out.json["unicyclic"] = uni ? Json(*uni) : Json(nullptr);
  out.json["exact"] = exact;
  out.json["agreement"] = agree;
  out.csv_rows.push_back({"combinatorial", csv_quote(join_ints(comb))});
  out.csv_rows.push_back({"unicyclic", uni ? csv_quote(join_ints(*uni)) : ""});
  out.csv_rows.push_back({"exact", csv_quote(join_ints(exact))});
  if (!agree) {
    std::cerr << "error: coefficient engines disagree\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_family(const Options& o, Output& out) {
  const std::map<std::string, skw_family> kinds{
      {"path", SKW_FAMILY_PATH}, {"cycle", SKW_FAMILY_CYCLE}, {"pnl", SKW_FAMILY_PNL}, {"snl", SKW_FAMILY_SNL}};
  skw_graph* raw = nullptr;
  check(skw_graph_family(kinds.at(o.family), o.n, o.girth, &raw));
  GraphPtr base(raw);

  int unicyclic = 0;
  check(skw_graph_is_unicyclic(base.get(), &unicyclic));
  skw_graph* oriented = nullptr;
  if (unicyclic)
    check(skw_graph_orient_unicyclic(base.get(), parse_sign(o.sign), &oriented));
  else
    check(skw_graph_orient_mask(base.get(), 0, &oriented));
  GraphPtr g(oriented);

  const auto exact = coeffs_of(g.get(), SKW_ENGINE_EXACT);
  double energy = 0;
  check(skw_energy_spectral(g.get(), &energy));
  int girth = 0;
  check(skw_graph_girth(g.get(), &girth));
  const std::string name =
      fetch_string([&](char* p, size_t c, size_t* l) { return skw_graph_family_name(g.get(), p, c, l); });

  // Cross-check the closed forms where they exist.
  std::optional<std::vector<int64_t>> closed;
  if (o.family == "cycle" || o.family == "snl") {
    const skw_closed_family cf = o.family == "cycle" ? SKW_CLOSED_CYCLE : girth == 3 ? SKW_CLOSED_SN3 : SKW_CLOSED_SNL;
    closed = fetch<int64_t>([&](int64_t* p, size_t c, size_t* l) {
      return skw_family_coeffs(cf, o.n, girth, parse_sign(o.sign), p, c, l);
    });
  }

  std::vector<int> tails, heads;
  Json arcs = Json::array();
  for (int i = 0; i < skw_graph_edge_count(g.get()); ++i) {
    int t = 0, h = 0;
    check(skw_graph_arc(g.get(), i, &t, &h));
    arcs.push_back({t, h});
  }

  const bool signed_cycle = unicyclic && girth % 2 == 0;
  out.json["family"] = o.family;
  out.json["n"] = o.n;
  out.json["girth"] = girth == 0 ? Json(nullptr) : Json(girth);
  out.json["sign"] = signed_cycle ? Json(o.sign) : Json(nullptr);
  out.json["name"] = name;
  out.json["arcs"] = arcs;
  out.json["coeffs"] = exact;
  out.json["energy"] = round9(energy);
  if (closed) out.json["closed_form_agrees"] = *closed == exact;

  out.csv_header = {"family", "n", "girth", "sign", "name", "coeffs", "energy"};
  out.csv_rows.push_back({o.family, std::to_string(o.n), girth ? std::to_string(girth) : "",
                          signed_cycle ? o.sign : "", csv_quote(name), csv_quote(join_ints(exact)),
                          real_text(energy)});
  if (closed && *closed != exact) {
    std::cerr << "error: closed-form coefficients " << join_ints(*closed) << " differ from computed "
              << join_ints(exact) << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}

int cmd_search(const Options& o, Output& out) {
  skw_search* raw = nullptr;
  check(skw_search_extremal(o.n, o.objective == "max" ? SKW_OBJECTIVE_MAX : SKW_OBJECTIVE_MIN, o.top, &raw));
  std::unique_ptr<skw_search, SearchDeleter> search(raw);

  out.json["n"] = o.n;
  out.json["objective"] = o.objective;
  Json records = Json::array();
  out.csv_header = {"group", "label", "sign", "girth", "energy", "coeffs", "key"};
  for (size_t i = 0; i < skw_search_size(search.get()); ++i) {
    skw_record_info r{};
    check(skw_search_record(search.get(), i, &r));
    const std::vector<int64_t> coeffs(r.coeffs, r.coeffs + r.coeff_count);
    const char* sign = r.sign == SKW_SIGN_PLUS ? "plus" : "minus";
    records.push_back(Json{{"group", r.group},
                           {"label", r.label},
                           {"sign", sign},
                           {"girth", r.girth},
                           {"energy", round9(r.energy)},
                           {"coeffs", coeffs},
                           {"key", r.canonical_key}});
    out.csv_rows.push_back({std::to_string(r.group), csv_quote(r.label), sign, std::to_string(r.girth),
                            real_text(r.energy), csv_quote(join_ints(coeffs)), csv_quote(r.canonical_key)});
  }
  out.json["records"] = records;
  return kExitOk;
}

int cmd_verify(const Options& o, Output& out) {
  skw_report* raw = nullptr;
  check(skw_verify_claims(o.n, &raw));
  std::unique_ptr<skw_report, ReportDeleter> report(raw);

  Json claims = Json::array();
  out.csv_header = {"claim", "expected", "observed", "pass"};
  for (size_t i = 0; i < skw_report_size(report.get()); ++i) {
    skw_claim_info c{};
    check(skw_report_claim(report.get(), i, &c));
    claims.push_back(Json{{"claim", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass != 0}});
    out.csv_rows.push_back(
        {csv_quote(c.name), csv_quote(c.expected), csv_quote(c.observed), c.pass ? "true" : "false"});
  }
  const bool all = skw_report_all_pass(report.get()) != 0;
  out.json["n"] = o.n;
  out.json["all_pass"] = all;
  out.json["claims"] = claims;
  return all ? kExitOk : kExitInvariant;
}

int cmd_enumerate(const Options& o, Output& out) {
  uint64_t count = 0;
  check(skw_count_unicyclic(o.n, o.dedupe ? 1 : 0, &count));
  out.json["n"] = o.n;
  out.json["dedupe"] = o.dedupe;
  out.json["count"] = count;
  out.csv_header = {"n", "dedupe", "count"};
  out.csv_rows.push_back({std::to_string(o.n), o.dedupe ? "true" : "false", std::to_string(count)});
  return kExitOk;
}

int exit_code_for(skw_status s) {
  switch (s) {
    case SKW_ERR_INVARIANT:
    case SKW_ERR_INTERNAL:
      return kExitInvariant;
    default:
      return kExitUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew energy of oriented graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(skw_version()));

  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input", o.input, "Graph file, or - for stdin")->required(); };

  CLI::App* energy = app.add_subcommand("energy", "Skew energy of an oriented graph");
  add_input(energy);
  energy->add_option("--method", o.method, "spectral, coulson or both")
      ->check(CLI::IsMember({"spectral", "coulson", "both"}));
  energy->add_option("--tol", o.tol, "Coulson tolerance")->check(CLI::PositiveNumber);
  add_format(energy);

  CLI::App* spectrum = app.add_subcommand("spectrum", "Eigenvalue magnitudes of the skew-adjacency matrix");
  add_input(spectrum);
  add_format(spectrum);

  CLI::App* charpoly = app.add_subcommand("charpoly", "Coefficients b_0, b_2, ... of the characteristic polynomial");
  add_input(charpoly);
  charpoly->add_option("--engine", o.engine, "combinatorial, unicyclic, exact or all")
      ->check(CLI::IsMember({"combinatorial", "unicyclic", "exact", "all"}));
  add_format(charpoly);

  CLI::App* family = app.add_subcommand("family", "Build a named family member and report its coefficients");
  family->add_option("--family", o.family, "snl, pnl, cycle or path")
      ->required()
      ->check(CLI::IsMember({"snl", "pnl", "cycle", "path"}));
  family->add_option("--n", o.n, "Order")->required();
  family->add_option("--girth", o.girth, "Cycle length (snl, pnl)");
  family->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  add_format(family);

  CLI::App* search = app.add_subcommand("search", "Exhaustive extremal search over unicyclic graphs");
  search->add_option("--n", o.n, "Order")->required();
  search->add_option("--objective", o.objective, "min or max")->check(CLI::IsMember({"min", "max"}));
  search->add_option("--top", o.top, "Number of tie groups")->check(CLI::PositiveNumber);
  add_format(search);

  CLI::App* verify = app.add_subcommand("verify", "Check the extremal claims at one order");
  verify->add_option("--n", o.n, "Order")->required();
  add_format(verify);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Count unicyclic graphs");
  enumerate->add_option("--n", o.n, "Order")->required();
  enumerate->add_option("--dedupe", o.dedupe, "One per isomorphism class (true/false)");
  add_format(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Output out;
  int code = kExitOk;
  try {
    if (*energy) code = cmd_energy(o, out);
    else if (*spectrum) code = cmd_spectrum(o, out);
    else if (*charpoly) code = cmd_charpoly(o, out);
    else if (*family) code = cmd_family(o, out);
    else if (*search) code = cmd_search(o, out);
    else if (*verify) code = cmd_verify(o, out);
    else if (*enumerate) code = cmd_enumerate(o, out);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return exit_code_for(f.status);
  }
  out.print(o.format);
  return code;
}
