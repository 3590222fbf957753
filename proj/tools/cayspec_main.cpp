// Copyright 2026 The cayspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cayspec: Cayley graph spectra, exact Cheeger constants and the index-2
// subgroup construction from the command line.
//
// Exit codes: 0 success, 1 an inequality check failed, 2 input or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayspec/cayley.hpp"
#include "cayspec/cheeger.hpp"
#include "cayspec/group.hpp"
#include "cayspec/proof_engine.hpp"
#include "cayspec/spectral.hpp"
#include "cayspec/subgroups.hpp"
#include "cayspec/verify.hpp"

namespace {

using cayspec::Rational;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string group;
  std::string gens = "default";
  std::string format = "text";
  double tol = cayspec::kDefaultTolerance;
  std::size_t max_exact = cayspec::kDefaultMaxExact;
  std::size_t max_dual = cayspec::kDefaultMaxDual;
  std::string zeta = "auto";
  int workers = 1;
  std::string out;
  std::vector<std::string> families;
  std::string suite;
};

/// Thrown for bad input discovered after flag parsing.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cayspec::SearchOptions search_options(const Config& c) {
  cayspec::SearchOptions o;
  o.max_exact = c.max_exact;
  o.max_dual = c.max_dual;
  o.workers = c.workers;
  return o;
}

std::optional<double> parse_zeta(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0.0))
    throw InputError("--zeta must be 'auto' or a positive number, got '" + text + "'");
  return v;
}

cayspec::CayleyGraph build_graph(const Config& c) {
  if (c.group.empty()) throw InputError("--group is required");
  const auto spec = cayspec::GroupSpec::parse(c.group);
  auto group = spec.build();
  auto gens = cayspec::parse_generators(group, spec, c.gens);
  return cayspec::CayleyGraph::build(std::move(group),
                                     cayspec::GeneratingSet(std::move(gens)));
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string set_text(const cayspec::VertexSet& v) {
  std::string out = "{";
  for (auto x : v.elements()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

ordered_json set_json(const cayspec::VertexSet& v) {
  ordered_json out = ordered_json::array();
  for (auto x : v.elements()) out.push_back(x);
  return out;
}

ordered_json header_json(const Config& c, const cayspec::CayleyGraph& g) {
  ordered_json j;
  j["schema_version"] = cayspec::kSchemaVersion;
  j["group"] = c.group;
  ordered_json gens = ordered_json::array();
  for (auto s : g.gens().elements()) gens.push_back(s);
  j["gens"] = gens;
  j["n"] = g.order();
  j["d"] = g.degree();
  return j;
}

int run_spectrum(const Config& c, std::ostream& out) {
  const auto g = build_graph(c);
  const auto s = cayspec::spectrum(g);
  const bool connected = cayspec::is_connected(s, c.tol);
  const bool bipartite = cayspec::is_bipartite_spectral(s, c.tol);
  if (c.format == "json") {
    auto j = header_json(c, g);
    j["t"] = s.t;
    j["lambda"] = s.lambda;
    j["lambda2"] = s.lambda2();
    j["lambda_max"] = s.lambda_max();
    j["connected"] = connected;
    j["bipartite_spectral"] = bipartite;
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "index,t,lambda\n";
    for (std::size_t i = 0; i < s.n; ++i)
      out << i << "," << fmt(s.t[i]) << "," << fmt(s.lambda[i]) << "\n";
  } else {
    out << "group " << c.group << "  n=" << s.n << "  d=" << s.d << "\n";
    out << "lambda_2 = " << fmt(s.lambda2()) << "  lambda_max = " << fmt(s.lambda_max())
        << "\n";
    out << "connected = " << (connected ? "yes" : "no")
        << "  bipartite = " << (bipartite ? "yes" : "no") << "\n";
    out << "t:";
    for (double t : s.t) out << " " << fmt(t);
    out << "\n";
  }
  return kExitOk;
}

int run_cheeger(const Config& c, std::ostream& out) {
  const auto g = build_graph(c);
  const auto opts = search_options(c);
  auto attempt = [&](auto&& fn) -> std::pair<std::optional<cayspec::CheegerCertificate>,
                                             std::string> {
    try {
      return {fn(), ""};
    } catch (const cayspec::CapExceeded& e) {
      return {std::nullopt, e.cap() + "=" + std::to_string(e.limit())};
    }
  };
  const auto [h, h_reason] = attempt([&] { return cayspec::vertex_cheeger(g, opts); });
  const auto [eh, eh_reason] = attempt([&] { return cayspec::edge_cheeger(g, opts); });
  const auto [dh, dh_reason] = attempt([&] { return cayspec::dual_cheeger(g, opts); });

  if (c.format == "json") {
    auto j = header_json(c, g);
    auto cert = [](const std::optional<cayspec::CheegerCertificate>& k,
                   const std::string& reason, bool dual) {
      if (!k) return ordered_json{{"skipped", reason}};
      ordered_json e = cayspec::to_json(k->value);
      e["witness"] = set_json(k->witness);
      if (dual) e["witness2"] = set_json(k->witness2);
      return e;
    };
    j["h"] = cert(h, h_reason, false);
    j["edge_h"] = cert(eh, eh_reason, false);
    j["dual_h"] = cert(dh, dh_reason, true);
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "quantity,value,witness\n";
    auto row = [&](const char* name, const std::optional<cayspec::CheegerCertificate>& k) {
      out << name << "," << (k ? k->value.to_string() : "") << ","
          << (k ? "\"" + set_text(k->witness) + "\"" : "") << "\n";
    };
    row("h", h);
    row("edge_h", eh);
    row("dual_h", dh);
  } else {
    auto line = [&](const char* name, const std::optional<cayspec::CheegerCertificate>& k,
                    const std::string& reason) {
      out << name << " = ";
      if (!k) {
        out << "skipped (" << reason << ")\n";
        return;
      }
      out << k->value.to_string() << "  witness " << set_text(k->witness);
      if (k->kind == cayspec::CheegerKind::kDual) out << " / " << set_text(k->witness2);
      out << "\n";
    };
    line("h", h, h_reason);
    line("edge_h", eh, eh_reason);
    line("dual_h", dh, dh_reason);
  }
  return kExitOk;
}

int run_subgroups(const Config& c, std::ostream& out) {
  const auto g = build_graph(c);
  const auto subs = cayspec::index2_subgroups(g.group());
  const auto normal = cayspec::squares_commutators_subgroup(g.group());
  const auto s = g.gens().as_set(g.order());
  const bool bipartite = cayspec::is_bipartite_structural(g).has_value();
  if (c.format == "json") {
    auto j = header_json(c, g);
    j["squares_commutators_order"] = normal.elements.size();
    ordered_json list = ordered_json::array();
    for (const auto& h : subs)
      list.push_back({{"elements", set_json(h.elements)},
                      {"disjoint_from_s", (h.elements & s).empty()}});
    j["index2_subgroups"] = list;
    j["bipartite_structural"] = bipartite;
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "elements,disjoint_from_s\n";
    for (const auto& h : subs)
      out << "\"" << set_text(h.elements) << "\"," << ((h.elements & s).empty() ? "true" : "false")
          << "\n";
  } else {
    out << "squares and commutators: order " << normal.elements.size() << ", index "
        << normal.index << "\n";
    out << subs.size() << " index-2 subgroup(s)\n";
    for (const auto& h : subs)
      out << "  " << set_text(h.elements)
          << ((h.elements & s).empty() ? "  disjoint from S" : "") << "\n";
    out << "bipartite = " << (bipartite ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int run_proof(const Config& c, std::ostream& out) {
  const auto g = build_graph(c);
  cayspec::PipelineOptions po;
  po.zeta = parse_zeta(c.zeta);
  po.search = search_options(c);
  const auto s = cayspec::spectrum(g);
  if (!cayspec::is_connected(s, c.tol)) throw InputError("graph is disconnected");
  const auto trace = cayspec::run_pipeline(g, s, po);
  const bool bipartite = cayspec::is_bipartite_structural(g).has_value();
  const bool consistent = cayspec::proof_trace_consistent(trace, bipartite);
  const bool forced = trace.params.out_of_regime();
  const std::string banner = "OUT OF REGIME: zeta = " + fmt(trace.params.zeta) +
                             " exceeds zeta_max = " + fmt(trace.params.zeta_max) +
                             " (forced mode)";

  if (c.format == "json") {
    auto j = header_json(c, g);
    if (forced) j["banner"] = banner;
    j["bipartite_structural"] = bipartite;
    j["consistent"] = consistent;
    j["proof_trace"] = cayspec::to_json(trace);
    out << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    out << "group,eps,zeta,zeta_max,beta,z,r,hypothesis_met,outcome,h\n";
    out << c.group << "," << trace.params.eps.to_string() << "," << fmt(trace.params.zeta)
        << "," << fmt(trace.params.zeta_max) << "," << fmt(trace.params.beta) << ","
        << fmt(trace.params.z) << "," << fmt(trace.params.r) << ","
        << (trace.hypothesis_met ? "true" : "false") << "," << to_string(trace.outcome) << ","
        << (trace.subgroup ? "\"" + set_text(trace.subgroup->h) + "\"" : "") << "\n";
  } else {
    if (forced) out << "*** " << banner << " ***\n";
    const auto& p = trace.params;
    out << "eps = " << p.eps.to_string() << "  d = " << p.d << "\n";
    out << "zeta = " << fmt(p.zeta) << "  zeta_max = " << fmt(p.zeta_max)
        << "  beta = " << fmt(p.beta) << "  z = " << fmt(p.z) << "  r = " << fmt(p.r) << "\n";
    out << "t_min = " << fmt(trace.t_min) << "  gap = " << fmt(trace.gap)
        << "  hypothesis_met = " << (trace.hypothesis_met ? "yes" : "no") << "\n";
    if (trace.candidate && trace.candidate->a)
      out << "A = " << set_text(*trace.candidate->a)
          << "  |S'A \\ A| = " << trace.candidate->excess.weighted << "\n";
    if (trace.subgroup) {
      out << "H = " << set_text(trace.subgroup->h) << "\n";
      out << "closed = " << (trace.subgroup->closed ? "yes" : "no")
          << "  index 2 = " << (trace.subgroup->index_two ? "yes" : "no") << "\n";
    }
    if (trace.disjointness)
      out << "H disjoint from S = " << (trace.disjointness->disjoint ? "yes" : "no")
          << "  matches structural = "
          << (trace.disjointness->matches_structural ? "yes" : "no") << "\n";
    out << "outcome = " << to_string(trace.outcome);
    if (!trace.failure.empty()) out << " (" << trace.failure << ")";
    out << "\n";
  }
  return consistent || forced ? kExitOk : kExitCheckFailed;
}

void write_report_text(const cayspec::VerificationReport& r, std::ostream& out) {
  out << r.group << " gens=" << r.gens_spec << "  n=" << r.n << "  d=" << r.d << "\n";
  if (!r.error.empty()) {
    out << "  error: " << r.error << "\n";
    return;
  }
  auto q = [](const std::optional<Rational>& x) { return x ? x->to_string() : "-"; };
  out << "  h=" << q(r.h) << "  edge_h=" << q(r.edge_h) << "  dual_h=" << q(r.dual_h) << "\n";
  for (const auto& c : r.checks) {
    out << "  " << c.name << ": " << to_string(c.status);
    if (c.margin) out << "  margin=" << fmt(*c.margin);
    if (!c.reason.empty()) out << "  (" << c.reason << ")";
    out << "\n";
  }
}

int run_verify(const Config& c, std::ostream& out) {
  const auto g = build_graph(c);
  cayspec::VerifyOptions vo;
  vo.tol = c.tol;
  vo.search = search_options(c);
  vo.zeta = parse_zeta(c.zeta);
  const auto r = cayspec::full_report(g, c.group, c.gens, vo);
  if (c.format == "json") {
    out << cayspec::to_json(r).dump(2) << "\n";
  } else if (c.format == "csv") {
    out << cayspec::csv_header() << "\n" << cayspec::csv_row(r) << "\n";
  } else {
    write_report_text(r, out);
  }
  if (!r.error.empty()) throw InputError(r.error);
  return r.all_pass() ? kExitOk : kExitCheckFailed;
}

int run_sweep(const Config& c, std::ostream& out) {
  std::vector<std::string> specs = c.families;
  if (c.suite == "acceptance") {
    const auto suite = cayspec::acceptance_suite_specs();
    specs.insert(specs.end(), suite.begin(), suite.end());
  } else if (!c.suite.empty()) {
    throw InputError("unknown suite '" + c.suite + "'");
  }
  cayspec::VerifyOptions vo;
  vo.tol = c.tol;
  vo.search = search_options(c);
  vo.zeta = parse_zeta(c.zeta);
  const auto reports = cayspec::sweep(cayspec::parse_sweep_items(specs), vo);

  if (c.format == "json") {
    out << cayspec::sweep_json(reports).dump(2) << "\n";
  } else if (c.format == "csv") {
    out << cayspec::csv_header() << "\n";
    for (const auto& r : reports) out << cayspec::csv_row(r) << "\n";
  } else {
    for (const auto& r : reports) write_report_text(r, out);
  }
  bool failed = false;
  bool errored = false;
  for (const auto& r : reports) {
    if (!r.error.empty()) {
      errored = true;
      std::cerr << "error: " << r.group << " gens=" << r.gens_spec << ": " << r.error << "\n";
    } else if (!r.all_pass()) {
      failed = true;
    }
  }
  if (failed) return kExitCheckFailed;
  return errored ? kExitUsage : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley graph spectra, Cheeger constants and index-2 subgroups"};
  app.require_subcommand(1, 1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool needs_group) {
    auto* g = sub->add_option("--group", cfg.group,
                              "cyclic:N | dihedral:N | symmetric:N | product:AxB | "
                              "perm:<cycles;...> | table:<path>");
    if (needs_group) g->required();
    sub->add_option("--gens", cfg.gens, "generator list, e.g. 1,4 or ±1,±2 or default");
    sub->add_option("--format", cfg.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--tol", cfg.tol, "spectral tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-exact", cfg.max_exact, "vertex/edge Cheeger size cap")
        ->check(CLI::Range(std::size_t{1}, cayspec::kKernelWordLimit));
    sub->add_option("--max-dual", cfg.max_dual, "dual Cheeger size cap")
        ->check(CLI::Range(std::size_t{1}, cayspec::kKernelWordLimit));
    sub->add_option("--zeta", cfg.zeta, "proof proximity to -1, or auto");
    sub->add_option("--workers", cfg.workers, "OpenMP threads")->check(CLI::Range(1, 1024));
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "normalized spectrum of C(G, S)");
  auto* cheeger = app.add_subcommand("cheeger", "exact vertex, edge and dual Cheeger constants");
  auto* subgroups = app.add_subcommand("subgroups", "index-2 subgroups and bipartiteness");
  auto* proof = app.add_subcommand("proof", "run the index-2 subgroup construction");
  auto* verify = app.add_subcommand("verify", "all inequality checks for one graph");
  auto* sweep = app.add_subcommand("sweep", "verify every member of one or more families");
  for (auto* sub : {spectrum, cheeger, subgroups, proof, verify}) add_common(sub, true);
  add_common(sweep, false);
  sweep->add_option("--family", cfg.families,
                    "item '<group spec> [gens=<list>]', ranges like cyclic:3..16 allowed");
  sweep->add_option("--suite", cfg.suite, "built-in item list")
      ->check(CLI::IsMember({"acceptance"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "error: cannot open output file '" << cfg.out << "'\n";
      return kExitUsage;
    }
  }
  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*spectrum) code = run_spectrum(cfg, buffer);
    else if (*cheeger) code = run_cheeger(cfg, buffer);
    else if (*subgroups) code = run_subgroups(cfg, buffer);
    else if (*proof) code = run_proof(cfg, buffer);
    else if (*verify) code = run_verify(cfg, buffer);
    else code = run_sweep(cfg, buffer);
  } catch (const std::exception& e) {
    std::string msg = e.what();
    for (auto& ch : msg)
      if (ch == '\n') ch = ' ';
    std::cerr << "error: " << msg << "\n";
    code = kExitUsage;
  }
  (cfg.out.empty() ? std::cout : file) << buffer.str();
  return code;
}
