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
#include "cayspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>

#include "cayspec/subgroups.hpp"

namespace cayspec {
namespace {

using nlohmann::ordered_json;

std::string cap_reason(const CapExceeded& e) {
  return e.cap() + "=" + std::to_string(e.limit());
}

double h4_over_gamma(const Rational& h, std::size_t d) {
  const double x = h.to_double();
  return x * x * x * x / gamma_constant(d);
}

CheckResult skipped(std::string name, std::string reason) {
  CheckResult c;
  c.name = std::move(name);
  c.status = CheckStatus::kSkipped;
  c.reason = std::move(reason);
  return c;
}

CheckResult from_margin(std::string name, double margin, double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.margin = margin;
  c.status = margin >= -tol ? CheckStatus::kPass : CheckStatus::kFail;
  return c;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

ordered_json elements_json(const VertexSet& v) {
  ordered_json out = ordered_json::array();
  for (auto x : v.elements()) out.push_back(x);
  return out;
}

ordered_json optional_rational(const std::optional<Rational>& q) {
  return q ? to_json(*q) : ordered_json(nullptr);
}

ordered_json optional_double(const std::optional<double>& x) {
  return x ? ordered_json(*x) : ordered_json(nullptr);
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
    case CheckStatus::kNotApplicable: return "not_applicable";
  }
  return "unknown";
}

CheckResult theorem_bound_check(const Rational& h, const SpectralSummary& s, bool bipartite,
                                double tol) {
  CheckResult c;
  c.name = "spectral_lower_bound";
  if (bipartite) {
    c.status = CheckStatus::kNotApplicable;
    c.reason = "bipartite";
    return c;
  }
  const double bound = 2.0 - h4_over_gamma(h, s.d);
  c = from_margin(c.name, bound - s.lambda_max(), tol);
  c.details = {{"lambda_max", s.lambda_max()}, {"bound", bound}};
  return c;
}

CheckResult abstract_interval_check(const Rational& h, const SpectralSummary& s,
                                    bool bipartite, double tol) {
  CheckResult c;
  c.name = "spectral_interval";
  if (bipartite) {
    c.status = CheckStatus::kNotApplicable;
    c.reason = "bipartite";
    return c;
  }
  if (s.n < 2) {
    c.status = CheckStatus::kNotApplicable;
    c.reason = "no_nontrivial_eigenvalues";
    return c;
  }
  const double hd = h.to_double();
  const double dd = static_cast<double>(s.d);
  const double lower = -1.0 + h4_over_gamma(h, s.d);
  const double upper = 1.0 - hd * hd / (2.0 * dd * dd);
  // t is ascending and t[n-1] = 1 is the trivial eigenvalue.
  const double lower_margin = s.t.front() - lower;
  const double upper_margin = upper - s.t[s.n - 2];
  c = from_margin(c.name, std::min(lower_margin, upper_margin), tol);
  c.details = {{"lower", lower},
               {"upper", upper},
               {"lower_margin", lower_margin},
               {"upper_margin", upper_margin}};
  return c;
}

namespace {

struct GraphFacts {
  SpectralSummary s;
  bool bipartite = false;
  std::optional<Rational> h;
};

std::optional<GraphFacts> graph_facts(const CayleyGraph& graph, double tol,
                                      const SearchOptions& opts, CheckResult& skip) {
  GraphFacts f;
  f.s = spectrum(graph);
  if (!is_connected(f.s, tol)) {
    skip.status = CheckStatus::kSkipped;
    skip.reason = "disconnected";
    return std::nullopt;
  }
  f.bipartite = is_bipartite_structural(graph).has_value();
  try {
    f.h = vertex_cheeger(graph, opts).value;
  } catch (const CapExceeded& e) {
    if (!f.bipartite) {
      skip.status = CheckStatus::kSkipped;
      skip.reason = cap_reason(e);
      return std::nullopt;
    }
    f.h = Rational(0);  // unused: bipartite checks are not applicable
  }
  return f;
}

}  // namespace

CheckResult theorem_bound_check(const CayleyGraph& graph, double tol, const SearchOptions& opts) {
  CheckResult skip;
  skip.name = "spectral_lower_bound";
  const auto f = graph_facts(graph, tol, opts, skip);
  if (!f) return skip;
  return theorem_bound_check(*f->h, f->s, f->bipartite, tol);
}

CheckResult abstract_interval_check(const CayleyGraph& graph, double tol,
                                    const SearchOptions& opts) {
  CheckResult skip;
  skip.name = "spectral_interval";
  const auto f = graph_facts(graph, tol, opts, skip);
  if (!f) return skip;
  return abstract_interval_check(*f->h, f->s, f->bipartite, tol);
}

std::optional<double> tightness_ratio(const Rational& h, const SpectralSummary& s,
                                      bool bipartite) {
  if (bipartite || h <= Rational(0)) return std::nullopt;
  return (2.0 - s.lambda_max()) / h4_over_gamma(h, s.d);
}

bool VerificationReport::all_pass() const {
  if (!error.empty()) return false;
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::kFail; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool proof_trace_consistent(const ProofTrace& t, bool bipartite) {
  if (!bipartite) return !t.hypothesis_met;
  if (t.outcome != ProofOutcome::kBipartiteCertified) return false;
  if (!t.candidate || !t.candidate->ratio_bound) return false;
  if (!t.properties || !t.properties->all()) return false;
  if (!t.dichotomy || !t.dichotomy->holds) return false;
  for (const auto& b : t.b_sets)
    if (!b.holds) return false;
  if (!t.subgroup || !t.subgroup->success || !t.subgroup->triangle_step) return false;
  return t.disjointness && t.disjointness->disjoint && t.disjointness->matches_structural;
}

VerificationReport full_report(const CayleyGraph& graph, const std::string& group_spec,
                               const std::string& gens_spec, const VerifyOptions& opts) {
  VerificationReport r;
  r.group = group_spec;
  r.gens_spec = gens_spec;
  for (auto g : graph.gens().elements()) {
    r.gens.push_back(g);
    r.gen_labels.push_back(graph.group().label(g));
  }
  r.n = graph.order();
  r.d = graph.degree();
  const double tol = opts.tol;

  static const char* const kDependent[] = {
      "bipartite_equivalence", "spectral_lower_bound", "spectral_interval",
      "cheeger_buser",         "vertex_edge_relation", "dual_cheeger_sandwich",
      "complement_expansion",  "square_spectrum",      "proof_pipeline"};
  auto skip_rest = [&](const std::string& reason) {
    for (const char* name : kDependent) r.checks.push_back(skipped(name, reason));
  };

  if (r.n > kMaxDenseOrder) {
    r.checks.push_back(skipped("connectivity", "max_dense_order=" +
                                                   std::to_string(kMaxDenseOrder)));
    skip_rest("max_dense_order=" + std::to_string(kMaxDenseOrder));
    return r;
  }
  try {
    r.spectrum = spectrum(graph);
  } catch (const SpectralError& e) {
    r.error = e.what();
    return r;
  }
  const SpectralSummary& s = *r.spectrum;

  r.connected = is_connected(s, tol);
  {
    CheckResult c;
    c.name = "connectivity";
    c.status = r.connected ? CheckStatus::kPass : CheckStatus::kFail;
    c.margin = s.lambda2();
    if (!r.connected) c.reason = "lambda_2 <= tol";
    r.checks.push_back(c);
  }
  r.bipartite_spectral = is_bipartite_spectral(s, tol);
  if (!r.connected) {
    skip_rest("disconnected");
    return r;
  }

  std::string structural_reason;
  try {
    r.bipartite_structural = is_bipartite_structural(graph).has_value();
  } catch (const SubgroupError& e) {
    structural_reason = "max_quotient_rank=" + std::to_string(kMaxQuotientRank);
  }
  if (r.bipartite_structural) {
    CheckResult c;
    c.name = "bipartite_equivalence";
    c.status = *r.bipartite_structural == *r.bipartite_spectral ? CheckStatus::kPass
                                                                 : CheckStatus::kFail;
    c.details = {{"lambda_max", s.lambda_max()}};
    if (c.status == CheckStatus::kFail) c.reason = "spectral and structural verdicts differ";
    r.checks.push_back(c);
  } else {
    r.checks.push_back(skipped("bipartite_equivalence", structural_reason));
  }
  const bool bipartite = r.bipartite_structural.value_or(*r.bipartite_spectral);

  std::string exact_reason;
  std::string dual_reason;
  try {
    r.h = vertex_cheeger(graph, opts.search).value;
    r.edge_h = edge_cheeger(graph, opts.search).value;
  } catch (const CapExceeded& e) {
    exact_reason = cap_reason(e);
  }
  try {
    r.dual_h = dual_cheeger(graph, opts.search).value;
  } catch (const CapExceeded& e) {
    dual_reason = cap_reason(e);
  }

  if (r.h) {
    r.checks.push_back(theorem_bound_check(*r.h, s, bipartite, tol));
    r.theorem_margin = r.checks.back().margin;
    r.checks.push_back(abstract_interval_check(*r.h, s, bipartite, tol));
    r.tightness = tightness_ratio(*r.h, s, bipartite);
  } else {
    r.checks.push_back(skipped("spectral_lower_bound", exact_reason));
    r.checks.push_back(skipped("spectral_interval", exact_reason));
  }

  if (r.edge_h) {
    const auto cb = cheeger_buser_check(*r.edge_h, s, tol);
    CheckResult c = from_margin("cheeger_buser", std::min(cb.lower_margin, cb.upper_margin), tol);
    c.details = {{"lambda2", cb.lambda2},
                 {"lower_margin", cb.lower_margin},
                 {"upper_margin", cb.upper_margin}};
    r.checks.push_back(c);

    const auto ve = vertex_edge_relation_check(graph, *r.h, *r.edge_h);
    CheckResult v;
    v.name = "vertex_edge_relation";
    v.status = ve.holds ? CheckStatus::kPass : CheckStatus::kFail;
    const Rational lower = *r.edge_h - *r.h / Rational(static_cast<std::int64_t>(r.d));
    const Rational upper = *r.h - *r.edge_h;
    v.margin = std::min(lower, upper).to_double();
    v.details = {{"lower_margin", lower.to_double()}, {"upper_margin", upper.to_double()}};
    r.checks.push_back(v);
  } else {
    r.checks.push_back(skipped("cheeger_buser", exact_reason));
    r.checks.push_back(skipped("vertex_edge_relation", exact_reason));
  }

  if (r.dual_h) {
    const auto bj = bauer_jost_check(*r.dual_h, s, tol);
    CheckResult c;
    c.name = "dual_cheeger_sandwich";
    c.status = bj.holds ? CheckStatus::kPass : CheckStatus::kFail;
    c.margin = std::min(bj.lower_margin, bj.upper_margin);
    c.details = {{"lambda_max", bj.lambda_max},
                 {"lower_margin", bj.lower_margin},
                 {"upper_margin", bj.upper_margin},
                 {"equivalence_holds", bj.equivalence_holds ? 1.0 : 0.0}};
    if (!bj.equivalence_holds) c.reason = "dual_h == 1 disagrees with lambda_n == 2";
    r.checks.push_back(c);
  } else {
    r.checks.push_back(skipped("dual_cheeger_sandwich", dual_reason));
  }

  if (r.h) {
    const auto lc = lemma1_verify(graph, *r.h, opts.search);
    CheckResult c;
    c.name = "complement_expansion";
    c.status = lc.holds ? CheckStatus::kPass : CheckStatus::kFail;
    c.margin = static_cast<double>(lc.min_slack);
    c.details = {{"tested", static_cast<double>(lc.tested)},
                 {"exhaustive", lc.exhaustive ? 1.0 : 0.0},
                 {"internal_step", lc.internal_step ? 1.0 : 0.0}};
    r.checks.push_back(c);
  } else {
    r.checks.push_back(skipped("complement_expansion", exact_reason));
  }

  {
    const auto sq = square_spectrum_consistency(graph, tol);
    CheckResult c = from_margin("square_spectrum", tol - sq.max_abs_diff, 0.0);
    c.details = {{"max_abs_diff", sq.max_abs_diff}};
    r.checks.push_back(c);
  }

  if (r.h) {
    CheckResult c;
    c.name = "proof_pipeline";
    try {
      PipelineOptions po;
      po.zeta = opts.zeta;
      po.eps = *r.h;
      po.search = opts.search;
      r.proof = run_pipeline(graph, s, po);
      if (proof_trace_consistent(*r.proof, bipartite)) {
        c.status = CheckStatus::kPass;
      } else if (r.proof->params.out_of_regime()) {
        c.status = CheckStatus::kNotApplicable;
        c.reason = "out_of_regime";
      } else {
        c.status = CheckStatus::kFail;
        c.reason = r.proof->failure.empty() ? to_string(r.proof->outcome) : r.proof->failure;
      }
      c.details = {{"zeta", r.proof->params.zeta}, {"gap", r.proof->gap}};
    } catch (const CapExceeded& e) {
      c.status = CheckStatus::kSkipped;
      c.reason = cap_reason(e);
    } catch (const ProofError& e) {
      c.status = CheckStatus::kFail;
      c.reason = e.what();
    }
    r.checks.push_back(c);
  } else {
    r.checks.push_back(skipped("proof_pipeline", exact_reason));
  }
  return r;
}

std::vector<SweepItem> parse_sweep_items(const std::vector<std::string>& specs) {
  std::vector<SweepItem> out;
  for (const auto& raw : specs) {
    std::string group = trim(raw);
    std::string gens = "default";
    const auto pos = group.find("gens=");
    if (pos != std::string::npos) {
      gens = trim(group.substr(pos + 5));
      group = trim(group.substr(0, pos));
    }
    if (group.empty()) throw GroupError("empty group spec in sweep item '" + raw + "'");
    for (auto& g : GroupSpec::expand_range(group)) out.push_back({g, gens});
  }
  return out;
}

std::vector<std::string> acceptance_suite_specs() {
  return {
      "cyclic:3..16 gens=±1",
      "cyclic:3..16 gens=±1,±2",
      "dihedral:3..6 gens=r,r^-1,s",
      "symmetric:3 gens=default",
      "symmetric:4 gens=default",
      "product:cyclic:2xcyclic:2xcyclic:2 gens=1,2,4",
      "product:cyclic:2xcyclic:2xcyclic:2 gens=1,2,3,4",
      "product:cyclic:2xcyclic:2xcyclic:2 gens=all",
      "product:cyclic:2xcyclic:3 gens=default",
      "product:cyclic:3xcyclic:3 gens=default",
      "product:cyclic:2xcyclic:4 gens=default",
      "product:cyclic:2xsymmetric:3 gens=default",
      "product:cyclic:2xdihedral:3 gens=default",
  };
}

VerificationReport report_for_item(const SweepItem& item, const VerifyOptions& opts) {
  try {
    const GroupSpec spec = GroupSpec::parse(item.group);
    FiniteGroup group = spec.build();
    auto gens = parse_generators(group, spec, item.gens);
    auto graph = CayleyGraph::build(std::move(group), GeneratingSet(std::move(gens)));
    return full_report(graph, item.group, item.gens, opts);
  } catch (const std::exception& e) {
    VerificationReport r;
    r.group = item.group;
    r.gens_spec = item.gens;
    r.error = e.what();
    return r;
  }
}

std::vector<VerificationReport> sweep(const std::vector<SweepItem>& items,
                                      const VerifyOptions& opts) {
  std::vector<VerificationReport> out(items.size());
  const int workers = std::max(1, opts.search.workers);
  const auto count = static_cast<std::ptrdiff_t>(items.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) if (workers > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] = report_for_item(items[static_cast<std::size_t>(i)], opts);
  return out;
}

ordered_json to_json(const Rational& q) {
  return ordered_json{{"num", q.num()}, {"den", q.den()}};
}

ordered_json to_json(const ProofTrace& t) {
  ordered_json j;
  const ProofParameters& p = t.params;
  j["params"] = {{"eps", to_json(p.eps)},
                 {"d", p.d},
                 {"zeta", p.zeta},
                 {"zeta_max", p.zeta_max},
                 {"beta", p.beta},
                 {"z", p.z},
                 {"r", p.r},
                 {"lemma_regime", p.lemma_regime},
                 {"theorem_regime", p.theorem_regime},
                 {"beta_condition", p.beta_condition},
                 {"out_of_regime", p.out_of_regime()}};
  j["hypothesis_met"] = t.hypothesis_met;
  j["t_min"] = t.t_min;
  j["gap"] = t.gap;
  j["outcome"] = to_string(t.outcome);
  j["failure"] = t.failure;
  if (t.candidate && t.candidate->a) {
    j["candidate"] = {{"a", elements_json(*t.candidate->a)},
                      {"identified_excess", t.candidate->excess.identified},
                      {"weighted_excess", t.candidate->excess.weighted},
                      {"ratio_bound", t.candidate->ratio_bound}};
  }
  if (t.properties) {
    const auto& q = *t.properties;
    j["properties"] = {{"a_size", q.a_size},
                       {"size_lower", q.size_lower},
                       {"size_bounds", q.size_bounds},
                       {"s_image_overlap", q.s_image_overlap},
                       {"overlap_threshold", q.overlap_threshold},
                       {"overlap_bound", q.overlap_bound},
                       {"max_translate_delta", q.max_translate_delta},
                       {"translate_threshold", q.translate_threshold},
                       {"translate_bound", q.translate_bound}};
  }
  if (!t.profile.empty()) j["profile"] = t.profile;
  if (t.dichotomy) {
    ordered_json cases = ordered_json::array();
    for (auto c : t.dichotomy->cases) cases.push_back(to_string(c));
    j["dichotomy"] = {{"holds", t.dichotomy->holds},
                      {"violation", t.dichotomy->violation
                                        ? ordered_json(*t.dichotomy->violation)
                                        : ordered_json(nullptr)},
                      {"cases", cases}};
  }
  if (!t.b_sets.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& b : t.b_sets)
      rows.push_back({{"g", b.g},
                      {"b_size", b.b_size},
                      {"small_branch", b.small_branch},
                      {"summed_delta", b.summed_delta},
                      {"summed_complement_delta", b.summed_complement_delta},
                      {"delta_threshold", b.delta_threshold},
                      {"size_threshold", b.size_threshold},
                      {"holds", b.holds}});
    j["b_sets"] = rows;
  }
  if (t.subgroup) {
    const auto& h = *t.subgroup;
    ordered_json witness = nullptr;
    if (h.closure_witness) witness = {h.closure_witness->first, h.closure_witness->second};
    j["subgroup"] = {{"h", elements_json(h.h)},
                     {"threshold", h.threshold},
                     {"contains_identity", h.contains_identity},
                     {"inverse_closed", h.inverse_closed},
                     {"closed", h.closed},
                     {"closure_witness", witness},
                     {"large", h.large},
                     {"proper", h.proper},
                     {"index_two", h.index_two},
                     {"triangle_step", h.triangle_step},
                     {"success", h.success},
                     {"failure", h.failure}};
  }
  if (t.disjointness) {
    const auto& x = *t.disjointness;
    j["disjointness"] = {
        {"disjoint", x.disjoint},
        {"matches_structural", x.matches_structural},
        {"shared", x.shared ? ordered_json(*x.shared) : ordered_json(nullptr)},
        {"left_overlap", x.left_overlap},
        {"right_overlap", x.right_overlap},
        {"overlap_upper", x.overlap_upper},
        {"overlap_lower", x.overlap_lower},
        {"r", x.r},
        {"beta_over_eps", x.beta_over_eps},
        {"constants_separate", x.constants_separate},
        {"regime_constants", x.regime_constants}};
  }
  return j;
}

ordered_json to_json(const VerificationReport& r) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = r.group;
  j["gens"] = r.gens;
  j["gens_spec"] = r.gens_spec;
  j["gen_labels"] = r.gen_labels;
  j["n"] = r.n;
  j["d"] = r.d;
  j["connected"] = r.connected;
  j["h"] = optional_rational(r.h);
  j["edge_h"] = optional_rational(r.edge_h);
  j["dual_h"] = optional_rational(r.dual_h);
  if (r.spectrum)
    j["spectrum"] = {{"t", r.spectrum->t}, {"lambda", r.spectrum->lambda}};
  else
    j["spectrum"] = nullptr;
  auto verdict = [](const std::optional<bool>& b) {
    return b ? ordered_json(*b) : ordered_json(nullptr);
  };
  j["bipartite"] = {{"spectral", verdict(r.bipartite_spectral)},
                    {"structural", verdict(r.bipartite_structural)}};
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj = {{"name", c.name},
                       {"status", to_string(c.status)},
                       {"margin", optional_double(c.margin)},
                       {"reason", c.reason}};
    if (!c.details.empty()) {
      ordered_json d;
      for (const auto& [k, v] : c.details) d[k] = v;
      cj["details"] = d;
    }
    checks.push_back(cj);
  }
  j["checks"] = checks;
  j["theorem_margin"] = optional_double(r.theorem_margin);
  j["tightness"] = optional_double(r.tightness);
  j["proof_trace"] = r.proof ? to_json(*r.proof) : ordered_json(nullptr);
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

ordered_json sweep_json(const std::vector<VerificationReport>& reports) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["count"] = reports.size();
  ordered_json all = ordered_json::array();
  ordered_json summary = ordered_json::array();
  for (const auto& r : reports) {
    all.push_back(to_json(r));
    ordered_json row;
    row["group"] = r.group;
    row["gens"] = r.gens_spec;
    row["n"] = r.n;
    row["d"] = r.d;
    row["h"] = optional_rational(r.h);
    row["edge_h"] = optional_rational(r.edge_h);
    row["dual_h"] = optional_rational(r.dual_h);
    row["lambda2"] = r.spectrum ? ordered_json(r.spectrum->lambda2()) : ordered_json(nullptr);
    row["lambda_max"] =
        r.spectrum ? ordered_json(r.spectrum->lambda_max()) : ordered_json(nullptr);
    row["bipartite"] = r.bipartite_structural ? ordered_json(*r.bipartite_structural)
                                              : ordered_json(nullptr);
    row["theorem_margin"] = optional_double(r.theorem_margin);
    row["tightness"] = optional_double(r.tightness);
    summary.push_back(row);
  }
  j["reports"] = all;
  j["summary"] = summary;
  return j;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "group",  "gens",    "n",          "d",         "h",              "edge_h",
      "dual_h", "lambda2", "lambda_max", "bipartite", "theorem_margin", "tightness"};
  return cols;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string csv_row(const VerificationReport& r) {
  auto rational = [](const std::optional<Rational>& q) { return q ? q->to_string() : ""; };
  auto real = [](const std::optional<double>& x) { return x ? format_double(*x) : ""; };
  std::vector<std::string> f = {
      csv_field(r.group),
      csv_field(r.gens_spec),
      std::to_string(r.n),
      std::to_string(r.d),
      rational(r.h),
      rational(r.edge_h),
      rational(r.dual_h),
      r.spectrum ? format_double(r.spectrum->lambda2()) : "",
      r.spectrum ? format_double(r.spectrum->lambda_max()) : "",
      r.bipartite_structural ? (*r.bipartite_structural ? "true" : "false") : "",
      real(r.theorem_margin),
      real(r.tightness)};
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) out += (i ? "," : "") + f[i];
  return out;
}

}  // namespace cayspec
