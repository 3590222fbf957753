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
#pragma once

// Per-graph verification reports and family sweeps. Every check stores the
// raw quantities it compared, so a pass or fail can be recomputed from the
// report alone.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayspec/cayley.hpp"
#include "cayspec/cheeger.hpp"
#include "cayspec/proof_engine.hpp"
#include "cayspec/rational.hpp"
#include "cayspec/spectral.hpp"
#include "json.hpp"

namespace cayspec {

inline constexpr int kSchemaVersion = 1;

enum class CheckStatus { kPass, kFail, kSkipped, kNotApplicable };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kSkipped;
  std::optional<double> margin;
  /// Machine-readable reason for skipped / not-applicable / failed results,
  /// e.g. "max_exact=24" or "bipartite".
  std::string reason;
  std::vector<std::pair<std::string, double>> details;
};

/// lambda_n <= 2 - h^4 / gamma + tol. Margin is (2 - h^4/gamma) - lambda_n.
/// Not applicable on bipartite graphs.
CheckResult theorem_bound_check(const Rational& h, const SpectralSummary& s, bool bipartite,
                                double tol = kDefaultTolerance);
CheckResult theorem_bound_check(const CayleyGraph& graph, double tol = kDefaultTolerance,
                                const SearchOptions& opts = {});

/// Every t_i with i >= 2 lies in [-1 + h^4/gamma, 1 - h^2/(2 d^2)]. Margin is
/// the smaller of the two end margins; both are in `details`.
CheckResult abstract_interval_check(const Rational& h, const SpectralSummary& s,
                                    bool bipartite, double tol = kDefaultTolerance);
CheckResult abstract_interval_check(const CayleyGraph& graph, double tol = kDefaultTolerance,
                                    const SearchOptions& opts = {});

/// (2 - lambda_n) / (h^4 / gamma); nullopt on bipartite graphs or h = 0.
std::optional<double> tightness_ratio(const Rational& h, const SpectralSummary& s,
                                      bool bipartite);

struct VerifyOptions {
  double tol = kDefaultTolerance;
  SearchOptions search;
  std::optional<double> zeta;  // proof pipeline; default zeta_max(h, d)
};

struct VerificationReport {
  std::string group;
  std::string gens_spec;
  std::vector<Element> gens;
  std::vector<std::string> gen_labels;
  std::size_t n = 0;
  std::size_t d = 0;
  bool connected = false;
  std::optional<Rational> h;
  std::optional<Rational> edge_h;
  std::optional<Rational> dual_h;
  std::optional<SpectralSummary> spectrum;
  std::optional<bool> bipartite_spectral;
  std::optional<bool> bipartite_structural;
  std::vector<CheckResult> checks;
  std::optional<ProofTrace> proof;
  std::optional<double> theorem_margin;
  std::optional<double> tightness;
  /// Set when the item could not be built or analysed at all.
  std::string error;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

/// True iff every recorded step of a completed trace agrees with the
/// expected outcome for the graph's structural verdict.
bool proof_trace_consistent(const ProofTrace& trace, bool bipartite);

/// Runs every applicable check. Never throws for mathematical failures;
/// checks over a cap are skipped with the cap as reason.
VerificationReport full_report(const CayleyGraph& graph, const std::string& group_spec,
                               const std::string& gens_spec, const VerifyOptions& opts = {});

struct SweepItem {
  std::string group;
  std::string gens = "default";
};

/// Parses "<group spec> [gens=<generator spec>]" items, expanding ranges.
std::vector<SweepItem> parse_sweep_items(const std::vector<std::string>& specs);
/// The built-in family suite used by the acceptance run.
std::vector<std::string> acceptance_suite_specs();

/// Builds the graph for one item and runs full_report; build errors land in
/// `error` instead of propagating.
VerificationReport report_for_item(const SweepItem& item, const VerifyOptions& opts = {});
/// One report per item in input order. Items run concurrently when
/// opts.search.workers > 1; output does not depend on the worker count.
std::vector<VerificationReport> sweep(const std::vector<SweepItem>& items,
                                      const VerifyOptions& opts = {});

nlohmann::ordered_json to_json(const Rational& q);
nlohmann::ordered_json to_json(const ProofTrace& trace);
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json sweep_json(const std::vector<VerificationReport>& reports);

/// Column order of the CSV summary.
const std::vector<std::string>& csv_columns();
std::string csv_header();
std::string csv_row(const VerificationReport& report);

}  // namespace cayspec
