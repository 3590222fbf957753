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

// Constructive side of the spectral lower bound for non-bipartite Cayley
// graphs. If T has an eigenvalue below -1 + zeta for small zeta, a set A of
// roughly half the group is extracted from the S.S multigraph, right
// translates of A split into near-equal and near-disjoint ones, and the
// near-equal translates form an index-2 subgroup H missing S. Every step is
// recomputed here from exact set counts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cayspec/cayley.hpp"
#include "cayspec/cheeger.hpp"
#include "cayspec/rational.hpp"
#include "cayspec/spectral.hpp"
#include "cayspec/subgroups.hpp"

namespace cayspec {

/// Exponent of the absolute constant alpha = 2^9 in the spectral bound.
inline constexpr int kAlphaLog2 = 9;
inline constexpr std::size_t kExhaustiveExpansionLimit = 12;
inline constexpr std::size_t kExpansionSamples = 10000;

class ProofError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// eps^4 / (2^9 d^6 (d+1)^2).
double zeta_max(const Rational& eps, std::size_t d);
/// d^2 sqrt(2 zeta (2 - zeta)); zeta must lie in [0, 2].
double beta_of_zeta(double zeta, std::size_t d);
/// 2^9 d^6 (d+1)^2.
double gamma_constant(std::size_t d);

struct ProofParameters {
  Rational eps;
  std::size_t d = 0;
  double zeta = 0.0;
  double beta = 0.0;
  double z = 0.0;  // (d beta / eps^2)(eps + d + 2)
  double r = 0.0;  // 1 - z
  double zeta_max = 0.0;
  bool lemma_regime = false;    // zeta <= eps^2 / (4 d^4)
  bool theorem_regime = false;  // zeta <= zeta_max
  bool beta_condition = false;  // beta <= eps^2 / (2^3 sqrt(2) d (d+1))

  static ProofParameters make(const Rational& eps, std::size_t d, double zeta);
  bool out_of_regime() const { return !theorem_regime; }
  double eps_value() const { return eps.to_double(); }
};

struct ComplementExpansionCheck {
  bool holds = false;               // both inequalities on every tested set
  bool complement_bound = false;    // d q |SA\A| >= p |G\A| for |A| >= n/2
  bool internal_step = false;       // d |SA\A| >= |SA^c \ A^c| for all A
  bool exhaustive = false;
  std::size_t tested = 0;
  std::int64_t min_slack = 0;       // min of d q |SA\A| - p |G\A| over large A
  VertexSet worst_witness;
};
/// Checks the large-set expansion estimate for eps = p/q. Exhaustive for
/// n <= 12, otherwise 10^4 seeded uniform samples. Throws ProofError when
/// the graph is not an eps-expander.
ComplementExpansionCheck lemma1_verify(const CayleyGraph& graph, const Rational& eps,
                                       const SearchOptions& opts = {});

struct CandidateSet {
  bool hypothesis_met = false;
  double t_min = 0.0;
  double gap = 0.0;  // 1 + t_min
  std::optional<VertexSet> a;
  ImageExcess excess;
  bool ratio_bound = false;  // |S'A \ A| < beta |A|
};
/// When t_min < -1 + zeta, returns the vertex-Cheeger minimiser of the S.S
/// multigraph and checks the strict ratio bound on it.
CandidateSet find_candidate_A(const CayleyGraph& graph, const ProofParameters& params,
                              const SpectralSummary& s, const SearchOptions& opts = {});

struct SetProperties {
  std::size_t a_size = 0;
  double size_lower = 0.0;  // n / (2 + beta + d beta / eps)
  bool size_bounds = false;
  std::size_t s_image_overlap = 0;  // |SA ∩ A|
  double overlap_threshold = 0.0;   // beta / eps |A|
  bool overlap_bound = false;
  std::size_t max_translate_delta = 0;  // max over s, g of |sAg Δ (Ag)^c|
  double translate_threshold = 0.0;     // beta (1 + d/eps + 2/eps) |A|
  bool translate_bound = false;

  bool all() const { return size_bounds && overlap_bound && translate_bound; }
};
SetProperties lemma2_property_check(const CayleyGraph& graph, const VertexSet& a,
                                    const ProofParameters& params);

/// |A ∩ Ag| for every g.
std::vector<std::size_t> translate_profile(const CayleyGraph& graph, const VertexSet& a);

enum class TranslateCase { kSmall, kLarge, kViolation };

struct Dichotomy {
  std::vector<TranslateCase> cases;
  bool holds = false;
  std::optional<Element> violation;
};
/// Every count must be <= z|A| or >= (1 - z)|A|. Throws ProofError if z >= 1/2.
Dichotomy dichotomy_check(const std::vector<std::size_t>& profile, std::size_t a_size,
                          const ProofParameters& params);

struct BSetCheck {
  Element g = 0;
  std::size_t b_size = 0;
  std::size_t complement_size = 0;
  bool complement_identity = false;  // G \ B == A Δ Ag
  std::size_t image_delta = 0;       // |SB Δ B|
  std::size_t complement_image_delta = 0;
  std::size_t summed_delta = 0;      // Σ_s |sB Δ B|
  std::size_t summed_complement_delta = 0;
  double delta_threshold = 0.0;      // 2 d beta (1 + d/eps + 2/eps) |A|
  bool delta_bounds = false;
  bool small_branch = false;         // |B| <= n/2
  double size_threshold = 0.0;       // (2 d beta / eps^2)(eps + d + 2) |A|
  bool size_bound = false;
  bool overlap_bound = false;        // the matching dichotomy inequality
  bool holds = false;
};
BSetCheck b_set_bounds_check(const CayleyGraph& graph, const VertexSet& a, Element g,
                             const ProofParameters& params);

struct SubgroupConstruction {
  VertexSet h;
  double threshold = 0.0;  // r |A|
  bool contains_identity = false;
  bool inverse_closed = false;
  bool closed = false;
  std::optional<std::pair<Element, Element>> closure_witness;
  bool large = false;   // 3|H| > n
  bool proper = false;  // H != G
  bool index_two = false;
  bool triangle_step = false;  // |A ∩ Agh| >= (2r - 1)|A| for g, h in H
  bool success = false;
  std::string failure;
};
SubgroupConstruction construct_H(const CayleyGraph& graph, const VertexSet& a,
                                 const std::vector<std::size_t>& profile,
                                 const ProofParameters& params);

struct DisjointnessCheck {
  bool disjoint = false;
  bool matches_structural = false;
  std::optional<Element> shared;    // some t in S ∩ H
  std::size_t left_overlap = 0;     // |tA ∩ A|
  std::size_t right_overlap = 0;    // |A ∩ At|
  bool overlap_upper = false;       // |tA ∩ A| <= beta/eps |A|
  bool overlap_lower = false;       // |A ∩ At| >= r |A|
  double r = 0.0;
  double beta_over_eps = 0.0;
  bool constants_separate = false;  // r > beta / eps
  bool regime_constants = false;    // r > 0.82 and beta / eps < 0.09
};
DisjointnessCheck final_contradiction_check(const CayleyGraph& graph, const VertexSet& h,
                                            const VertexSet& a, const ProofParameters& params);

enum class ProofOutcome {
  kHypothesisNotMet,
  kBipartiteCertified,
  kConstructionFailed,
  kContradiction,
};

struct ProofTrace {
  ProofParameters params;
  bool hypothesis_met = false;
  double t_min = 0.0;
  double gap = 0.0;
  std::optional<CandidateSet> candidate;
  std::optional<SetProperties> properties;
  std::vector<std::size_t> profile;
  std::optional<Dichotomy> dichotomy;
  std::vector<BSetCheck> b_sets;
  std::optional<SubgroupConstruction> subgroup;
  std::optional<DisjointnessCheck> disjointness;
  ProofOutcome outcome = ProofOutcome::kHypothesisNotMet;
  std::string failure;
};

struct PipelineOptions {
  std::optional<double> zeta;   // default zeta_max(eps, d)
  std::optional<Rational> eps;  // default the exact vertex Cheeger constant
  SearchOptions search;
};
ProofTrace run_pipeline(const CayleyGraph& graph, const PipelineOptions& opts = {});
ProofTrace run_pipeline(const CayleyGraph& graph, const SpectralSummary& s,
                        const PipelineOptions& opts);

const char* to_string(ProofOutcome o);
const char* to_string(TranslateCase c);

}  // namespace cayspec
