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
#include "cayspec/proof_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace cayspec {
namespace {

constexpr std::uint64_t kSampleSeed = 0x5eedcafe2026ULL;

double pow_int(double base, int exp) {
  double out = 1.0;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

double gamma_constant(std::size_t d) {
  const double dd = static_cast<double>(d);
  return std::ldexp(1.0, kAlphaLog2) * pow_int(dd, 6) * (dd + 1) * (dd + 1);
}

double zeta_max(const Rational& eps, std::size_t d) {
  if (eps <= Rational(0) || d == 0) throw ProofError("zeta_max needs eps > 0 and d >= 1");
  return pow_int(eps.to_double(), 4) / gamma_constant(d);
}

double beta_of_zeta(double zeta, std::size_t d) {
  if (zeta < 0.0 || zeta > 2.0) throw ProofError("zeta must lie in [0, 2]");
  const double dd = static_cast<double>(d);
  return dd * dd * std::sqrt(2.0 * zeta * (2.0 - zeta));
}

ProofParameters ProofParameters::make(const Rational& eps, std::size_t d, double zeta) {
  if (eps <= Rational(0)) throw ProofError("expansion eps must be positive");
  if (d == 0) throw ProofError("degree must be positive");
  if (!(zeta > 0.0)) throw ProofError("zeta must be positive");
  ProofParameters p;
  p.eps = eps;
  p.d = d;
  p.zeta = zeta;
  p.beta = beta_of_zeta(zeta, d);
  const double e = eps.to_double();
  const double dd = static_cast<double>(d);
  p.z = dd * p.beta / (e * e) * (e + dd + 2.0);
  p.r = 1.0 - p.z;
  p.zeta_max = cayspec::zeta_max(eps, d);
  p.lemma_regime = zeta <= e * e / (4.0 * pow_int(dd, 4));
  p.theorem_regime = zeta <= p.zeta_max;
  p.beta_condition = p.beta <= e * e / (8.0 * std::sqrt(2.0) * dd * (dd + 1.0));
  return p;
}

ComplementExpansionCheck lemma1_verify(const CayleyGraph& graph, const Rational& eps,
                                       const SearchOptions& opts) {
  if (!expansion_check(graph, eps, opts).holds)
    throw ProofError("graph is not an eps-expander for eps = " + eps.to_string());
  const std::size_t n = graph.order();
  const auto d = static_cast<std::int64_t>(graph.degree());
  const std::int64_t p = eps.num();
  const std::int64_t q = eps.den();

  ComplementExpansionCheck out;
  out.complement_bound = true;
  out.internal_step = true;
  out.min_slack = std::numeric_limits<std::int64_t>::max();
  out.worst_witness = VertexSet(n);

  auto test = [&](const VertexSet& a) {
    ++out.tested;
    const VertexSet ac = a.complement();
    const auto out_a = static_cast<std::int64_t>((set_image(graph, a) - a).size());
    const auto out_ac = static_cast<std::int64_t>((set_image(graph, ac) - ac).size());
    if (d * out_a < out_ac) out.internal_step = false;
    if (2 * a.size() >= n) {
      const std::int64_t slack = d * q * out_a - p * static_cast<std::int64_t>(ac.size());
      if (slack < 0) out.complement_bound = false;
      if (slack < out.min_slack) {
        out.min_slack = slack;
        out.worst_witness = a;
      }
    }
  };

  if (n <= kExhaustiveExpansionLimit) {
    out.exhaustive = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      test(VertexSet::from_mask(n, mask));
  } else {
    std::mt19937_64 rng(kSampleSeed);
    std::bernoulli_distribution coin(0.5);
    test(VertexSet(n));
    test(VertexSet::full(n));
    for (std::size_t i = 0; i < kExpansionSamples; ++i) {
      VertexSet a(n);
      for (std::size_t v = 0; v < n; ++v)
        if (coin(rng)) a.insert(v);
      test(a);
    }
  }
  out.holds = out.complement_bound && out.internal_step;
  return out;
}

CandidateSet find_candidate_A(const CayleyGraph& graph, const ProofParameters& params,
                              const SpectralSummary& s, const SearchOptions& opts) {
  CandidateSet out;
  out.t_min = s.t_min();
  out.gap = 1.0 + out.t_min;
  out.hypothesis_met = out.t_min < -1.0 + params.zeta;
  if (!out.hypothesis_met) return out;
  const auto cert = vertex_cheeger(graph.square_neighbor_table(), opts);
  out.a = cert.witness;
  out.excess = multiset_image_excess(square_multiset(graph.gens(), graph.group()),
                                     graph.group(), *out.a);
  out.ratio_bound = static_cast<double>(out.excess.weighted) <
                    params.beta * static_cast<double>(out.a->size());
  return out;
}

SetProperties lemma2_property_check(const CayleyGraph& graph, const VertexSet& a,
                                    const ProofParameters& params) {
  const FiniteGroup& group = graph.group();
  const std::size_t n = graph.order();
  const double e = params.eps_value();
  const double d = static_cast<double>(params.d);
  const double size = static_cast<double>(a.size());

  SetProperties out;
  out.a_size = a.size();
  out.size_lower = static_cast<double>(n) / (2.0 + params.beta + d * params.beta / e);
  out.size_bounds = out.size_lower <= size && 2 * a.size() <= n;

  out.s_image_overlap = (set_image(graph, a) & a).size();
  out.overlap_threshold = params.beta / e * size;
  out.overlap_bound = static_cast<double>(out.s_image_overlap) <= out.overlap_threshold;

  out.translate_threshold = params.beta * (1.0 + d / e + 2.0 / e) * size;
  for (Element g = 0; g < n; ++g) {
    const VertexSet ag = right_translate(group, a, g);
    const VertexSet agc = ag.complement();
    for (auto s : graph.gens().elements())
      out.max_translate_delta =
          std::max(out.max_translate_delta, (left_translate(group, s, ag) ^ agc).size());
  }
  out.translate_bound =
      static_cast<double>(out.max_translate_delta) <= out.translate_threshold;
  return out;
}

std::vector<std::size_t> translate_profile(const CayleyGraph& graph, const VertexSet& a) {
  const std::size_t n = graph.order();
  std::vector<std::size_t> out(n);
  for (Element g = 0; g < n; ++g)
    out[g] = (a & right_translate(graph.group(), a, g)).size();
  return out;
}

Dichotomy dichotomy_check(const std::vector<std::size_t>& profile, std::size_t a_size,
                          const ProofParameters& params) {
  if (params.z >= 0.5)
    throw ProofError("translate dichotomy needs z < 1/2, got z = " + std::to_string(params.z));
  const double size = static_cast<double>(a_size);
  Dichotomy out;
  out.holds = true;
  out.cases.reserve(profile.size());
  for (std::size_t g = 0; g < profile.size(); ++g) {
    const double c = static_cast<double>(profile[g]);
    if (c <= params.z * size) {
      out.cases.push_back(TranslateCase::kSmall);
    } else if (c >= (1.0 - params.z) * size) {
      out.cases.push_back(TranslateCase::kLarge);
    } else {
      out.cases.push_back(TranslateCase::kViolation);
      if (out.holds) out.violation = static_cast<Element>(g);
      out.holds = false;
    }
  }
  return out;
}

BSetCheck b_set_bounds_check(const CayleyGraph& graph, const VertexSet& a, Element g,
                             const ProofParameters& params) {
  const FiniteGroup& group = graph.group();
  const std::size_t n = graph.order();
  const double e = params.eps_value();
  const double d = static_cast<double>(params.d);
  const double size = static_cast<double>(a.size());

  const VertexSet ag = right_translate(group, a, g);
  const VertexSet b = (a & ag) | (a | ag).complement();
  const VertexSet bc = b.complement();

  BSetCheck out;
  out.g = g;
  out.b_size = b.size();
  out.complement_size = bc.size();
  out.complement_identity = bc == (a ^ ag);
  out.image_delta = (set_image(graph, b) ^ b).size();
  out.complement_image_delta = (set_image(graph, bc) ^ bc).size();
  for (auto s : graph.gens().elements()) {
    out.summed_delta += (left_translate(group, s, b) ^ b).size();
    out.summed_complement_delta += (left_translate(group, s, bc) ^ bc).size();
  }
  out.delta_threshold = 2.0 * d * params.beta * (1.0 + d / e + 2.0 / e) * size;
  out.delta_bounds = out.image_delta <= out.summed_delta &&
                     out.complement_image_delta <= out.summed_complement_delta &&
                     static_cast<double>(out.summed_delta) <= out.delta_threshold &&
                     static_cast<double>(out.summed_complement_delta) <= out.delta_threshold;

  out.small_branch = 2 * out.b_size <= n;
  out.size_threshold = 2.0 * d * params.beta / (e * e) * (e + d + 2.0) * size;
  const double overlap = static_cast<double>((a & ag).size());
  if (out.small_branch) {
    out.size_bound = static_cast<double>(out.b_size) <= out.size_threshold;
    out.overlap_bound = overlap <= params.z * size;
  } else {
    out.size_bound = static_cast<double>(out.complement_size) <= out.size_threshold;
    out.overlap_bound = overlap >= (1.0 - params.z) * size;
  }
  out.holds = out.complement_identity && out.delta_bounds && out.size_bound && out.overlap_bound;
  return out;
}

SubgroupConstruction construct_H(const CayleyGraph& graph, const VertexSet& a,
                                 const std::vector<std::size_t>& profile,
                                 const ProofParameters& params) {
  const FiniteGroup& group = graph.group();
  const std::size_t n = graph.order();
  const double size = static_cast<double>(a.size());
  SubgroupConstruction out;
  out.threshold = params.r * size;
  out.h = VertexSet(n);
  for (Element g = 0; g < n; ++g)
    if (static_cast<double>(profile[g]) >= out.threshold) out.h.insert(g);

  out.contains_identity = out.h.contains(group.identity());
  out.inverse_closed = true;
  for (auto g : out.h.elements())
    if (!out.h.contains(group.inverse(static_cast<Element>(g)))) out.inverse_closed = false;
  std::pair<Element, Element> witness{};
  out.closed = is_subgroup(group, out.h, &witness);
  if (!out.closed && out.contains_identity && out.inverse_closed) out.closure_witness = witness;
  out.large = 3 * out.h.size() > n;
  out.proper = out.h.size() < n;
  out.index_two = out.closed && 2 * out.h.size() == n;

  out.triangle_step = true;
  const double floor = (2.0 * params.r - 1.0) * size;
  for (auto g : out.h.elements())
    for (auto h : out.h.elements())
      if (static_cast<double>(profile[group.mul(static_cast<Element>(g),
                                                static_cast<Element>(h))]) < floor)
        out.triangle_step = false;

  if (!out.contains_identity) {
    out.failure = "identity not in H";
  } else if (!out.inverse_closed) {
    out.failure = "H not closed under inverses";
  } else if (!out.closed) {
    out.failure = "closure fails at (" + std::to_string(witness.first) + ", " +
                  std::to_string(witness.second) + ")";
  } else if (!out.large) {
    out.failure = "|H| <= n/3";
  } else if (!out.proper) {
    out.failure = "H equals G";
  } else if (!out.index_two) {
    out.failure = "H does not have index 2";
  }
  out.success = out.failure.empty();
  return out;
}

DisjointnessCheck final_contradiction_check(const CayleyGraph& graph, const VertexSet& h,
                                            const VertexSet& a,
                                            const ProofParameters& params) {
  const FiniteGroup& group = graph.group();
  const double size = static_cast<double>(a.size());
  DisjointnessCheck out;
  out.r = params.r;
  out.beta_over_eps = params.beta / params.eps_value();
  out.constants_separate = out.r > out.beta_over_eps;
  out.regime_constants = out.r > 0.82 && out.beta_over_eps < 0.09;

  const VertexSet shared = graph.gens().as_set(graph.order()) & h;
  out.disjoint = shared.empty();
  if (out.disjoint) {
    for (const auto& cert : index2_subgroups(group))
      if (cert.elements == h) out.matches_structural = true;
    return out;
  }
  const auto t = static_cast<Element>(shared.elements().front());
  out.shared = t;
  out.left_overlap = (left_translate(group, t, a) & a).size();
  out.right_overlap = (a & right_translate(group, a, t)).size();
  out.overlap_upper = static_cast<double>(out.left_overlap) <= out.beta_over_eps * size;
  out.overlap_lower = static_cast<double>(out.right_overlap) >= out.r * size;
  return out;
}

ProofTrace run_pipeline(const CayleyGraph& graph, const SpectralSummary& s,
                        const PipelineOptions& opts) {
  const Rational h = vertex_cheeger(graph, opts.search).value;
  const Rational eps = opts.eps.value_or(h);
  if (eps <= Rational(0)) throw ProofError("expansion must be positive (graph disconnected?)");
  if (eps > h)
    throw ProofError("eps = " + eps.to_string() + " exceeds the Cheeger constant " +
                     h.to_string());
  const double zeta = opts.zeta.value_or(zeta_max(eps, graph.degree()));

  ProofTrace trace;
  trace.params = ProofParameters::make(eps, graph.degree(), zeta);
  trace.t_min = s.t_min();
  trace.gap = 1.0 + trace.t_min;

  trace.candidate = find_candidate_A(graph, trace.params, s, opts.search);
  trace.hypothesis_met = trace.candidate->hypothesis_met;
  if (!trace.hypothesis_met) {
    trace.outcome = ProofOutcome::kHypothesisNotMet;
    return trace;
  }
  const VertexSet& a = *trace.candidate->a;
  trace.properties = lemma2_property_check(graph, a, trace.params);
  trace.profile = translate_profile(graph, a);
  try {
    trace.dichotomy = dichotomy_check(trace.profile, a.size(), trace.params);
  } catch (const ProofError& e) {
    trace.outcome = ProofOutcome::kConstructionFailed;
    trace.failure = e.what();
    return trace;
  }

  const std::size_t n = graph.order();
  trace.b_sets.resize(n);
  const int workers = std::max(1, opts.search.workers);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) num_threads(workers) if (workers > 1)
  for (std::ptrdiff_t g = 0; g < count; ++g)
    trace.b_sets[static_cast<std::size_t>(g)] =
        b_set_bounds_check(graph, a, static_cast<Element>(g), trace.params);

  trace.subgroup = construct_H(graph, a, trace.profile, trace.params);
  if (!trace.subgroup->success) {
    trace.outcome = ProofOutcome::kConstructionFailed;
    trace.failure = trace.subgroup->failure;
    return trace;
  }
  trace.disjointness = final_contradiction_check(graph, trace.subgroup->h, a, trace.params);
  if (!trace.disjointness->disjoint) {
    trace.outcome = ProofOutcome::kContradiction;
    trace.failure = "H meets S";
  } else if (!trace.disjointness->matches_structural) {
    trace.outcome = ProofOutcome::kConstructionFailed;
    trace.failure = "H is not among the index-2 subgroups";
  } else {
    trace.outcome = ProofOutcome::kBipartiteCertified;
  }
  return trace;
}

ProofTrace run_pipeline(const CayleyGraph& graph, const PipelineOptions& opts) {
  return run_pipeline(graph, spectrum(graph), opts);
}

const char* to_string(ProofOutcome o) {
  switch (o) {
    case ProofOutcome::kHypothesisNotMet: return "hypothesis_not_met";
    case ProofOutcome::kBipartiteCertified: return "bipartite_certified";
    case ProofOutcome::kConstructionFailed: return "construction_failed";
    case ProofOutcome::kContradiction: return "contradiction";
  }
  return "unknown";
}

const char* to_string(TranslateCase c) {
  switch (c) {
    case TranslateCase::kSmall: return "small";
    case TranslateCase::kLarge: return "large";
    case TranslateCase::kViolation: return "violation";
  }
  return "unknown";
}

}  // namespace cayspec
