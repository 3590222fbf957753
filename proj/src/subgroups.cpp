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
#include "cayspec/subgroups.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>

namespace cayspec {

bool is_subgroup(const FiniteGroup& group, const VertexSet& h,
                 std::pair<Element, Element>* witness) {
  if (!h.contains(group.identity())) return false;
  const auto members = h.elements();
  for (auto a : members) {
    if (!h.contains(group.inverse(static_cast<Element>(a)))) {
      if (witness) *witness = {static_cast<Element>(a), static_cast<Element>(a)};
      return false;
    }
    for (auto b : members) {
      if (!h.contains(group.mul(static_cast<Element>(a), static_cast<Element>(b)))) {
        if (witness) *witness = {static_cast<Element>(a), static_cast<Element>(b)};
        return false;
      }
    }
  }
  return true;
}

VertexSet subgroup_closure(const FiniteGroup& group, const VertexSet& seed) {
  const std::size_t n = group.order();
  VertexSet h(n);
  h.insert(group.identity());
  std::deque<Element> queue{group.identity()};
  const auto gens = seed.elements();
  // In a finite group, closure under right multiplication by the seed suffices.
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (auto g : gens) {
      const Element y = group.mul(x, static_cast<Element>(g));
      if (!h.contains(y)) {
        h.insert(y);
        queue.push_back(y);
      }
    }
  }
  return h;
}

SubgroupCertificate squares_commutators_subgroup(const FiniteGroup& group) {
  const std::size_t n = group.order();
  VertexSet seed(n);
  for (Element g = 0; g < n; ++g) {
    seed.insert(group.mul(g, g));
    for (Element h = 0; h < n; ++h) {
      const Element gh = group.mul(g, h);
      const Element hg = group.mul(h, g);
      seed.insert(group.mul(gh, group.inverse(hg)));  // [g,h] = g h g^-1 h^-1
    }
  }
  SubgroupCertificate out;
  out.elements = subgroup_closure(group, seed);
  out.index = n / out.elements.size();
  return out;
}

std::vector<SubgroupCertificate> index2_subgroups(const FiniteGroup& group) {
  const std::size_t n = group.order();
  const VertexSet normal = squares_commutators_subgroup(group).elements;
  const auto normal_members = normal.elements();

  // Coset id per element: the smallest element of its coset gN.
  std::vector<Element> coset(n, static_cast<Element>(n));
  std::vector<Element> reps;
  for (Element g = 0; g < n; ++g) {
    if (coset[g] != n) continue;
    reps.push_back(g);
    for (auto m : normal_members) coset[group.mul(g, static_cast<Element>(m))] = g;
  }
  if (reps.size() == 1) return {};

  // Coordinates of each coset in the elementary abelian 2-group G/N.
  std::vector<std::uint32_t> coords(n, 0);
  std::vector<bool> spanned(n, false);
  std::vector<Element> span{coset[group.identity()]};
  spanned[coset[group.identity()]] = true;
  std::size_t rank = 0;
  for (auto r : reps) {
    if (spanned[r]) continue;
    if (rank >= kMaxQuotientRank)
      throw SubgroupError("quotient rank exceeds cap " + std::to_string(kMaxQuotientRank));
    const std::size_t before = span.size();
    for (std::size_t i = 0; i < before; ++i) {
      const Element c = coset[group.mul(span[i], r)];
      coords[c] = coords[span[i]] | (std::uint32_t{1} << rank);
      spanned[c] = true;
      span.push_back(c);
    }
    ++rank;
  }
  if (span.size() != reps.size())
    throw SubgroupError("quotient by squares and commutators is not elementary abelian");

  std::vector<SubgroupCertificate> out;
  for (std::uint32_t f = 1; f < (std::uint32_t{1} << rank); ++f) {
    SubgroupCertificate cert;
    cert.elements = VertexSet(n);
    for (Element g = 0; g < n; ++g)
      if (std::popcount(f & coords[coset[g]]) % 2 == 0) cert.elements.insert(g);
    if (!is_subgroup(group, cert.elements) || 2 * cert.elements.size() != n)
      throw SubgroupError("hyperplane preimage failed subgroup validation");
    cert.index = 2;
    out.push_back(std::move(cert));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return lexicographic_less(a.elements, b.elements);
  });
  return out;
}

std::optional<SubgroupCertificate> is_bipartite_structural(const CayleyGraph& graph) {
  const VertexSet s = graph.gens().as_set(graph.order());
  for (auto& cert : index2_subgroups(graph.group())) {
    cert.disjoint_from_s = (cert.elements & s).empty();
    if (cert.disjoint_from_s) return cert;
  }
  return std::nullopt;
}

BipartiteEquivalence proposition_equivalence_check(const CayleyGraph& graph,
                                                   const SpectralSummary& s, double tol) {
  if (!is_connected(s, tol))
    throw SubgroupError("bipartite equivalence needs a connected graph");
  BipartiteEquivalence out;
  out.structural = is_bipartite_structural(graph).has_value();
  out.spectral = is_bipartite_spectral(s, tol);
  out.agree = out.structural == out.spectral;
  return out;
}

BipartiteEquivalence proposition_equivalence_check(const CayleyGraph& graph, double tol) {
  return proposition_equivalence_check(graph, spectrum(graph), tol);
}

}  // namespace cayspec
