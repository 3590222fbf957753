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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cayspec/cayley.hpp"
#include "cayspec/spectral.hpp"

namespace cayspec {

inline constexpr std::size_t kMaxQuotientRank = 20;

class SubgroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SubgroupCertificate {
  VertexSet elements;
  std::size_t index = 0;
  bool disjoint_from_s = false;
};

/// True iff `h` contains the identity and is closed under products and
/// inverses. `witness` receives a failing pair (a, b) when closure breaks.
bool is_subgroup(const FiniteGroup& group, const VertexSet& h,
                 std::pair<Element, Element>* witness = nullptr);

/// Smallest subgroup containing `seed`.
VertexSet subgroup_closure(const FiniteGroup& group, const VertexSet& seed);

/// Subgroup generated by all squares and commutators; every index-2
/// subgroup contains it.
SubgroupCertificate squares_commutators_subgroup(const FiniteGroup& group);

/// All index-2 subgroups, sorted by lexicographic element list. Each is the
/// kernel of a nonzero functional on the elementary abelian quotient.
std::vector<SubgroupCertificate> index2_subgroups(const FiniteGroup& group);

/// First index-2 subgroup disjoint from S, if any; C(G, S) is bipartite
/// exactly when one exists.
std::optional<SubgroupCertificate> is_bipartite_structural(const CayleyGraph& graph);

struct BipartiteEquivalence {
  bool agree = false;
  bool structural = false;
  bool spectral = false;
};
/// Throws SubgroupError on disconnected graphs.
BipartiteEquivalence proposition_equivalence_check(const CayleyGraph& graph,
                                                   double tol = kDefaultTolerance);
BipartiteEquivalence proposition_equivalence_check(const CayleyGraph& graph,
                                                   const SpectralSummary& s,
                                                   double tol = kDefaultTolerance);

}  // namespace cayspec
