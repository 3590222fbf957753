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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayspec/group.hpp"
#include "cayspec/vertex_set.hpp"

namespace cayspec {

class CayleyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted set of distinct group elements. Symmetry and generation are checked
/// when the Cayley graph is built, not here.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  explicit GeneratingSet(std::vector<Element> elements);

  std::size_t size() const { return elements_.size(); }
  std::span<const Element> elements() const { return elements_; }
  bool contains(Element e) const;
  VertexSet as_set(std::size_t universe) const;

 private:
  std::vector<Element> elements_;
};

/// Regular multigraph given as a flat n x degree table of targets; row x lists
/// the out-neighbours of x with multiplicity (loops included).
struct NeighborTable {
  std::size_t n = 0;
  std::size_t degree = 0;
  std::vector<Element> targets;

  std::span<const Element> row(std::size_t x) const {
    return {targets.data() + x * degree, degree};
  }
};

/// Multiset S' = S.S: multiplicity[g] = #{(s, t) in S x S : s*t = g}.
struct MultisetGenerators {
  std::vector<std::uint32_t> multiplicity;

  std::size_t total_mass() const;
  /// Identified support S^2.
  std::vector<Element> support() const;
};

struct ImageExcess {
  std::size_t identified = 0;  // |S^2 A \ A|
  std::size_t weighted = 0;    // |S' A \ A| counted with multiplicity
};

/// Cayley graph C(G, S) with edges x -> s*x (left multiplication).
class CayleyGraph {
 public:
  /// Rejects non-symmetric S, and non-generating S unless
  /// `require_generating` is false (used for synthetic disconnected inputs).
  static CayleyGraph build(FiniteGroup group, GeneratingSet gens,
                           bool require_generating = true);

  const FiniteGroup& group() const { return group_; }
  const GeneratingSet& gens() const { return gens_; }
  std::size_t order() const { return group_.order(); }
  std::size_t degree() const { return gens_.size(); }
  std::span<const Element> neighbors(Element x) const { return table_.row(x); }
  const NeighborTable& neighbor_table() const { return table_; }

  /// Neighbour table of the S' multigraph: row x lists (s*t)*x for all d^2 pairs.
  NeighborTable square_neighbor_table() const;

  VertexSet empty_set() const { return VertexSet(order()); }
  VertexSet full_set() const { return VertexSet::full(order()); }

 private:
  CayleyGraph(FiniteGroup group, GeneratingSet gens)
      : group_(std::move(group)), gens_(std::move(gens)) {}

  FiniteGroup group_;
  GeneratingSet gens_;
  NeighborTable table_;
};

/// SA = union of sA over s in S.
VertexSet set_image(const CayleyGraph& graph, const VertexSet& a);
/// N(A) \ A.
VertexSet vertex_boundary(const CayleyGraph& graph, const VertexSet& a);
/// Number of pairs (a, s) with a in A and s*a outside A.
std::size_t edge_boundary_count(const CayleyGraph& graph, const VertexSet& a);
/// sA for a single element s.
VertexSet left_translate(const FiniteGroup& group, Element s, const VertexSet& a);
/// Ag for a single element g.
VertexSet right_translate(const FiniteGroup& group, const VertexSet& a, Element g);

MultisetGenerators square_multiset(const GeneratingSet& gens, const FiniteGroup& group);
/// Throws CayleyError for empty A.
ImageExcess multiset_image_excess(const MultisetGenerators& ms,
                                  const FiniteGroup& group, const VertexSet& a);

/// Parses a generator list for `group`. Tokens are comma separated:
///   k        element index k
///   +-k, ±k  element k together with its inverse (pmk also accepted)
///   r, r^-1, s, r^k, s r^k   dihedral names
///   (0 1)... cycle notation, for permutation groups
///   all      every non-identity element
///   default  the family's standard generators (see default_generators)
/// The result is closed under inverses only if the tokens say so.
std::vector<Element> parse_generators(const FiniteGroup& group, const GroupSpec& spec,
                                      const std::string& text);

/// Standard symmetric generators: cyclic {1, n-1}; dihedral {r, r^-1, s};
/// symmetric all transpositions; perm the given generators and inverses;
/// product the union of the factors' defaults embedded in each coordinate.
std::vector<Element> default_generators(const FiniteGroup& group, const GroupSpec& spec);

}  // namespace cayspec
