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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayspec {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultElementCap = 10000;
inline constexpr std::size_t kAssociativityAutoLimit = 512;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite group given by its full multiplication table. Element 0 is always
/// the identity. Immutable after construction.
class FiniteGroup {
 public:
  enum class Associativity { kAuto, kAlways, kNever };

  /// Builds and validates a group from a dense table where table[a][b] is the
  /// index of a*b. Throws GroupError naming the first failing axiom.
  explicit FiniteGroup(std::vector<std::vector<Element>> table,
                       std::vector<std::string> labels = {},
                       std::vector<Permutation> permutations = {},
                       Associativity assoc = Associativity::kAuto);

  std::size_t order() const { return order_; }
  Element identity() const { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }
  bool is_abelian() const;

  /// Permutation realising each element, present only for permutation groups.
  bool has_permutations() const { return !permutations_.empty(); }
  const Permutation& permutation(Element a) const { return permutations_[a]; }
  /// Finds the element acting as `p`; nullopt if not in the group.
  std::optional<Element> find_permutation(const Permutation& p) const;

  /// Re-runs every axiom check, including the O(n^3) associativity scan.
  void validate_axioms(bool check_associativity) const;

 private:
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Permutation> permutations_;
};

FiniteGroup from_cyclic(std::size_t n);
/// Rotations r^k are 0..m-1, reflections s*r^k are m..2m-1.
FiniteGroup from_dihedral(std::size_t m);
FiniteGroup from_symmetric(std::size_t k, std::size_t cap = kDefaultElementCap);
/// Closure of the generators under composition, (a*b)(x) = a(b(x)).
FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                              std::size_t cap = kDefaultElementCap);
/// Element (a, b) has index a * |g2| + b.
FiniteGroup from_direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                std::size_t cap = kDefaultElementCap);
/// Parses the Cayley-table text format: n, then n rows of n indices.
FiniteGroup from_table(const std::string& text,
                       FiniteGroup::Associativity assoc =
                           FiniteGroup::Associativity::kAuto);

/// Parses cycle notation such as "(0 1)(2 3 4)" on `points` points. A value
/// of 0 for `points` sizes the permutation to the largest mentioned point.
Permutation parse_cycles(const std::string& text, std::size_t points = 0);
std::string format_cycles(const Permutation& p);

/// Family tag plus parameters, as written in "cyclic:6", "product:AxB", ...
struct GroupSpec {
  enum class Family { kCyclic, kDihedral, kSymmetric, kProduct, kPermutation, kTable };

  Family family = Family::kCyclic;
  std::size_t parameter = 0;
  std::vector<GroupSpec> factors;         // product
  std::vector<Permutation> generators;    // permutation
  std::string path;                       // table
  std::string text;                       // canonical source text

  static GroupSpec parse(const std::string& text);
  /// Expands range sugar "cyclic:3..16" into one spec string per value.
  static std::vector<std::string> expand_range(const std::string& text);

  FiniteGroup build(std::size_t cap = kDefaultElementCap) const;
};

}  // namespace cayspec
