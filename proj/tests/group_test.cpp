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
#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "cayspec/group.hpp"

namespace cayspec {
namespace {

std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

bool associative(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

TEST(GroupTest, CyclicArithmetic) {
  const auto g = from_cyclic(6);
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.mul(4, 5), 3u);
  EXPECT_EQ(g.inverse(2), 4u);
  EXPECT_TRUE(g.is_abelian());
  EXPECT_EQ(element_order(g, 1), 6u);
  EXPECT_THROW(from_cyclic(0), GroupError);
}

TEST(GroupTest, DihedralRelations) {
  for (std::size_t m = 3; m <= 7; ++m) {
    const auto g = from_dihedral(m);
    const Element r = 1;
    const auto s = static_cast<Element>(m);
    EXPECT_EQ(g.order(), 2 * m);
    EXPECT_EQ(element_order(g, r), m);
    EXPECT_EQ(element_order(g, s), 2u);
    EXPECT_EQ(g.mul(g.mul(s, r), s), g.inverse(r));  // s r s = r^-1
    EXPECT_FALSE(g.is_abelian());
    EXPECT_TRUE(associative(g));
    EXPECT_EQ(g.label(s), "s");
    EXPECT_EQ(g.label(static_cast<Element>(m + 2)), "s r^2");
  }
}

TEST(GroupTest, SymmetricOrders) {
  EXPECT_EQ(from_symmetric(1).order(), 1u);
  EXPECT_EQ(from_symmetric(3).order(), 6u);
  const auto s4 = from_symmetric(4);
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_FALSE(s4.is_abelian());
  EXPECT_TRUE(s4.has_permutations());
  EXPECT_THROW(from_symmetric(8, 1000), GroupError);
}

TEST(GroupTest, PermutationClosure) {
  const auto five = from_permutations({parse_cycles("(0 1 2 3 4)")});
  EXPECT_EQ(five.order(), 5u);
  EXPECT_TRUE(five.is_abelian());
  const auto s3 = from_permutations({parse_cycles("(0 1)", 3), parse_cycles("(0 1 2)")});
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_TRUE(associative(s3));
  // (a*b)(x) = a(b(x))
  for (Element a = 0; a < s3.order(); ++a)
    for (Element b = 0; b < s3.order(); ++b)
      for (std::uint32_t x = 0; x < 3; ++x)
        EXPECT_EQ(s3.permutation(s3.mul(a, b))[x], s3.permutation(a)[s3.permutation(b)[x]]);
  EXPECT_THROW(from_permutations({Permutation{0, 0, 1}}), GroupError);
}

TEST(GroupTest, DirectProductOfCoprimeCyclicsIsCyclic) {
  const auto g = from_direct_product(from_cyclic(2), from_cyclic(3));
  EXPECT_EQ(g.order(), 6u);
  std::size_t max_order = 0;
  for (Element x = 0; x < g.order(); ++x) max_order = std::max(max_order, element_order(g, x));
  EXPECT_EQ(max_order, 6u);
  EXPECT_EQ(g.label(5), "(1,2)");
}

TEST(GroupTest, TableParsingAndAxioms) {
  const auto g = from_table("3\n0 1 2\n1 2 0\n2 0 1\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.inverse(1), 2u);
  EXPECT_THROW(from_table("2\n0 1\n1 1\n"), GroupError);       // no inverse for 1
  EXPECT_THROW(from_table("2\n1 0\n0 1\n"), GroupError);       // 0 is not the identity
  EXPECT_THROW(from_table("2\n0 1\n1\n"), GroupError);         // short row
  EXPECT_THROW(from_table("2\n0 1\n1 0\n7\n"), GroupError);    // trailing content
  // A Latin square with identity 0 that is not associative.
  const std::string loop =
      "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
  try {
    from_table(loop);
    FAIL() << "non-associative table accepted";
  } catch (const GroupError& e) {
    EXPECT_NE(std::string(e.what()).find("associativity"), std::string::npos);
  }
  EXPECT_NO_THROW(from_table(loop, FiniteGroup::Associativity::kNever));
}

TEST(GroupTest, CycleNotationRoundTrip) {
  const auto p = parse_cycles("(0 2)(1 3 4)", 6);
  EXPECT_EQ(p, (Permutation{2, 3, 0, 4, 1, 5}));
  EXPECT_EQ(format_cycles(p), "(0 2)(1 3 4)");
  EXPECT_EQ(format_cycles(Permutation{0, 1}), "()");
  EXPECT_THROW(parse_cycles("(0 1"), GroupError);
  EXPECT_THROW(parse_cycles("(0 1 0)"), GroupError);
}

TEST(GroupSpecTest, ParsesEveryFamily) {
  EXPECT_EQ(GroupSpec::parse("cyclic:7").build().order(), 7u);
  EXPECT_EQ(GroupSpec::parse("dihedral:5").build().order(), 10u);
  EXPECT_EQ(GroupSpec::parse("symmetric:4").build().order(), 24u);
  const auto p = GroupSpec::parse("product:cyclic:2xcyclic:2xcyclic:2");
  EXPECT_EQ(p.factors.size(), 3u);
  EXPECT_EQ(p.build().order(), 8u);
  EXPECT_EQ(GroupSpec::parse("product:cyclic:2xdihedral:3").build().order(), 12u);
  EXPECT_EQ(GroupSpec::parse("perm:(0 1);(0 1 2 3)").build().order(), 24u);
}

TEST(GroupSpecTest, TableFamilyReadsFile) {
  const std::string path = ::testing::TempDir() + "/z4_table.txt";
  {
    std::ofstream out(path);
    out << "4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n";
  }
  EXPECT_EQ(GroupSpec::parse("table:" + path).build().order(), 4u);
  EXPECT_THROW(GroupSpec::parse("table:/nonexistent/table").build(), GroupError);
  std::remove(path.c_str());
}

TEST(GroupSpecTest, RejectsBadSpecs) {
  EXPECT_THROW(GroupSpec::parse("cyclic:0"), GroupError);
  EXPECT_THROW(GroupSpec::parse("dihedral:1"), GroupError);
  EXPECT_THROW(GroupSpec::parse("cyclic"), GroupError);
  EXPECT_THROW(GroupSpec::parse("cyclic:abc"), GroupError);
  EXPECT_THROW(GroupSpec::parse("torus:3"), GroupError);
  EXPECT_THROW(GroupSpec::parse("product:cyclic:2"), GroupError);
  EXPECT_THROW(GroupSpec::parse("perm:"), GroupError);
  EXPECT_THROW(GroupSpec::parse("cyclic:20000").build(), GroupError);
}

TEST(GroupSpecTest, ExpandsRanges) {
  const auto items = GroupSpec::expand_range("cyclic:3..16");
  ASSERT_EQ(items.size(), 14u);
  EXPECT_EQ(items.front(), "cyclic:3");
  EXPECT_EQ(items.back(), "cyclic:16");
  EXPECT_EQ(GroupSpec::expand_range("symmetric:4"), std::vector<std::string>{"symmetric:4"});
  EXPECT_THROW(GroupSpec::expand_range("cyclic:9..3"), GroupError);
}

TEST(GroupTest, FamilyGroupsSatisfyAxioms) {
  for (const char* spec : {"cyclic:9", "dihedral:6", "symmetric:4", "product:cyclic:2xsymmetric:3",
                           "product:cyclic:3xcyclic:3"}) {
    const auto g = GroupSpec::parse(spec).build();
    EXPECT_NO_THROW(g.validate_axioms(true)) << spec;
    EXPECT_TRUE(associative(g)) << spec;
    for (Element x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.mul(x, g.inverse(x)), g.identity()) << spec;
      EXPECT_EQ(g.mul(g.inverse(x), x), g.identity()) << spec;
    }
  }
}

}  // namespace
}  // namespace cayspec
