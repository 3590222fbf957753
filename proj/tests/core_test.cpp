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

#include <stdexcept>

#include "cayspec/rational.hpp"
#include "cayspec/vertex_set.hpp"

namespace cayspec {
namespace {

TEST(RationalTest, NormalizesSignAndGcd) {
  const Rational q(6, -4);
  EXPECT_EQ(q.num(), -3);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(RationalTest, ArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_LT(Rational(2, 7), Rational(1, 3));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), std::invalid_argument);
}

TEST(RationalTest, ComparisonDoesNotOverflow) {
  const Rational a(3037000499LL, 3037000500LL);
  const Rational b(3037000498LL, 3037000499LL);
  EXPECT_GT(a, b);
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("2/3"), Rational(2, 3));
  EXPECT_EQ(Rational::parse("4"), Rational(4));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational(5, 10).to_string(), "1/2");
  EXPECT_EQ(Rational(3).to_string(), "3");
  EXPECT_THROW(Rational::parse("1/"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
}

TEST(VertexSetTest, BasicMembership) {
  VertexSet s(10, {1, 3, 9});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(9));
  EXPECT_FALSE(s.contains(2));
  EXPECT_FALSE(s.contains(100));
  s.erase(3);
  EXPECT_EQ(s.elements(), (std::vector<std::size_t>{1, 9}));
  EXPECT_THROW(s.insert(10), std::out_of_range);
}

TEST(VertexSetTest, SetAlgebraAcrossWordBoundary) {
  const std::size_t n = 130;
  VertexSet a(n, {0, 63, 64, 129});
  VertexSet b(n, {63, 64, 100});
  EXPECT_EQ((a & b).elements(), (std::vector<std::size_t>{63, 64}));
  EXPECT_EQ((a | b).size(), 5u);
  EXPECT_EQ((a ^ b).elements(), (std::vector<std::size_t>{0, 100, 129}));
  EXPECT_EQ((a - b).elements(), (std::vector<std::size_t>{0, 129}));
  EXPECT_EQ(a.complement().size(), n - 4);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
}

TEST(VertexSetTest, MaskRoundTrip) {
  const auto s = VertexSet::from_mask(6, 0b101011);
  EXPECT_EQ(s.elements(), (std::vector<std::size_t>{0, 1, 3, 5}));
  EXPECT_EQ(s.to_mask(), 0b101011u);
  EXPECT_EQ(VertexSet::full(6).to_mask(), 0b111111u);
  EXPECT_THROW(VertexSet(70).to_mask(), std::logic_error);
}

TEST(VertexSetTest, LexicographicOrder) {
  EXPECT_TRUE(lexicographic_less(VertexSet(6, {0, 2, 4}), VertexSet(6, {0, 3, 4})));
  EXPECT_FALSE(lexicographic_less(VertexSet(6, {1}), VertexSet(6, {0, 5})));
}

}  // namespace
}  // namespace cayspec
