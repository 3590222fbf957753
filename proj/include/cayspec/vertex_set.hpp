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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cayspec {

/// Subset of a fixed universe {0, ..., n-1}, stored as packed 64-bit words.
/// For n <= 64 it is a single bitmask word.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : VertexSet(universe) {
    for (auto v : members) insert(v);
  }
  VertexSet(std::size_t universe, const std::vector<std::size_t>& members)
      : VertexSet(universe) {
    for (auto v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(v);
    return s;
  }
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("mask universe exceeds 64");
    VertexSet s(universe);
    if (universe > 0) {
      const std::uint64_t keep =
          universe == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
      s.words_[0] = mask & keep;
    }
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t v) const {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1U) != 0;
  }
  void insert(std::size_t v) {
    if (v >= universe_) throw std::out_of_range("vertex index out of range");
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  void erase(std::size_t v) {
    if (v < universe_) words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const { return size() == 0; }

  /// Ascending list of members.
  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::uint64_t to_mask() const {
    if (universe_ > 64) throw std::logic_error("set universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  VertexSet complement() const {
    VertexSet out(universe_);
    for (std::size_t v = 0; v < universe_; ++v)
      if (!contains(v)) out.insert(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on the ascending member lists.
  friend bool lexicographic_less(const VertexSet& a, const VertexSet& b) {
    const auto ea = a.elements();
    const auto eb = b.elements();
    return ea < eb;
  }

 private:
  void check_same(const VertexSet& o) const {
    if (o.universe_ != universe_)
      throw std::invalid_argument("vertex sets over different universes");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cayspec
