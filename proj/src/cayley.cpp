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
#include "cayspec/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>

namespace cayspec {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool parse_index(const std::string& text, std::size_t& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

Element checked_element(const FiniteGroup& group, std::size_t index,
                        const std::string& token) {
  if (index >= group.order())
    throw CayleyError("generator '" + token + "' is out of range for a group of order " +
                      std::to_string(group.order()));
  return static_cast<Element>(index);
}

// Splits on commas that are not inside parentheses.
std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  std::erase_if(out, [](const std::string& s) { return s.empty(); });
  return out;
}

std::vector<std::size_t> factor_orders(const GroupSpec& spec) {
  std::vector<std::size_t> orders;
  for (const auto& f : spec.factors) orders.push_back(f.build().order());
  return orders;
}

std::optional<Element> dihedral_name(std::size_t m, const std::string& token) {
  auto power = [m](const std::string& p) -> std::optional<std::size_t> {
    if (p == "r") return 1;
    if (p == "r^-1" || p == "rinv") return m - 1;
    if (p.rfind("r^", 0) == 0) {
      std::string e = p.substr(2);
      bool neg = !e.empty() && e[0] == '-';
      if (neg) e = e.substr(1);
      std::size_t k = 0;
      if (!parse_index(e, k)) return std::nullopt;
      k %= m;
      return neg ? (m - k) % m : k;
    }
    return std::nullopt;
  };
  if (token == "e") return 0;
  if (token == "s") return static_cast<Element>(m);
  if (token.rfind("s ", 0) == 0 || token.rfind("s*", 0) == 0) {
    if (auto k = power(trim(token.substr(2)))) return static_cast<Element>(m + *k);
    return std::nullopt;
  }
  if (auto k = power(token)) return static_cast<Element>(*k);
  return std::nullopt;
}

}  // namespace

GeneratingSet::GeneratingSet(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool GeneratingSet::contains(Element e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

VertexSet GeneratingSet::as_set(std::size_t universe) const {
  VertexSet s(universe);
  for (auto e : elements_) s.insert(e);
  return s;
}

std::size_t MultisetGenerators::total_mass() const {
  std::size_t total = 0;
  for (auto m : multiplicity) total += m;
  return total;
}

std::vector<Element> MultisetGenerators::support() const {
  std::vector<Element> out;
  for (std::size_t g = 0; g < multiplicity.size(); ++g)
    if (multiplicity[g] > 0) out.push_back(static_cast<Element>(g));
  return out;
}

CayleyGraph CayleyGraph::build(FiniteGroup group, GeneratingSet gens,
                               bool require_generating) {
  const std::size_t n = group.order();
  if (gens.size() == 0) throw CayleyError("generating set is empty");
  for (auto s : gens.elements()) {
    if (s >= n) throw CayleyError("generator " + std::to_string(s) + " out of range");
    if (!gens.contains(group.inverse(s)))
      throw CayleyError("generating set is not symmetric: inverse of " +
                        std::to_string(s) + " missing");
  }
  if (require_generating) {
    std::vector<bool> seen(n, false);
    std::deque<Element> queue{group.identity()};
    seen[group.identity()] = true;
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (auto s : gens.elements()) {
        const Element y = group.mul(s, x);
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    for (std::size_t x = 0; x < n; ++x)
      if (!seen[x])
        throw CayleyError("generating set does not generate the group: element " +
                          std::to_string(x) + " unreached");
  }
  CayleyGraph g(std::move(group), std::move(gens));
  g.table_.n = n;
  g.table_.degree = g.gens_.size();
  g.table_.targets.reserve(n * g.table_.degree);
  for (std::size_t x = 0; x < n; ++x)
    for (auto s : g.gens_.elements())
      g.table_.targets.push_back(g.group_.mul(s, static_cast<Element>(x)));
  return g;
}

NeighborTable CayleyGraph::square_neighbor_table() const {
  NeighborTable out;
  out.n = order();
  out.degree = degree() * degree();
  out.targets.reserve(out.n * out.degree);
  for (std::size_t x = 0; x < out.n; ++x)
    for (auto s : gens_.elements())
      for (auto t : gens_.elements())
        out.targets.push_back(group_.mul(group_.mul(s, t), static_cast<Element>(x)));
  return out;
}

VertexSet set_image(const CayleyGraph& graph, const VertexSet& a) {
  VertexSet out(graph.order());
  for (auto x : a.elements())
    for (auto y : graph.neighbors(static_cast<Element>(x))) out.insert(y);
  return out;
}

VertexSet vertex_boundary(const CayleyGraph& graph, const VertexSet& a) {
  return set_image(graph, a) - a;
}

std::size_t edge_boundary_count(const CayleyGraph& graph, const VertexSet& a) {
  std::size_t count = 0;
  for (auto x : a.elements())
    for (auto y : graph.neighbors(static_cast<Element>(x)))
      if (!a.contains(y)) ++count;
  return count;
}

VertexSet left_translate(const FiniteGroup& group, Element s, const VertexSet& a) {
  VertexSet out(group.order());
  for (auto x : a.elements()) out.insert(group.mul(s, static_cast<Element>(x)));
  return out;
}

VertexSet right_translate(const FiniteGroup& group, const VertexSet& a, Element g) {
  VertexSet out(group.order());
  for (auto x : a.elements()) out.insert(group.mul(static_cast<Element>(x), g));
  return out;
}

MultisetGenerators square_multiset(const GeneratingSet& gens, const FiniteGroup& group) {
  MultisetGenerators ms;
  ms.multiplicity.assign(group.order(), 0);
  for (auto s : gens.elements())
    for (auto t : gens.elements()) ++ms.multiplicity[group.mul(s, t)];
  return ms;
}

ImageExcess multiset_image_excess(const MultisetGenerators& ms, const FiniteGroup& group,
                                  const VertexSet& a) {
  if (a.empty()) throw CayleyError("multiset image excess needs a nonempty set");
  ImageExcess out;
  VertexSet image(group.order());
  for (std::size_t g = 0; g < ms.multiplicity.size(); ++g) {
    const auto m = ms.multiplicity[g];
    if (m == 0) continue;
    for (auto x : a.elements()) {
      const Element y = group.mul(static_cast<Element>(g), static_cast<Element>(x));
      image.insert(y);
      if (!a.contains(y)) out.weighted += m;
    }
  }
  out.identified = (image - a).size();
  return out;
}

std::vector<Element> default_generators(const FiniteGroup& group, const GroupSpec& spec) {
  using Family = GroupSpec::Family;
  std::vector<Element> out;
  switch (spec.family) {
    case Family::kCyclic: {
      const std::size_t n = spec.parameter;
      if (n == 1) return {0};
      out = {1, static_cast<Element>(n - 1)};
      break;
    }
    case Family::kDihedral: {
      const std::size_t m = spec.parameter;
      out = {1, static_cast<Element>(m - 1), static_cast<Element>(m)};
      break;
    }
    case Family::kSymmetric: {
      const std::size_t k = spec.parameter;
      if (k == 1) return {0};
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
          Permutation p(k);
          for (std::size_t x = 0; x < k; ++x) p[x] = static_cast<std::uint32_t>(x);
          std::swap(p[i], p[j]);
          out.push_back(*group.find_permutation(p));
        }
      break;
    }
    case Family::kPermutation: {
      for (const auto& p : spec.generators) {
        const auto e = group.find_permutation(p);
        if (!e) throw CayleyError("generator not found in permutation group");
        out.push_back(*e);
        out.push_back(group.inverse(*e));
      }
      break;
    }
    case Family::kProduct: {
      const auto orders = factor_orders(spec);
      std::size_t stride = 1;
      std::vector<std::size_t> strides(orders.size());
      for (std::size_t i = orders.size(); i-- > 0;) {
        strides[i] = stride;
        stride *= orders[i];
      }
      for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        const FiniteGroup factor = spec.factors[i].build();
        for (auto g : default_generators(factor, spec.factors[i]))
          if (g != 0) out.push_back(static_cast<Element>(g * strides[i]));
      }
      break;
    }
    case Family::kTable:
      throw CayleyError("table groups need an explicit generator list");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> parse_generators(const FiniteGroup& group, const GroupSpec& spec,
                                      const std::string& text) {
  std::vector<Element> out;
  for (const auto& token : split_tokens(text)) {
    std::size_t k = 0;
    if (token == "default") {
      for (auto g : default_generators(group, spec)) out.push_back(g);
    } else if (token == "all") {
      for (std::size_t g = 1; g < group.order(); ++g) out.push_back(static_cast<Element>(g));
    } else if (parse_index(token, k)) {
      out.push_back(checked_element(group, k, token));
    } else if (token.rfind("±", 0) == 0 || token.rfind("+-", 0) == 0 ||
               token.rfind("pm", 0) == 0) {
      const std::size_t skip = token.rfind("±", 0) == 0 ? std::string("±").size() : 2;
      if (!parse_index(token.substr(skip), k))
        throw CayleyError("invalid generator token '" + token + "'");
      const Element e = checked_element(group, k, token);
      out.push_back(e);
      out.push_back(group.inverse(e));
    } else if (token.front() == '(') {
      if (!group.has_permutations())
        throw CayleyError("cycle notation needs a permutation group: '" + token + "'");
      const auto p = parse_cycles(token, group.permutation(0).size());
      const auto e = group.find_permutation(p);
      if (!e) throw CayleyError("permutation " + token + " is not in the group");
      out.push_back(*e);
    } else if (spec.family == GroupSpec::Family::kDihedral) {
      const auto e = dihedral_name(spec.parameter, token);
      if (!e) throw CayleyError("invalid dihedral generator '" + token + "'");
      out.push_back(*e);
    } else {
      throw CayleyError("invalid generator token '" + token + "'");
    }
  }
  if (out.empty()) throw CayleyError("empty generator list");
  return out;
}

}  // namespace cayspec
