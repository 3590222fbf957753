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
#include "cayspec/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

namespace cayspec {
namespace {

std::string fmt_triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = p.size();
    for (auto v : p) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  std::size_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw GroupError("invalid " + what + ": '" + text + "'");
  return value;
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table,
                         std::vector<std::string> labels,
                         std::vector<Permutation> permutations,
                         Associativity assoc)
    : order_(table.size()),
      labels_(std::move(labels)),
      permutations_(std::move(permutations)) {
  const std::size_t n = order_;
  if (n == 0) throw GroupError("group must have at least one element");
  table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw GroupError("row " + std::to_string(a) + " has " +
                       std::to_string(table[a].size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n)
        throw GroupError("entry (" + std::to_string(a) + ", " +
                         std::to_string(b) + ") out of range");
      table_[a * n + b] = table[a][b];
    }
  }
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  }
  if (labels_.size() != n) throw GroupError("label count does not match order");
  if (!permutations_.empty() && permutations_.size() != n)
    throw GroupError("permutation count does not match order");

  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(0, static_cast<Element>(a)) != a || mul(static_cast<Element>(a), 0) != a)
      throw GroupError("element 0 is not an identity: fails at element " +
                       std::to_string(a));
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 0) {
        inverse_[a] = static_cast<Element>(b);
        found = true;
      }
    }
    if (!found) throw GroupError("element " + std::to_string(a) + " has no inverse");
  }
  const bool assoc_check =
      assoc == Associativity::kAlways ||
      (assoc == Associativity::kAuto && n <= kAssociativityAutoLimit);
  validate_axioms(assoc_check);
}

void FiniteGroup::validate_axioms(bool check_associativity) const {
  const std::size_t n = order_;
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = static_cast<Element>(a);
    if (mul(0, x) != x || mul(x, 0) != x)
      throw GroupError("element 0 is not an identity: fails at element " +
                       std::to_string(a));
    if (mul(x, inverse_[a]) != 0 || mul(inverse_[a], x) != 0)
      throw GroupError("one-sided inverse for element " + std::to_string(a));
  }
  if (!check_associativity) return;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Element ab = mul(static_cast<Element>(a), static_cast<Element>(b));
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(ab, static_cast<Element>(c)) !=
            mul(static_cast<Element>(a),
                mul(static_cast<Element>(b), static_cast<Element>(c))))
          throw GroupError("associativity fails at " + fmt_triple(a, b, c));
      }
    }
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Element> FiniteGroup::find_permutation(const Permutation& p) const {
  for (std::size_t a = 0; a < permutations_.size(); ++a)
    if (permutations_[a] == p) return static_cast<Element>(a);
  return std::nullopt;
}

FiniteGroup from_cyclic(std::size_t n) {
  if (n == 0) throw GroupError("cyclic order must be >= 1");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return FiniteGroup(std::move(t));
}

FiniteGroup from_dihedral(std::size_t m) {
  if (m < 2) throw GroupError("dihedral parameter must be >= 2");
  const std::size_t n = 2 * m;
  auto rot = [m](std::size_t k) { return static_cast<Element>(k % m); };
  auto ref = [m](std::size_t k) { return static_cast<Element>(m + k % m); };
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool xs = x >= m;
      const bool ys = y >= m;
      const std::size_t a = x % m;
      const std::size_t b = y % m;
      // r^a s = s r^{-a}; s r^a s r^b = r^{b-a}
      if (!xs && !ys) t[x][y] = rot(a + b);
      else if (!xs && ys) t[x][y] = ref(b + m - a);
      else if (xs && !ys) t[x][y] = ref(a + b);
      else t[x][y] = rot(b + m - a);
    }
  std::vector<std::string> labels(n);
  for (std::size_t k = 0; k < m; ++k) {
    const std::string power = k == 0 ? "" : (k == 1 ? "r" : "r^" + std::to_string(k));
    labels[k] = k == 0 ? "e" : power;
    labels[m + k] = k == 0 ? "s" : "s " + power;
  }
  return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                              std::size_t cap) {
  std::size_t points = generators.empty() ? 0 : generators.front().size();
  for (const auto& g : generators) {
    if (g.size() != points)
      throw GroupError("generators act on different numbers of points");
    std::vector<bool> seen(points, false);
    for (auto v : g) {
      if (v >= points || seen[v]) throw GroupError("generator is not a bijection");
      seen[v] = true;
    }
  }
  Permutation id(points);
  for (std::size_t x = 0; x < points; ++x) id[x] = static_cast<std::uint32_t>(x);

  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermutationHash> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = compose(g, elements[head]);
      if (index.contains(next)) continue;
      if (elements.size() >= cap)
        throw GroupError("permutation closure exceeds element cap " +
                         std::to_string(cap));
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elements) labels.push_back(format_cycles(p));
  return FiniteGroup(std::move(t), std::move(labels), std::move(elements));
}

FiniteGroup from_symmetric(std::size_t k, std::size_t cap) {
  if (k == 0) throw GroupError("symmetric degree must be >= 1");
  std::vector<Permutation> gens;
  if (k >= 2) {
    Permutation swap(k);
    Permutation cycle(k);
    for (std::size_t x = 0; x < k; ++x) {
      swap[x] = static_cast<std::uint32_t>(x);
      cycle[x] = static_cast<std::uint32_t>((x + 1) % k);
    }
    std::swap(swap[0], swap[1]);
    gens = {swap, cycle};
  } else {
    gens = {Permutation{0}};
  }
  return from_permutations(gens, cap);
}

FiniteGroup from_direct_product(const FiniteGroup& g1, const FiniteGroup& g2,
                                std::size_t cap) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  if (n1 * n2 > cap)
    throw GroupError("direct product exceeds element cap " + std::to_string(cap));
  const std::size_t n = n1 * n2;
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = g1.mul(static_cast<Element>(x / n2), static_cast<Element>(y / n2));
      const auto b = g2.mul(static_cast<Element>(x % n2), static_cast<Element>(y % n2));
      t[x][y] = static_cast<Element>(a * n2 + b);
    }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x)
    labels[x] = "(" + g1.label(static_cast<Element>(x / n2)) + "," +
                g2.label(static_cast<Element>(x % n2)) + ")";
  return FiniteGroup(std::move(t), std::move(labels));
}

FiniteGroup from_table(const std::string& text, FiniteGroup::Associativity assoc) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n <= 0) throw GroupError("malformed table: missing or invalid order");
  std::vector<std::vector<Element>> t(static_cast<std::size_t>(n),
                                      std::vector<Element>(static_cast<std::size_t>(n)));
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b) {
      long long v = 0;
      if (!(in >> v))
        throw GroupError("malformed table: row " + std::to_string(a) + " is short");
      if (v < 0 || v >= n)
        throw GroupError("malformed table: entry (" + std::to_string(a) + ", " +
                         std::to_string(b) + ") out of range");
      t[a][b] = static_cast<Element>(v);
    }
  std::string extra;
  if (in >> extra) throw GroupError("malformed table: trailing content '" + extra + "'");
  return FiniteGroup(std::move(t), {}, {}, assoc);
}

Permutation parse_cycles(const std::string& text, std::size_t points) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  const std::string s = trim(text);
  std::size_t max_point = 0;
  bool any = false;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw GroupError("invalid cycle notation: '" + text + "'");
    const auto close = s.find(')', i);
    if (close == std::string::npos)
      throw GroupError("unterminated cycle in '" + text + "'");
    std::string body = s.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<std::uint32_t> cycle;
    std::string tok;
    while (in >> tok) {
      const auto v = parse_size(tok, "cycle point");
      cycle.push_back(static_cast<std::uint32_t>(v));
      max_point = std::max(max_point, v);
      any = true;
    }
    cycles.push_back(std::move(cycle));
    i = close + 1;
  }
  if (points == 0) points = any ? max_point + 1 : 0;
  if (any && max_point >= points)
    throw GroupError("cycle point exceeds permutation degree in '" + text + "'");
  Permutation p(points);
  for (std::size_t x = 0; x < points; ++x) p[x] = static_cast<std::uint32_t>(x);
  std::vector<bool> used(points, false);
  for (const auto& c : cycles) {
    for (auto v : c) {
      if (used[v]) throw GroupError("point repeated in cycle notation '" + text + "'");
      used[v] = true;
    }
    for (std::size_t j = 0; j < c.size(); ++j) p[c[j]] = c[(j + 1) % c.size()];
  }
  return p;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == x) continue;
    out += "(";
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      if (!first) out += " ";
      out += std::to_string(y);
      first = false;
      y = p[y];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupSpec GroupSpec::parse(const std::string& raw) {
  const std::string text = trim(raw);
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw GroupError("group spec needs a family prefix: '" + text + "'");
  const std::string family = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  GroupSpec spec;
  spec.text = text;
  if (family == "cyclic" || family == "dihedral" || family == "symmetric") {
    spec.family = family == "cyclic"     ? Family::kCyclic
                  : family == "dihedral" ? Family::kDihedral
                                         : Family::kSymmetric;
    spec.parameter = parse_size(trim(rest), family + " parameter");
    if (spec.family == Family::kCyclic && spec.parameter < 1)
      throw GroupError("cyclic order must be >= 1");
    if (spec.family == Family::kDihedral && spec.parameter < 2)
      throw GroupError("dihedral parameter must be >= 2");
    if (spec.family == Family::kSymmetric && spec.parameter < 1)
      throw GroupError("symmetric degree must be >= 1");
  } else if (family == "product") {
    spec.family = Family::kProduct;
    static const std::vector<std::string> kPrefixes = {
        "cyclic:", "dihedral:", "symmetric:", "perm:", "table:"};
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] != 'x') continue;
      for (const auto& p : kPrefixes)
        if (rest.compare(i + 1, p.size(), p) == 0) cuts.push_back(i);
    }
    std::size_t start = 0;
    for (auto c : cuts) {
      spec.factors.push_back(parse(rest.substr(start, c - start)));
      start = c + 1;
    }
    spec.factors.push_back(parse(rest.substr(start)));
    if (spec.factors.size() < 2)
      throw GroupError("product spec needs at least two factors: '" + text + "'");
  } else if (family == "perm") {
    spec.family = Family::kPermutation;
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : rest) {
      if (ch == ';') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    parts.push_back(cur);
    std::size_t points = 0;
    std::vector<Permutation> raw_perms;
    for (const auto& part : parts) {
      if (trim(part).empty()) continue;
      raw_perms.push_back(parse_cycles(part));
      points = std::max(points, raw_perms.back().size());
    }
    if (raw_perms.empty()) throw GroupError("perm spec has no generators");
    for (const auto& part : parts)
      if (!trim(part).empty()) spec.generators.push_back(parse_cycles(part, points));
  } else if (family == "table") {
    spec.family = Family::kTable;
    spec.path = trim(rest);
    if (spec.path.empty()) throw GroupError("table spec needs a path");
  } else {
    throw GroupError("unknown group family '" + family + "'");
  }
  return spec;
}

std::vector<std::string> GroupSpec::expand_range(const std::string& raw) {
  const std::string text = trim(raw);
  const auto colon = text.find(':');
  const auto dots = text.find("..");
  if (colon == std::string::npos || dots == std::string::npos || dots < colon)
    return {text};
  const std::string family = text.substr(0, colon);
  if (family != "cyclic" && family != "dihedral" && family != "symmetric")
    return {text};
  const auto lo = parse_size(trim(text.substr(colon + 1, dots - colon - 1)), "range start");
  const auto hi = parse_size(trim(text.substr(dots + 2)), "range end");
  if (hi < lo) throw GroupError("empty range in '" + text + "'");
  std::vector<std::string> out;
  for (std::size_t v = lo; v <= hi; ++v) out.push_back(family + ":" + std::to_string(v));
  return out;
}

FiniteGroup GroupSpec::build(std::size_t cap) const {
  switch (family) {
    case Family::kCyclic:
      if (parameter > cap) throw GroupError("cyclic order exceeds element cap");
      return from_cyclic(parameter);
    case Family::kDihedral:
      if (2 * parameter > cap) throw GroupError("dihedral order exceeds element cap");
      return from_dihedral(parameter);
    case Family::kSymmetric:
      return from_symmetric(parameter, cap);
    case Family::kPermutation:
      return from_permutations(generators, cap);
    case Family::kProduct: {
      FiniteGroup acc = factors.front().build(cap);
      for (std::size_t i = 1; i < factors.size(); ++i)
        acc = from_direct_product(acc, factors[i].build(cap), cap);
      return acc;
    }
    case Family::kTable: {
      std::ifstream in(path);
      if (!in) throw GroupError("cannot open table file '" + path + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      return from_table(buf.str());
    }
  }
  throw GroupError("unhandled group family");
}

}  // namespace cayspec
