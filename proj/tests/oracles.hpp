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

// Slow, independent reference computations used by the tests. None of these
// call into the library beyond FiniteGroup::mul / inverse and Rational.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numbers>
#include <vector>

#include "cayspec/group.hpp"
#include "cayspec/rational.hpp"

namespace oracle {

using cayspec::Element;
using cayspec::FiniteGroup;
using cayspec::Rational;

/// adj[x] lists s*x for each s in S, in the order of `gens`.
inline std::vector<std::vector<Element>> adjacency(const FiniteGroup& g,
                                                   const std::vector<Element>& gens) {
  std::vector<std::vector<Element>> adj(g.order());
  for (Element x = 0; x < g.order(); ++x)
    for (auto s : gens) adj[x].push_back(g.mul(s, x));
  return adj;
}

struct SetResult {
  Rational value;
  std::uint64_t mask = 0;
};

/// Minimum over every nonempty A with |A| <= n/2 of `ratio(A)`, ties to the
/// smaller |A| and then the smaller mask.
template <typename Ratio>
SetResult minimize_all_subsets(std::size_t n, Ratio ratio) {
  SetResult best;
  bool have = false;
  int best_size = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (2 * static_cast<std::size_t>(size) > n) continue;
    const Rational r = ratio(mask);
    if (!have || r < best.value || (r == best.value && size < best_size)) {
      best = {r, mask};
      best_size = size;
      have = true;
    }
  }
  return best;
}

inline SetResult vertex_cheeger(const std::vector<std::vector<Element>>& adj) {
  const std::size_t n = adj.size();
  return minimize_all_subsets(n, [&](std::uint64_t a) {
    std::uint64_t out = 0;
    for (std::size_t x = 0; x < n; ++x)
      if ((a >> x) & 1U)
        for (auto y : adj[x])
          if (!((a >> y) & 1U)) out |= std::uint64_t{1} << y;
    return Rational(std::popcount(out), std::popcount(a));
  });
}

inline SetResult edge_cheeger(const std::vector<std::vector<Element>>& adj) {
  const std::size_t n = adj.size();
  const auto d = static_cast<std::int64_t>(adj.front().size());
  return minimize_all_subsets(n, [&](std::uint64_t a) {
    std::int64_t cut = 0;
    for (std::size_t x = 0; x < n; ++x)
      if ((a >> x) & 1U)
        for (auto y : adj[x])
          if (!((a >> y) & 1U)) ++cut;
    return Rational(cut, d * std::popcount(a));
  });
}

struct DualResult {
  Rational value;
  std::vector<int> labels;  // 0 unlabelled, 1 = V1, 2 = V2
};

/// max 2|E(V1,V2)| / (d(|V1|+|V2|)) over all 3^n labellings with the lowest
/// labelled vertex in V1; ties to the smallest code sum label_v 3^v.
inline DualResult dual_cheeger(const std::vector<std::vector<Element>>& adj) {
  const std::size_t n = adj.size();
  const auto d = static_cast<std::int64_t>(adj.front().size());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  DualResult best;
  bool have = false;
  std::vector<int> label(n);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t v = 0; v < n; ++v) {
      label[v] = static_cast<int>(c % 3);
      c /= 3;
    }
    const auto first = std::find_if(label.begin(), label.end(), [](int l) { return l != 0; });
    if (*first != 1) continue;
    std::int64_t edges = 0;
    std::int64_t size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (label[v] != 0) ++size;
      if (label[v] == 1)
        for (auto y : adj[v])
          if (label[y] == 2) ++edges;
    }
    const Rational r(2 * edges, d * size);
    if (!have || r > best.value) {
      best = {r, label};
      have = true;
    }
  }
  return best;
}

/// Two-colouring by breadth-first search; the graph must be connected.
inline bool two_colourable(const std::vector<std::vector<Element>>& adj) {
  std::vector<int> colour(adj.size(), -1);
  colour[0] = 0;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (auto y : adj[x]) {
      if (colour[y] == -1) {
        colour[y] = 1 - colour[x];
        queue.push_back(y);
      } else if (colour[y] == colour[x]) {
        return false;
      }
    }
  }
  return true;
}

inline bool connected(const std::vector<std::vector<Element>>& adj) {
  std::vector<bool> seen(adj.size(), false);
  seen[0] = true;
  std::deque<Element> queue{0};
  std::size_t count = 1;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (auto y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
  }
  return count == adj.size();
}

/// Every subset of size n/2 that is closed under the group law, as sorted
/// element lists in lexicographic order. Exponential; use for n <= 16.
inline std::vector<std::vector<Element>> index2_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> out;
  if (n % 2 != 0) return out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n / 2) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if ((mask >> a) & 1U)
        for (std::size_t b = 0; b < n && closed; ++b)
          if ((mask >> b) & 1U)
            closed = (mask >> g.mul(static_cast<Element>(a), static_cast<Element>(b))) & 1U;
    if (!closed) continue;
    std::vector<Element> h;
    for (std::size_t a = 0; a < n; ++a)
      if ((mask >> a) & 1U) h.push_back(static_cast<Element>(a));
    out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Eigenvalues of (1/d) * A for the cyclic group Z/n with generators S:
/// (1/d) sum_s cos(2 pi k s / n), sorted ascending.
inline std::vector<double> circulant_spectrum(std::size_t n, const std::vector<Element>& gens) {
  std::vector<double> out;
  for (std::size_t k = 0; k < n; ++k) {
    double sum = 0.0;
    for (auto s : gens)
      sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(k * s) /
                      static_cast<double>(n));
    out.push_back(sum / static_cast<double>(gens.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Cyclic Jacobi rotations on a dense symmetric matrix; eigenvalues ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

/// Dense normalized adjacency from an adjacency list.
inline std::vector<std::vector<double>> normalized(const std::vector<std::vector<Element>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : adj[x]) m[x][y] += 1.0 / static_cast<double>(adj[x].size());
  return m;
}

}  // namespace oracle
