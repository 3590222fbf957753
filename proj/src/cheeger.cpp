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
#include "cayspec/cheeger.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cayspec {
namespace {

using Mask = std::uint64_t;

int thread_index() {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

// Candidate subset for the minimisation kernels. The ratio is boundary / size
// up to a constant factor (1 or d) shared by all candidates.
struct Candidate {
  bool valid = false;
  std::uint64_t boundary = 0;
  std::uint32_t size = 0;
  Mask mask = 0;
};

// Strict total order: smaller ratio, then smaller size, then smaller mask.
bool better(const Candidate& a, const Candidate& b) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(a.boundary) * b.size;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(b.boundary) * a.size;
  if (lhs != rhs) return lhs < rhs;
  if (a.size != b.size) return a.size < b.size;
  return a.mask < b.mask;
}

// True when a set of final size k whose boundary is at least lb cannot tie
// or beat the incumbent.
bool strictly_worse(std::uint64_t lb, std::uint32_t k, const Candidate& inc) {
  if (!inc.valid) return false;
  return static_cast<unsigned __int128>(lb) * inc.size >
         static_cast<unsigned __int128>(inc.boundary) * k;
}

enum class Metric { kVertex, kEdge };

class SubsetSearch {
 public:
  SubsetSearch(const NeighborTable& table, Metric metric)
      : table_(table), metric_(metric), n_(table.n) {
    full_ = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
    nbr_.assign(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (auto y : table.row(x)) nbr_[x] |= Mask{1} << y;
  }

  std::size_t n() const { return n_; }

  // Exhaustive search over sets of size k containing `first` as their
  // smallest member.
  void run_task(std::uint32_t k, std::size_t first, Candidate& best) const {
    const Mask p = Mask{1} << first;
    const Mask x = first == 0 ? 0 : ((Mask{1} << first) - 1);
    const std::uint64_t lb = metric_ == Metric::kVertex
                                 ? static_cast<std::uint64_t>(std::popcount(nbr_[first] & x))
                                 : count_in(first, x);
    descend(k, first + 1, p, x, nbr_[first], 1, lb, best);
  }

  Candidate evaluate(Mask a) const {
    Candidate c;
    c.valid = true;
    c.mask = a;
    c.size = static_cast<std::uint32_t>(std::popcount(a));
    c.boundary = exact_boundary(a);
    return c;
  }

 private:
  std::uint64_t count_in(std::size_t v, Mask set) const {
    std::uint64_t c = 0;
    for (auto y : table_.row(v))
      if ((set >> y) & 1U) ++c;
    return c;
  }

  std::uint64_t exact_boundary(Mask a) const {
    if (metric_ == Metric::kVertex) {
      Mask reach = 0;
      for (Mask w = a; w != 0; w &= w - 1) reach |= nbr_[std::countr_zero(w)];
      return static_cast<std::uint64_t>(std::popcount(reach & ~a & full_));
    }
    std::uint64_t c = 0;
    for (Mask w = a; w != 0; w &= w - 1) c += count_in(std::countr_zero(w), ~a & full_);
    return c;
  }

  void descend(std::uint32_t k, std::size_t i, Mask p, Mask x, Mask np, std::uint32_t c,
               std::uint64_t lb, Candidate& best) const {
    if (strictly_worse(lb, k, best)) return;
    if (c == k) {
      Candidate cand;
      cand.valid = true;
      cand.mask = p;
      cand.size = k;
      cand.boundary = metric_ == Metric::kVertex
                          ? static_cast<std::uint64_t>(std::popcount(np & ~p & full_))
                          : exact_boundary(p);
      if (better(cand, best)) best = cand;
      return;
    }
    if (n_ - i < k - c) return;
    const Mask bit = Mask{1} << i;
    // include i
    {
      const std::uint64_t nlb =
          metric_ == Metric::kVertex
              ? static_cast<std::uint64_t>(std::popcount((np | nbr_[i]) & x))
              : lb + count_in(i, x);
      descend(k, i + 1, p | bit, x, np | nbr_[i], c + 1, nlb, best);
    }
    // exclude i
    {
      const std::uint64_t nlb =
          metric_ == Metric::kVertex
              ? static_cast<std::uint64_t>(std::popcount(np & (x | bit)))
              : lb + count_in(i, p);
      descend(k, i + 1, p, x | bit, np, c, nlb, best);
    }
  }

  const NeighborTable& table_;
  Metric metric_;
  std::size_t n_;
  Mask full_ = 0;
  std::vector<Mask> nbr_;
};

void check_caps(const NeighborTable& table, std::size_t cap, const char* cap_name) {
  if (table.n > cap) throw CapExceeded(cap_name, cap, table.n);
  if (table.n > kKernelWordLimit)
    throw CapExceeded("kernel_word_limit", kKernelWordLimit, table.n);
}

CheegerCertificate to_certificate(const Candidate& best, const NeighborTable& table,
                                  Metric metric) {
  CheegerCertificate cert;
  cert.kind = metric == Metric::kVertex ? CheegerKind::kVertex : CheegerKind::kEdge;
  const std::int64_t scale =
      metric == Metric::kVertex ? 1 : static_cast<std::int64_t>(table.degree);
  cert.value = Rational(static_cast<std::int64_t>(best.boundary),
                        scale * static_cast<std::int64_t>(best.size));
  cert.witness = VertexSet::from_mask(table.n, best.mask);
  cert.witness2 = VertexSet(table.n);
  return cert;
}

CheegerCertificate minimize(const NeighborTable& table, const SearchOptions& opts,
                            Metric metric, bool parallel) {
  check_caps(table, opts.max_exact, "max_exact");
  if (table.n < 2) throw CheegerError("no admissible subset for n < 2");
  if (metric == Metric::kEdge && table.degree == 0)
    throw CheegerError("edge Cheeger constant needs degree >= 1");
  const SubsetSearch search(table, metric);
  const std::size_t n = table.n;
  const std::uint32_t half = static_cast<std::uint32_t>(n / 2);

  Candidate seed;
  for (std::size_t v = 0; v < n; ++v) {
    const Candidate c = search.evaluate(Mask{1} << v);
    if (better(c, seed)) seed = c;
  }

  struct Task {
    std::uint32_t k;
    std::size_t first;
  };
  std::vector<Task> tasks;
  for (std::uint32_t k = 1; k <= half; ++k)
    for (std::size_t f = 0; f + k <= n; ++f) tasks.push_back({k, f});

  int workers = parallel ? std::max(1, opts.workers) : 1;
  std::vector<Candidate> per_thread(static_cast<std::size_t>(workers), seed);
  const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());
  if (workers > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::ptrdiff_t t = 0; t < task_count; ++t) {
      auto& best = per_thread[static_cast<std::size_t>(thread_index())];
      search.run_task(tasks[t].k, tasks[t].first, best);
    }
  } else {
    for (std::ptrdiff_t t = 0; t < task_count; ++t)
      search.run_task(tasks[t].k, tasks[t].first, per_thread[0]);
  }
  Candidate best = seed;
  for (const auto& c : per_thread)
    if (better(c, best)) best = c;
  return to_certificate(best, table, metric);
}

// Dual search state: labels 0 = V3, 1 = V1, 2 = V2.
struct DualCandidate {
  bool valid = false;
  std::uint64_t edges = 0;
  std::uint32_t size = 0;  // |V1| + |V2|
  std::uint64_t code = 0;
  std::vector<std::uint8_t> labels;
};

// Larger ratio wins, then the smaller code.
bool dual_better(const DualCandidate& a, const DualCandidate& b) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  const unsigned __int128 lhs = static_cast<unsigned __int128>(a.edges) * b.size;
  const unsigned __int128 rhs = static_cast<unsigned __int128>(b.edges) * a.size;
  if (lhs != rhs) return lhs > rhs;
  return a.code < b.code;
}

class DualSearch {
 public:
  explicit DualSearch(const NeighborTable& table) : table_(table), n_(table.n) {
    fixed_ = std::min<std::size_t>(n_, 3);
    pow3_.assign(n_ + 1, 1);
    for (std::size_t i = 1; i <= n_; ++i) pow3_[i] = pow3_[i - 1] * 3;
  }

  std::size_t task_count() const { return pow3_[fixed_]; }

  void run_task(std::size_t task, DualCandidate& best) const {
    std::vector<std::uint8_t> label(n_, 0);
    const std::size_t free = n_ - fixed_;
    for (std::size_t j = 0; j < fixed_; ++j)
      label[free + j] = static_cast<std::uint8_t>((task / pow3_[j]) % 3);
    std::uint64_t edges = 0;
    std::uint32_t size = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (label[v] == 1) edges += count_label(v, label, 2);
      if (label[v] != 0) ++size;
    }
    const std::uint64_t base = static_cast<std::uint64_t>(task) * pow3_[free];
    std::uint64_t local = 0;
    while (true) {
      consider(label, edges, size, base + local, best);
      // base-3 increment over the free digits
      std::size_t i = 0;
      for (; i < free; ++i) {
        const std::uint8_t old = label[i];
        const auto next = static_cast<std::uint8_t>((old + 1) % 3);
        edges -= contribution(i, label, old);
        label[i] = next;
        edges += contribution(i, label, next);
        if (old == 0) ++size;
        if (next == 0) --size;
        if (next != 0) break;
      }
      if (i == free) break;
      ++local;
    }
  }

 private:
  std::uint64_t count_label(std::size_t v, const std::vector<std::uint8_t>& label,
                            std::uint8_t want) const {
    std::uint64_t c = 0;
    for (auto y : table_.row(v))
      if (label[y] == want) ++c;
    return c;
  }

  std::uint64_t contribution(std::size_t v, const std::vector<std::uint8_t>& label,
                             std::uint8_t as) const {
    if (as == 1) return count_label(v, label, 2);
    if (as == 2) return count_label(v, label, 1);
    return 0;
  }

  void consider(const std::vector<std::uint8_t>& label, std::uint64_t edges,
                std::uint32_t size, std::uint64_t code, DualCandidate& best) const {
    if (size == 0) return;
    for (std::size_t v = 0; v < n_; ++v) {
      if (label[v] == 0) continue;
      if (label[v] != 1) return;  // V1 <-> V2 mirror image
      break;
    }
    DualCandidate cand;
    cand.valid = true;
    cand.edges = edges;
    cand.size = size;
    cand.code = code;
    if (!dual_better(cand, best)) return;
    cand.labels = label;
    best = std::move(cand);
  }

  const NeighborTable& table_;
  std::size_t n_;
  std::size_t fixed_ = 0;
  std::vector<std::uint64_t> pow3_;
};

CheegerCertificate dual_search(const NeighborTable& table, const SearchOptions& opts,
                               bool parallel) {
  check_caps(table, opts.max_dual, "max_dual");
  if (table.n == 0) throw CheegerError("dual Cheeger constant needs n >= 1");
  if (table.degree == 0) throw CheegerError("dual Cheeger constant needs degree >= 1");
  const DualSearch search(table);
  const auto tasks = static_cast<std::ptrdiff_t>(search.task_count());
  int workers = parallel ? std::max(1, opts.workers) : 1;
  std::vector<DualCandidate> per_thread(static_cast<std::size_t>(workers));
  if (workers > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::ptrdiff_t t = 0; t < tasks; ++t)
      search.run_task(static_cast<std::size_t>(t),
                      per_thread[static_cast<std::size_t>(thread_index())]);
  } else {
    for (std::ptrdiff_t t = 0; t < tasks; ++t)
      search.run_task(static_cast<std::size_t>(t), per_thread[0]);
  }
  DualCandidate best;
  for (auto& c : per_thread)
    if (dual_better(c, best)) best = std::move(c);

  CheegerCertificate cert;
  cert.kind = CheegerKind::kDual;
  cert.witness = VertexSet(table.n);
  cert.witness2 = VertexSet(table.n);
  for (std::size_t v = 0; v < table.n; ++v) {
    if (best.labels[v] == 1) cert.witness.insert(v);
    if (best.labels[v] == 2) cert.witness2.insert(v);
  }
  cert.value = Rational(2 * static_cast<std::int64_t>(best.edges),
                        static_cast<std::int64_t>(table.degree) * best.size);
  return cert;
}

}  // namespace

CheegerCertificate vertex_cheeger(const NeighborTable& table, const SearchOptions& opts) {
  return minimize(table, opts, Metric::kVertex, true);
}
CheegerCertificate edge_cheeger(const NeighborTable& table, const SearchOptions& opts) {
  return minimize(table, opts, Metric::kEdge, true);
}
CheegerCertificate dual_cheeger(const NeighborTable& table, const SearchOptions& opts) {
  return dual_search(table, opts, true);
}

namespace serial {
CheegerCertificate vertex_cheeger(const NeighborTable& table, const SearchOptions& opts) {
  return minimize(table, opts, Metric::kVertex, false);
}
CheegerCertificate edge_cheeger(const NeighborTable& table, const SearchOptions& opts) {
  return minimize(table, opts, Metric::kEdge, false);
}
CheegerCertificate dual_cheeger(const NeighborTable& table, const SearchOptions& opts) {
  return dual_search(table, opts, false);
}
}  // namespace serial

ExpansionCheck expansion_check(const CayleyGraph& graph, const Rational& eps,
                               const SearchOptions& opts) {
  ExpansionCheck out;
  out.minimizer = vertex_cheeger(graph, opts);
  out.holds = out.minimizer.value >= eps;
  return out;
}

VertexEdgeRelation vertex_edge_relation_check(const CayleyGraph& graph, const Rational& h,
                                              const Rational& edge_h) {
  VertexEdgeRelation out;
  out.h = h;
  out.edge_h = edge_h;
  const Rational d(static_cast<std::int64_t>(graph.degree()));
  out.holds = h / d <= edge_h && edge_h <= h;
  return out;
}

VertexEdgeRelation vertex_edge_relation_check(const CayleyGraph& graph,
                                              const SearchOptions& opts) {
  return vertex_edge_relation_check(graph, vertex_cheeger(graph, opts).value,
                                    edge_cheeger(graph, opts).value);
}

CheegerBuserCheck cheeger_buser_check(const Rational& edge_h, const SpectralSummary& s,
                                      double tol) {
  CheegerBuserCheck out;
  out.edge_h = edge_h;
  out.lambda2 = s.lambda2();
  const double lower = (edge_h * edge_h / Rational(2)).to_double();
  const double upper = (Rational(2) * edge_h).to_double();
  out.lower_margin = out.lambda2 - lower;
  out.upper_margin = upper - out.lambda2;
  out.holds = out.lower_margin >= -tol && out.upper_margin >= -tol;
  return out;
}

CheegerBuserCheck cheeger_buser_check(const CayleyGraph& graph, double tol,
                                      const SearchOptions& opts) {
  return cheeger_buser_check(edge_cheeger(graph, opts).value, spectrum(graph), tol);
}

BauerJostCheck bauer_jost_check(const Rational& dual_h, const SpectralSummary& s,
                                double tol) {
  BauerJostCheck out;
  out.dual_h = dual_h;
  out.lambda_max = s.lambda_max();
  const Rational slack = Rational(1) - dual_h;
  const double gap = 2.0 - out.lambda_max;
  out.lower_margin = gap - (slack * slack / Rational(2)).to_double();
  out.upper_margin = (Rational(2) * slack).to_double() - gap;
  out.sandwich_holds = out.lower_margin >= -tol && out.upper_margin >= -tol;
  out.equivalence_holds = (dual_h == Rational(1)) == is_bipartite_spectral(s, tol);
  out.holds = out.sandwich_holds && out.equivalence_holds;
  return out;
}

BauerJostCheck bauer_jost_check(const CayleyGraph& graph, double tol,
                                const SearchOptions& opts) {
  return bauer_jost_check(dual_cheeger(graph, opts).value, spectrum(graph), tol);
}

}  // namespace cayspec
