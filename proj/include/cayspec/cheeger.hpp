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
#include <stdexcept>
#include <string>

#include "cayspec/cayley.hpp"
#include "cayspec/rational.hpp"
#include "cayspec/spectral.hpp"
#include "cayspec/vertex_set.hpp"

namespace cayspec {

inline constexpr std::size_t kDefaultMaxExact = 24;
inline constexpr std::size_t kDefaultMaxDual = 14;
/// Hard limit of the bitmask kernels.
inline constexpr std::size_t kKernelWordLimit = 62;

/// Raised when an exhaustive search is asked for a graph above its size cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string cap, std::size_t limit, std::size_t n)
      : std::runtime_error(cap + "=" + std::to_string(limit) + " exceeded by n=" +
                           std::to_string(n)),
        cap_(std::move(cap)),
        limit_(limit) {}
  const std::string& cap() const { return cap_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string cap_;
  std::size_t limit_;
};

class CheegerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  std::size_t max_exact = kDefaultMaxExact;
  std::size_t max_dual = kDefaultMaxDual;
  /// OpenMP threads for the search kernels. Results do not depend on it.
  int workers = 1;
};

enum class CheegerKind { kVertex, kEdge, kDual };

/// Exact Cheeger value with the set achieving it. For the dual constant the
/// witness is V1 and `witness2` is V2.
struct CheegerCertificate {
  CheegerKind kind = CheegerKind::kVertex;
  Rational value;
  VertexSet witness;
  VertexSet witness2;
};

/// min |N(A) \ A| / |A| over 1 <= |A| <= floor(n/2). Ties go to the smaller
/// |A|, then to the numerically smaller bitmask.
CheegerCertificate vertex_cheeger(const NeighborTable& table, const SearchOptions& opts = {});
/// min #{(a, s) : s*a outside A} / (d |A|), same range and tie-break.
CheegerCertificate edge_cheeger(const NeighborTable& table, const SearchOptions& opts = {});
/// max 2|E(V1, V2)| / (d (|V1| + |V2|)) over disjoint V1, V2 not both empty.
/// Ties go to the smallest base-3 labelling code (label 1 = V1, 2 = V2).
CheegerCertificate dual_cheeger(const NeighborTable& table, const SearchOptions& opts = {});

inline CheegerCertificate vertex_cheeger(const CayleyGraph& g, const SearchOptions& o = {}) {
  return vertex_cheeger(g.neighbor_table(), o);
}
inline CheegerCertificate edge_cheeger(const CayleyGraph& g, const SearchOptions& o = {}) {
  return edge_cheeger(g.neighbor_table(), o);
}
inline CheegerCertificate dual_cheeger(const CayleyGraph& g, const SearchOptions& o = {}) {
  return dual_cheeger(g.neighbor_table(), o);
}

/// Single-threaded reference versions of the same kernels, kept for tests
/// and benchmarks.
namespace serial {
CheegerCertificate vertex_cheeger(const NeighborTable& table, const SearchOptions& opts = {});
CheegerCertificate edge_cheeger(const NeighborTable& table, const SearchOptions& opts = {});
CheegerCertificate dual_cheeger(const NeighborTable& table, const SearchOptions& opts = {});
}  // namespace serial

struct ExpansionCheck {
  bool holds = false;
  CheegerCertificate minimizer;
};
/// True iff q|delta(A)| >= p|A| for every admissible A, eps = p/q.
ExpansionCheck expansion_check(const CayleyGraph& graph, const Rational& eps,
                               const SearchOptions& opts = {});

struct VertexEdgeRelation {
  bool holds = false;
  Rational h;
  Rational edge_h;
};
/// h/d <= edge h <= h, exactly.
VertexEdgeRelation vertex_edge_relation_check(const CayleyGraph& graph,
                                              const SearchOptions& opts = {});
VertexEdgeRelation vertex_edge_relation_check(const CayleyGraph& graph, const Rational& h,
                                              const Rational& edge_h);

struct CheegerBuserCheck {
  bool holds = false;
  double lower_margin = 0.0;  // lambda_2 - edge_h^2 / 2
  double upper_margin = 0.0;  // 2 edge_h - lambda_2
  Rational edge_h;
  double lambda2 = 0.0;
};
/// edge_h^2 / 2 <= lambda_2 <= 2 edge_h within tol.
CheegerBuserCheck cheeger_buser_check(const CayleyGraph& graph, double tol = kDefaultTolerance,
                                      const SearchOptions& opts = {});
CheegerBuserCheck cheeger_buser_check(const Rational& edge_h, const SpectralSummary& s,
                                      double tol = kDefaultTolerance);

struct BauerJostCheck {
  bool holds = false;
  bool sandwich_holds = false;
  bool equivalence_holds = false;  // dual_h == 1 <=> lambda_n == 2 (within tol)
  double lower_margin = 0.0;       // (2 - lambda_n) - (1 - dual_h)^2 / 2
  double upper_margin = 0.0;       // 2 (1 - dual_h) - (2 - lambda_n)
  Rational dual_h;
  double lambda_max = 0.0;
};
/// (1 - dual_h)^2 / 2 <= 2 - lambda_n <= 2 (1 - dual_h) within tol.
BauerJostCheck bauer_jost_check(const CayleyGraph& graph, double tol = kDefaultTolerance,
                                const SearchOptions& opts = {});
BauerJostCheck bauer_jost_check(const Rational& dual_h, const SpectralSummary& s,
                                double tol = kDefaultTolerance);

}  // namespace cayspec
