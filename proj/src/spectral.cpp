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
#include "cayspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace cayspec {
namespace {

constexpr double kSymmetryTolerance = 1e-12;

// Householder reduction of the symmetric matrix held in v to tridiagonal form.
// On return diag/off hold the tridiagonal entries (off[0] unused) and v holds
// the accumulated orthogonal transform.
void tridiagonalize(DenseMatrix& v, std::vector<double>& diag, std::vector<double>& off) {
  const std::size_t n = v.size();
  for (std::size_t j = 0; j < n; ++j) diag[j] = v(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(diag[k]);
    if (scale == 0.0) {
      off[i] = diag[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        diag[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        diag[k] /= scale;
        h += diag[k] * diag[k];
      }
      double f = diag[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      off[i] = scale * g;
      h -= f * g;
      diag[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) off[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = diag[j];
        v(j, i) = f;
        g = off[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * diag[k];
          off[k] += v(k, j) * f;
        }
        off[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        off[j] /= h;
        f += off[j] * diag[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) off[j] -= hh * diag[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = diag[j];
        g = off[j];
        for (std::size_t k = j; k <= i - 1; ++k) v(k, j) -= (f * off[k] + g * diag[k]);
        diag[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    diag[i] = h;
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = diag[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) diag[k] = v(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * diag[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    diag[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  off[0] = 0.0;
}

// Implicit QL iteration with Wilkinson-style shifts on the tridiagonal matrix.
void diagonalize(DenseMatrix& v, std::vector<double>& diag, std::vector<double>& off,
                 bool want_vectors) {
  const std::size_t n = v.size();
  for (std::size_t i = 1; i < n; ++i) off[i - 1] = off[i];
  off[n - 1] = 0.0;

  const double eps = std::numeric_limits<double>::epsilon();
  const std::size_t iteration_cap = 30 * n + 30;
  double f = 0.0;
  double tst1 = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(diag[l]) + std::abs(off[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(off[m]) <= eps * tst1) break;
      ++m;
    }
    if (m == n) m = n - 1;
    if (m > l) {
      std::size_t iter = 0;
      do {
        if (++iter > iteration_cap)
          throw SpectralError("eigenvalue iteration failed to converge");
        double g = diag[l];
        double p = (diag[l + 1] - g) / (2.0 * off[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        diag[l] = off[l] / (p + r);
        diag[l + 1] = off[l] * (p + r);
        const double dl1 = diag[l + 1];
        double h = g - diag[l];
        for (std::size_t i = l + 2; i < n; ++i) diag[i] -= h;
        f += h;

        p = diag[m];
        double c = 1.0;
        double c2 = c;
        double c3 = c;
        const double el1 = off[l + 1];
        double s = 0.0;
        double s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * off[ii];
          h = c * p;
          r = std::hypot(p, off[ii]);
          off[ii + 1] = s * r;
          s = off[ii] / r;
          c = p / r;
          p = c * diag[ii] - s * g;
          diag[ii + 1] = h + s * (c * g + s * diag[ii]);
          if (want_vectors) {
            for (std::size_t k = 0; k < n; ++k) {
              h = v(k, ii + 1);
              v(k, ii + 1) = s * v(k, ii) + c * h;
              v(k, ii) = c * v(k, ii) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * off[l] / dl1;
        off[l] = s * p;
        diag[l] = c * p;
      } while (std::abs(off[l]) > eps * tst1);
    }
    diag[l] += f;
    off[l] = 0.0;
  }
}

}  // namespace

double DenseMatrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  return worst;
}

EigenDecomposition eigen_symmetric(const DenseMatrix& m, bool want_vectors) {
  const std::size_t n = m.size();
  if (m.max_asymmetry() > kSymmetryTolerance)
    throw SpectralError("matrix is not symmetric");
  if (n > kMaxDenseOrder)
    throw SpectralError("matrix order " + std::to_string(n) + " exceeds dense cap " +
                        std::to_string(kMaxDenseOrder));
  EigenDecomposition out;
  if (n == 0) return out;
  DenseMatrix v = m;
  std::vector<double> diag(n, 0.0);
  std::vector<double> off(n, 0.0);
  tridiagonalize(v, diag, off);
  diagonalize(v, diag, off, want_vectors);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });
  out.values.reserve(n);
  for (auto idx : order) out.values.push_back(diag[idx]);
  if (want_vectors) {
    out.vectors = DenseMatrix(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
  }
  return out;
}

std::vector<double> eigenvalues_symmetric(const DenseMatrix& m) {
  return eigen_symmetric(m, false).values;
}

double max_residual(const DenseMatrix& m, const EigenDecomposition& d) {
  const std::size_t n = m.size();
  if (d.vectors.size() != n) throw SpectralError("decomposition has no eigenvectors");
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k) acc += m(i, k) * d.vectors(k, j);
      worst = std::max(worst, std::abs(acc - d.values[j] * d.vectors(i, j)));
    }
  return worst;
}

DenseMatrix normalized_adjacency(const CayleyGraph& graph) {
  const std::size_t n = graph.order();
  const double d = static_cast<double>(graph.degree());
  DenseMatrix t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : graph.neighbors(static_cast<Element>(x))) t(x, y) += 1.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t(x, y) /= d;
  return t;
}

DenseMatrix square_operator(const CayleyGraph& graph) {
  const auto table = graph.square_neighbor_table();
  const std::size_t n = table.n;
  const double mass = static_cast<double>(table.degree);
  DenseMatrix t(n);
  for (std::size_t x = 0; x < n; ++x)
    for (auto y : table.row(x)) t(x, y) += 1.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t(x, y) /= mass;
  return t;
}

bool row_sums_exact(const CayleyGraph& graph) {
  const std::size_t n = graph.order();
  std::vector<std::size_t> counts(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto y : graph.neighbors(static_cast<Element>(x))) ++counts[y];
    if (std::accumulate(counts.begin(), counts.end(), std::size_t{0}) != graph.degree())
      return false;
  }
  return true;
}

SpectralSummary summarize(std::vector<double> t_ascending, std::size_t d) {
  SpectralSummary s;
  s.n = t_ascending.size();
  s.d = d;
  s.t = std::move(t_ascending);
  s.lambda.reserve(s.n);
  for (std::size_t i = s.n; i-- > 0;) s.lambda.push_back(1.0 - s.t[i]);
  return s;
}

SpectralSummary spectrum(const CayleyGraph& graph) {
  return summarize(eigenvalues_symmetric(normalized_adjacency(graph)), graph.degree());
}

bool is_connected(const SpectralSummary& s, double tol) {
  if (s.n <= 1) return true;
  return s.lambda2() > tol;
}

bool is_bipartite_spectral(const SpectralSummary& s, double tol) {
  return s.lambda_max() >= 2.0 - tol;
}

SquareSpectrumCheck square_spectrum_consistency(const CayleyGraph& graph, double tol) {
  const auto t = eigenvalues_symmetric(normalized_adjacency(graph));
  const auto sq = eigenvalues_symmetric(square_operator(graph));
  std::vector<double> squares;
  squares.reserve(t.size());
  for (double v : t) squares.push_back(v * v);
  std::sort(squares.begin(), squares.end());
  SquareSpectrumCheck out;
  for (std::size_t i = 0; i < sq.size(); ++i)
    out.max_abs_diff = std::max(out.max_abs_diff, std::abs(sq[i] - squares[i]));
  out.consistent = out.max_abs_diff <= tol;
  return out;
}

}  // namespace cayspec
