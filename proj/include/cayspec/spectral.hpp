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
#include <vector>

#include "cayspec/cayley.hpp"

namespace cayspec {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kMaxDenseOrder = 2048;

class SpectralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double max_asymmetry() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]; empty if not requested
};

/// All eigenvalues of a symmetric matrix, ascending. Householder reduction to
/// tridiagonal form followed by implicit QL iteration.
/// Throws SpectralError on asymmetric input (> 1e-12) or non-convergence.
EigenDecomposition eigen_symmetric(const DenseMatrix& m, bool want_vectors);
std::vector<double> eigenvalues_symmetric(const DenseMatrix& m);

/// max_j ||M v_j - mu_j v_j||_inf over the eigenpairs of `d`.
double max_residual(const DenseMatrix& m, const EigenDecomposition& d);

/// T[x][y] = #{s in S : s*x = y} / d.
DenseMatrix normalized_adjacency(const CayleyGraph& graph);
/// Operator of the S' multigraph: #{(s,t) : s*t*x = y} / d^2, built from counts.
DenseMatrix square_operator(const CayleyGraph& graph);
/// Integer check that every row of the adjacency count matrix sums to d.
bool row_sums_exact(const CayleyGraph& graph);

/// Eigenvalues t of T and lambda = 1 - t of L = I - T.
/// `t` is ascending (t[0] = t_n is the smallest); `lambda` is ascending too,
/// so lambda[i] = 1 - t[n-1-i] and lambda[0] = lambda_1 = 0.
struct SpectralSummary {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<double> t;
  std::vector<double> lambda;

  double t_min() const { return t.front(); }
  double t_max() const { return t.back(); }
  /// Second largest t, i.e. t_2; equals t_1 for n == 1.
  double t2() const { return t.size() >= 2 ? t[t.size() - 2] : t.back(); }
  double lambda2() const { return lambda.size() >= 2 ? lambda[1] : lambda.front(); }
  double lambda_max() const { return lambda.back(); }
};

SpectralSummary spectrum(const CayleyGraph& graph);
SpectralSummary summarize(std::vector<double> t_ascending, std::size_t d);

bool is_connected(const SpectralSummary& s, double tol = kDefaultTolerance);
/// lambda_n >= 2 - tol.
bool is_bipartite_spectral(const SpectralSummary& s, double tol = kDefaultTolerance);

struct SquareSpectrumCheck {
  bool consistent = false;
  double max_abs_diff = 0.0;
};
/// Compares the S' operator spectrum against the squares of the T spectrum.
SquareSpectrumCheck square_spectrum_consistency(const CayleyGraph& graph,
                                                double tol = kDefaultTolerance);

}  // namespace cayspec
