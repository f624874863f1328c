/*
 * Copyright 2026 the momlab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "momlab/scalar.hpp"

namespace momlab {

struct SpdSolution {
  std::vector<Scalar> x;
  Scalar min_pivot;
  Scalar max_pivot;

  /// Ratio of extreme pivots — conditioning diagnostic only.
  Scalar conditioning() const { return max_pivot / min_pivot; }
};

/// Solve G x = b for symmetric positive-definite G by LDL^T with
/// symmetric diagonal pivoting (largest remaining diagonal entry first).
/// Gram matrices of monomial families are Hankel blocks, which are
/// notoriously ill-conditioned; on the exact path the factorization is
/// exact and a nonpositive pivot is a structural signal (dependent
/// columns / too few support points), not rounding noise.
inline SpdSolution solve_spd(std::vector<std::vector<Scalar>> G,
                             std::vector<Scalar> b) {
  std::size_t n = G.size();
  if (n == 0) throw SingularGramError("empty Gram system");
  for (const auto& row : G)
    if (row.size() != n) throw InternalError("Gram matrix not square");
  if (b.size() != n) throw InternalError("right-hand side length mismatch");

  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<Scalar> d(n, Scalar(0));

  for (std::size_t k = 0; k < n; ++k) {
    // diagonal pivot selection
    std::size_t p = k;
    Scalar best = abs(G[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      Scalar cand = abs(G[i][i]);
      if (cand > best) {
        best = cand;
        p = i;
      }
    }
    if (p != k) {
      std::swap(G[p], G[k]);
      for (std::size_t i = 0; i < n; ++i) std::swap(G[i][p], G[i][k]);
      std::swap(b[p], b[k]);
      std::swap(perm[p], perm[k]);
    }
    d[k] = G[k][k];
    if (d[k].is_zero())
      throw SingularGramError("zero pivot at step " + std::to_string(k));
    if (d[k].sgn() < 0)
      throw SingularGramError("negative pivot at step " + std::to_string(k) +
                              " (matrix not positive definite)");
    std::vector<Scalar> l(n, Scalar(0));
    for (std::size_t i = k + 1; i < n; ++i) l[i] = G[i][k] / d[k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) G[i][j] -= l[i] * G[k][j];
      b[i] -= l[i] * b[k];
      G[i][k] = l[i];  // store the multiplier; row k stays as pivot row
    }
  }

  // b now holds y = L^{-1} b; scale by D^{-1} and back-substitute L^T x = z.
  std::vector<Scalar> x(n, Scalar(0));
  for (std::size_t k = n; k-- > 0;) {
    Scalar acc = b[k] / d[k];
    for (std::size_t i = k + 1; i < n; ++i) acc -= G[i][k] * x[i];
    x[k] = acc;
  }

  SpdSolution out;
  out.x.assign(n, Scalar(0));
  for (std::size_t k = 0; k < n; ++k) out.x[perm[k]] = x[k];
  out.min_pivot = abs(d[0]);
  out.max_pivot = abs(d[0]);
  for (std::size_t k = 1; k < n; ++k) {
    Scalar a = abs(d[k]);
    if (a < out.min_pivot) out.min_pivot = a;
    if (a > out.max_pivot) out.max_pivot = a;
  }
  return out;
}

/// Growing unpivoted LDL^T for nested least-squares problems (bordering
/// method): pushing basis vectors one at a time yields the entire
/// residual decay curve from a single factorization.  Valid because the
/// Gram matrix of independent vectors is positive definite in every
/// leading block, so no pivoting is needed.
class IncrementalLdlt {
public:
  std::size_t size() const { return d_.size(); }

  /// g_col = (<v_new, v_0>, ..., <v_new, v_{m-1}>, <v_new, v_new>),
  /// beta = <f, v_new>.
  void push(const std::vector<Scalar>& g_col, const Scalar& beta) {
    std::size_t m = d_.size();
    if (g_col.size() != m + 1) throw InternalError("bad Gram column length");
    // u = L^{-1} g, l = D^{-1} u
    std::vector<Scalar> u(m, Scalar(0)), l(m, Scalar(0));
    for (std::size_t i = 0; i < m; ++i) {
      Scalar acc = g_col[i];
      for (std::size_t j = 0; j < i; ++j) acc -= rows_[i][j] * u[j];
      u[i] = acc;
      l[i] = acc / d_[i];
    }
    Scalar d_new = g_col[m];
    for (std::size_t i = 0; i < m; ++i) d_new -= l[i] * u[i];
    if (d_new.sgn() <= 0)
      throw SingularGramError("nonpositive pivot in nested Gram system at order " +
                              std::to_string(m));
    Scalar y_new = beta;
    for (std::size_t i = 0; i < m; ++i) y_new -= l[i] * y_[i];

    rows_.push_back(std::move(l));
    d_.push_back(d_new);
    y_.push_back(y_new);
    explained_ += y_.back() * y_.back() / d_.back();
    if (d_.size() == 1) {
      min_pivot_ = abs(d_.back());
      max_pivot_ = abs(d_.back());
    } else {
      Scalar a = abs(d_.back());
      if (a < min_pivot_) min_pivot_ = a;
      if (a > max_pivot_) max_pivot_ = a;
    }
  }

  /// ||f||^2 - sum_k y_k^2/d_k: the least-squares residual at the current
  /// truncation order.
  Scalar residual_sq(const Scalar& f_norm_sq) const { return f_norm_sq - explained_; }

  /// sum_k y_k^2/d_k: the squared norm of the projection so far.
  const Scalar& explained() const { return explained_; }

  /// Coefficients solving the current normal equations (back substitution).
  std::vector<Scalar> solution() const {
    std::size_t n = d_.size();
    std::vector<Scalar> x(n, Scalar(0));
    for (std::size_t k = n; k-- > 0;) {
      Scalar acc = y_[k] / d_[k];
      for (std::size_t i = k + 1; i < n; ++i) acc -= rows_[i][k] * x[i];
      x[k] = acc;
    }
    return x;
  }

  Scalar conditioning() const {
    if (d_.empty()) throw InternalError("conditioning of empty system");
    return max_pivot_ / min_pivot_;
  }

private:
  std::vector<std::vector<Scalar>> rows_;  // strictly lower rows of L
  std::vector<Scalar> d_;
  std::vector<Scalar> y_;                  // L^{-1} beta
  Scalar explained_ = Scalar(0);
  Scalar min_pivot_ = Scalar(0);
  Scalar max_pivot_ = Scalar(0);
};

}  // namespace momlab
