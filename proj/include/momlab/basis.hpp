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
#include <vector>

#include "momlab/moments.hpp"
#include "momlab/poly.hpp"
#include "momlab/qseries.hpp"
#include "momlab/recurrence.hpp"

namespace momlab {

/// One orthonormal polynomial in factored form: p_n = c / sqrt(norm_sq).
/// Keeping the square root unevaluated lets every downstream quantity that
/// only involves squares or coefficient ratios (kernel sums, Christoffel
/// masses, gamma-ratio tables, orthonormality inner products) stay exact
/// on the exact path.  Invariant: leading coefficient of c is positive,
/// so the gamma_{n,n} > 0 convention holds.
struct BasisRow {
  Poly c;
  Scalar norm_sq;
};

class OrthonormalBasis {
public:
  OrthonormalBasis(std::vector<BasisRow> rows, Scalar s0)
      : rows_(std::move(rows)), s0_(std::move(s0)) {
    for (std::size_t n = 0; n < rows_.size(); ++n) {
      const BasisRow& r = rows_[n];
      if (r.c.degree() != static_cast<long>(n))
        throw InternalError("basis row degree mismatch");
      if (r.c.c.back().sgn() <= 0)
        throw InternalError("basis row leading coefficient not positive");
      if (r.norm_sq.sgn() <= 0)
        throw InternalError("basis row norm not positive");
    }
  }

  /// Largest available row index N (rows 0..N exist).
  std::size_t max_row() const { return rows_.size() - 1; }
  const Scalar& s0() const { return s0_; }

  const BasisRow& row(std::size_t n) const {
    if (n >= rows_.size()) throw InternalError("basis row index out of range");
    return rows_[n];
  }

  bool is_exact() const {
    for (const BasisRow& r : rows_) {
      if (!r.norm_sq.is_exact()) return false;
      for (const Scalar& v : r.c.c)
        if (!v.is_exact()) return false;
    }
    return true;
  }

  int gamma_sign(std::size_t n, std::size_t k) const {
    return row(n).c.coeff(k).sgn();
  }

  /// sign(gamma_{n,k}) * gamma_{n,k}^2 = sign(c_{n,k}) * c_{n,k}^2 / norm_sq.
  /// Representation-invariant (any common rescaling of c and sqrt(norm_sq)
  /// cancels), hence the quantity used for cross-construction comparisons.
  Scalar gamma_signed_sq(std::size_t n, std::size_t k) const {
    const BasisRow& r = row(n);
    Scalar ck = r.c.coeff(k);
    Scalar v = ck * ck / r.norm_sq;
    return ck.sgn() < 0 ? -v : v;
  }

  /// gamma_{n,k} itself; the square root may force the float path.
  Scalar gamma(std::size_t n, std::size_t k, unsigned bits = kDefaultPrecision) const {
    const BasisRow& r = row(n);
    return r.c.coeff(k) / sqrt_scalar(r.norm_sq, bits);
  }

  /// p_n as an explicit polynomial (coefficients gamma_{n,k}).
  /// Divides coefficientwise (not by a precomputed reciprocal) so each
  /// entry equals gamma(n, k) bit for bit on the float path.
  Poly row_poly(std::size_t n, unsigned bits = kDefaultPrecision) const {
    const BasisRow& r = row(n);
    Scalar root = sqrt_scalar(r.norm_sq, bits);
    Poly p;
    p.c.reserve(r.c.c.size());
    for (const Scalar& v : r.c.c) p.c.push_back(v / root);
    p.trim();
    return p;
  }

  /// gamma_{n,k} / gamma_{n,k+1} = c_{n,k} / c_{n,k+1}: exact on the exact
  /// path.  For supp within [0,inf) the sign pattern guarantees nonzero
  /// denominators; anything else is a hard failure by contract.
  Scalar ratio(std::size_t n, std::size_t k) const {
    const BasisRow& r = row(n);
    if (k + 1 > static_cast<std::size_t>(r.c.degree()))
      throw InternalError("ratio index out of range");
    Scalar denom = r.c.coeff(k + 1);
    if (denom.is_zero())
      throw InternalError("vanishing gamma coefficient in ratio table");
    return r.c.coeff(k) / denom;
  }

  /// <c_m, c_n> under the moment functional; orthogonality means this is
  /// 0 for m != n and norm_sq(n) for m = n — both exactly checkable.
  Scalar raw_inner(const MomentSequence& s, std::size_t m, std::size_t n) const {
    const Poly& pm = row(m).c;
    const Poly& pn = row(n).c;
    Scalar acc(0);
    for (std::size_t j = 0; j < pm.c.size(); ++j) {
      if (pm.c[j].is_zero()) continue;
      for (std::size_t k = 0; k < pn.c.size(); ++k) {
        if (pn.c[k].is_zero()) continue;
        acc += pm.c[j] * pn.c[k] * s.at(j + k);
      }
    }
    return acc;
  }

private:
  std::vector<BasisRow> rows_;
  Scalar s0_;
};

/// Rows 0..n of the orthonormal basis from recurrence data:
/// p_k = pi_k / ||pi_k|| with ||pi_k||^2 = s_0 b_1...b_k.  Needs b_1..b_n,
/// i.e. a recurrence of depth n+1 (chebyshev_recurrence(s, n+1)).
inline OrthonormalBasis orthonormal_basis(const RecurrenceCoeffs& rc, std::size_t n) {
  if (rc.b.size() < n)
    throw InsufficientMomentsError("basis row " + std::to_string(n) +
                                   " needs recurrence depth " + std::to_string(n + 1));
  std::vector<BasisRow> rows;
  rows.reserve(n + 1);
  Poly prev;                      // pi_{k-1}
  Poly cur = Poly::constant(Scalar(1));  // pi_k
  Scalar nsq = rc.s0;
  rows.push_back({cur, nsq});
  Poly x = Poly::monomial(1);
  for (std::size_t k = 0; k < n; ++k) {
    Poly next = (x - Poly::constant(rc.a_at(k))) * cur;
    if (k >= 1) next = next - rc.b_at(k) * prev;
    prev = std::move(cur);
    cur = std::move(next);
    nsq = nsq * rc.b_at(k + 1);
    rows.push_back({cur, nsq});
  }
  return OrthonormalBasis(std::move(rows), rc.s0);
}

/// Stieltjes–Wigert basis rows 0..n_max in factored form, from the closed
/// formula for the lognormal orthonormal polynomials
///   p_n(x) = (-1)^n sqrt(q^n/(q;q)_n)
///            * sum_k [n choose k]_q (-1)^k q^{k^2} x^k
/// (positive leading coefficient after absorbing the (-1)^n):
///   c_{n,k} = (-1)^{n-k} [n choose k]_q q^{k^2},  norm_sq = (q;q)_n / q^n.
inline OrthonormalBasis sw_basis(const Scalar& q, std::size_t n_max) {
  if (!(q > Scalar(0) && q < Scalar(1)))
    throw ConfigError("Stieltjes–Wigert parameter q must lie in (0,1)");
  std::vector<BasisRow> rows;
  rows.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Poly c;
    c.c.resize(n + 1, Scalar(0));
    Scalar qk2(1);   // q^{k^2}, advanced via q^{(k+1)^2} = q^{k^2} * q^{2k+1}
    Scalar qodd = q; // q^{2k+1}
    for (std::size_t k = 0; k <= n; ++k) {
      Scalar term = q_binomial(q, n, k) * qk2;
      c.c[k] = ((n - k) % 2 == 1) ? -term : term;
      qk2 *= qodd;
      qodd *= q * q;
    }
    c.trim();
    Scalar nsq = q_pochhammer(q, n) / pow_scalar_ui(q, n);
    rows.push_back({std::move(c), std::move(nsq)});
  }
  return OrthonormalBasis(std::move(rows), Scalar(1));
}

/// The degree-n Stieltjes–Wigert orthonormal polynomial with explicit
/// gamma coefficients; the square-root normalization forces the float
/// path (validate by precision doubling as usual).
inline Poly sw_orthonormal(const Scalar& q, std::size_t n,
                           unsigned bits = kDefaultPrecision) {
  OrthonormalBasis b = sw_basis(q, n);
  return b.row_poly(n, bits);
}

/// Closed-form coefficient-ratio law of the Stieltjes–Wigert basis:
/// gamma_{n,k}/gamma_{n,k+1} = -(1 - q^{k+1}) / ((1 - q^{n-k}) q^{2k+1}).
inline Scalar sw_ratio_closed_form(const Scalar& q, std::size_t n, std::size_t k) {
  if (k >= n) throw DomainError("sw ratio needs k < n");
  if (!(q > Scalar(0) && q < Scalar(1)))
    throw ConfigError("Stieltjes–Wigert parameter q must lie in (0,1)");
  Scalar num = Scalar(1) - pow_scalar_ui(q, k + 1);
  Scalar den = (Scalar(1) - pow_scalar_ui(q, n - k)) * pow_scalar_ui(q, 2 * k + 1);
  return -(num / den);
}

/// n -> infinity limit of the ratio law at fixed k: -(1 - q^{k+1})/q^{2k+1}.
inline Scalar sw_ratio_limit(const Scalar& q, std::size_t k) {
  return -((Scalar(1) - pow_scalar_ui(q, k + 1)) / pow_scalar_ui(q, 2 * k + 1));
}

/// Ratio matrix entry (n,k) = gamma_{n,k}/gamma_{n,k+1} for 1 <= n <= rows,
/// 0 <= k <= min(k_max, n-1).  Exact on the exact path.
struct RatioTable {
  std::size_t k_max = 0;
  // entries[n-1][k] holds the (n,k) ratio
  std::vector<std::vector<Scalar>> entries;

  const Scalar& at(std::size_t n, std::size_t k) const {
    if (n == 0 || n > entries.size() || k >= entries[n - 1].size())
      throw InternalError("ratio table index out of range");
    return entries[n - 1][k];
  }
};

inline RatioTable ratio_table(const OrthonormalBasis& basis, std::size_t k_max) {
  if (basis.max_row() < 1)
    throw ConfigError("ratio table needs basis rows up to n >= 1");
  RatioTable t;
  t.k_max = k_max;
  t.entries.resize(basis.max_row());
  for (std::size_t n = 1; n <= basis.max_row(); ++n) {
    std::size_t kk = k_max < n - 1 ? k_max : n - 1;
    t.entries[n - 1].reserve(kk + 1);
    for (std::size_t k = 0; k <= kk; ++k)
      t.entries[n - 1].push_back(basis.ratio(n, k));
  }
  return t;
}

/// K_N(x) = sum_{r=0}^{N} p_r(x)^2, exact at exact x.
inline Scalar kernel_sum(const OrthonormalBasis& basis, const Scalar& x,
                         std::size_t N) {
  if (N > basis.max_row()) throw InsufficientMomentsError("kernel order exceeds basis depth");
  Scalar acc(0);
  for (std::size_t r = 0; r <= N; ++r) {
    Scalar v = poly_eval(basis.row(r).c, x);
    acc += v * v / basis.row(r).norm_sq;
  }
  return acc;
}

/// K_N(z) = sum |p_r(z)|^2 at complex z.
inline Scalar kernel_sum(const OrthonormalBasis& basis, const ComplexScalar& z,
                         std::size_t N) {
  if (N > basis.max_row()) throw InsufficientMomentsError("kernel order exceeds basis depth");
  Scalar acc(0);
  for (std::size_t r = 0; r <= N; ++r) {
    ComplexScalar v = poly_eval(to_complex(basis.row(r).c), z);
    acc += v.norm_sq() / basis.row(r).norm_sq;
  }
  return acc;
}

/// 1/K_N(x): converges (downward) to mu({x}); exact equality for finite
/// discrete measures once the basis is full (N = #atoms - 1).
inline Scalar point_mass_estimate(const OrthonormalBasis& basis, const Scalar& x,
                                  std::size_t N) {
  return Scalar(1) / kernel_sum(basis, x, N);
}

}  // namespace momlab
