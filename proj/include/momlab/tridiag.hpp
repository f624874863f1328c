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

#include "momlab/recurrence.hpp"
#include "momlab/scalar.hpp"

namespace momlab {

/// Symmetric tridiagonal (Jacobi) matrix: diagonal a_0..a_{n-1},
/// off-diagonal sqrt(b_1)..sqrt(b_{n-1}).  The squares b_k are stored
/// so Sturm counts stay exact on the exact path; explicit off-diagonal
/// entries are materialized on demand.
struct JacobiMatrix {
  std::vector<Scalar> diag;
  std::vector<Scalar> off_sq;  // b_1..b_{n-1}
  bool exact = true;

  std::size_t size() const { return diag.size(); }

  std::vector<Scalar> offdiag(unsigned bits = kDefaultPrecision) const {
    std::vector<Scalar> off;
    off.reserve(off_sq.size());
    for (const Scalar& b : off_sq) off.push_back(sqrt_scalar(b, bits));
    return off;
  }
};

inline JacobiMatrix jacobi_matrix(const RecurrenceCoeffs& rc, std::size_t n) {
  if (n == 0) throw ConfigError("Jacobi matrix needs positive order");
  if (rc.depth() < n)
    throw InsufficientMomentsError("Jacobi order " + std::to_string(n) +
                                   " exceeds recurrence depth " +
                                   std::to_string(rc.depth()));
  JacobiMatrix J;
  J.diag.assign(rc.a.begin(), rc.a.begin() + static_cast<long>(n));
  J.off_sq.assign(rc.b.begin(), rc.b.begin() + static_cast<long>(n) - 1);
  J.exact = true;
  for (const Scalar& v : J.diag) J.exact = J.exact && v.is_exact();
  for (const Scalar& v : J.off_sq) J.exact = J.exact && v.is_exact();
  return J;
}

namespace detail {

/// Sturm count from the leading-principal-minor sequence
///   q_0 = 1, q_1 = t - a_0, q_k = (t - a_{k-1}) q_{k-1} - b_{k-1} q_{k-2}
/// (q_k is the monic characteristic polynomial of the k-th leading block;
/// cf. Wilkinson, The Algebraic Eigenvalue Problem, Sec. 5.39, and
/// Barth–Martin–Wilkinson 1967).  The number of sign agreements between
/// consecutive members equals the number of eigenvalues strictly below t;
/// a vanishing q_k is treated as having the sign opposite to q_{k-1},
/// which keeps the count strict.
struct SturmResult {
  int count_below = 0;
  bool is_eigenvalue = false;  // q_n(t) == 0
};

inline Scalar unit_like(const Scalar&) { return Scalar(1); }
inline BigFloat unit_like(const BigFloat& t) {
  return BigFloat::from_long(1, t.precision());
}

template <typename T, typename Diag, typename OffSq>
SturmResult sturm_count(const Diag& a, const OffSq& b_sq, const T& t) {
  std::size_t n = a.size();
  T q_prev = unit_like(t);
  int sign_prev = 1;
  SturmResult out;
  T q_cur = t - a[0];
  for (std::size_t k = 1;; ++k) {
    int sign_cur;
    if (q_cur.is_zero())
      sign_cur = -sign_prev;  // strict-count convention
    else
      sign_cur = q_cur.sgn();
    if (sign_cur == sign_prev) ++out.count_below;
    if (k == n) {
      out.is_eigenvalue = q_cur.is_zero();
      return out;
    }
    T q_next = (t - a[k]) * q_cur - b_sq[k - 1] * q_prev;
    q_prev = q_cur;
    q_cur = q_next;
    sign_prev = sign_cur;
  }
}

}  // namespace detail

/// Exact count of eigenvalues strictly below t (requires exact matrix data).
inline int eigen_count_below(const JacobiMatrix& J, const Scalar& t,
                             bool* is_eigenvalue = nullptr) {
  auto r = detail::sturm_count<Scalar>(J.diag, J.off_sq, t);
  if (is_eigenvalue) *is_eigenvalue = r.is_eigenvalue;
  return r.count_below;
}

/// Gershgorin enclosure of the spectrum.
inline void gershgorin_bounds(const JacobiMatrix& J, unsigned bits, BigFloat* lo,
                              BigFloat* hi) {
  std::size_t n = J.size();
  std::vector<BigFloat> off;
  off.reserve(n - 1);
  for (const Scalar& b : J.off_sq) off.push_back(sqrt(b.to_approx(bits)));
  bool first = true;
  for (std::size_t k = 0; k < n; ++k) {
    BigFloat r = BigFloat(bits);
    if (k > 0) r += off[k - 1];
    if (k + 1 < n) r += off[k];
    BigFloat a = J.diag[k].to_approx(bits);
    BigFloat l = a - r, h = a + r;
    if (first || l < *lo) *lo = l;
    if (first || h > *hi) *hi = h;
    first = false;
  }
  // widen slightly so the endpoints are strict outer bounds despite rounding
  BigFloat pad = (abs(*lo) + abs(*hi) + BigFloat::from_long(1, bits)) *
                 BigFloat::pow2(-static_cast<long>(bits) + 8, bits);
  *lo -= pad;
  *hi += pad;
}

/// All eigenvalues, ascending, by per-index bisection on the Sturm count.
/// Robust at any precision; each eigenvalue is independent (Barth, Martin
/// & Wilkinson 1967, "Calculation of the eigenvalues of a symmetric
/// tridiagonal matrix by the method of bisection").
inline std::vector<BigFloat> tridiag_eigenvalues(const JacobiMatrix& J,
                                                 unsigned bits = kDefaultPrecision) {
  std::size_t n = J.size();
  unsigned wbits = bits + 32;
  std::vector<BigFloat> a, b_sq;
  a.reserve(n);
  b_sq.reserve(n - 1);
  for (const Scalar& v : J.diag) a.push_back(v.to_approx(wbits));
  for (const Scalar& v : J.off_sq) b_sq.push_back(v.to_approx(wbits));

  BigFloat lo0(wbits), hi0(wbits);
  gershgorin_bounds(J, wbits, &lo0, &hi0);
  BigFloat scale = abs(lo0) > abs(hi0) ? abs(lo0) : abs(hi0);
  if (scale < BigFloat::from_long(1, wbits)) scale = BigFloat::from_long(1, wbits);
  BigFloat tol = scale * BigFloat::pow2(-static_cast<long>(bits) - 4, wbits);

  std::vector<BigFloat> eig;
  eig.reserve(n);
  BigFloat half = BigFloat::from_rational(Rational(1, 2), wbits);
  for (std::size_t j = 0; j < n; ++j) {
    BigFloat lo = lo0, hi = hi0;
    // keep count(lo) <= j < count(hi)
    while (hi - lo > tol) {
      BigFloat mid = (lo + hi) * half;
      if (mid <= lo || mid >= hi) break;  // interval at rounding floor
      int c = detail::sturm_count<BigFloat>(a, b_sq, mid).count_below;
      if (c <= static_cast<int>(j))
        lo = mid;
      else
        hi = mid;
    }
    eig.push_back((lo + hi) * half);
  }
  return eig;
}

}  // namespace momlab
