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

#include "momlab/basis.hpp"
#include "momlab/tridiag.hpp"

namespace momlab {

/// Gauss rule: nodes at the zeros x_{n,j} of p_n, Christoffel masses
/// H_{n,j} > 0, matching moments through order 2n-1.
struct QuadratureRule {
  std::vector<Scalar> nodes;   // strictly increasing
  std::vector<Scalar> masses;  // positive, summing to s_0

  std::size_t size() const { return nodes.size(); }

  Scalar mass_sum() const {
    Scalar acc(0);
    for (const Scalar& h : masses) acc += h;
    return acc;
  }

  /// sum_j H_j x_j^m.
  Scalar apply_power(std::size_t m) const {
    Scalar acc(0);
    for (std::size_t j = 0; j < nodes.size(); ++j)
      acc += masses[j] * pow_scalar_ui(nodes[j], m);
    return acc;
  }

  /// sum_j H_j f(x_j) for a polynomial integrand.
  Scalar apply(const Poly& f) const {
    Scalar acc(0);
    for (std::size_t j = 0; j < nodes.size(); ++j)
      acc += masses[j] * poly_eval(f, nodes[j]);
    return acc;
  }
};

/// Zeros of p_n = eigenvalues of the order-n Jacobi matrix, ascending.
inline std::vector<Scalar> zeros(const RecurrenceCoeffs& rc, std::size_t n,
                                 unsigned bits = kDefaultPrecision) {
  JacobiMatrix J = jacobi_matrix(rc, n);
  std::vector<BigFloat> eig = tridiag_eigenvalues(J, bits);
  std::vector<Scalar> out;
  out.reserve(eig.size());
  for (BigFloat& e : eig) out.emplace_back(std::move(e));
  return out;
}

/// Exact certificate that all zeros of p_n are strictly positive
/// (supp within [0, inf) families).  Exact data only: the Sturm count at
/// t = 0 is an integer computed in rational arithmetic, so the answer is
/// a proof, not an observation.
inline bool zeros_strictly_positive(const RecurrenceCoeffs& rc, std::size_t n) {
  JacobiMatrix J = jacobi_matrix(rc, n);
  if (!J.exact) throw PrecisionError("positivity certificate needs exact data");
  bool is_eig = false;
  int below = eigen_count_below(J, Scalar(0), &is_eig);
  return below == 0 && !is_eig;
}

/// Gauss rule of order n: nodes from the Jacobi matrix, masses by the
/// inverse-kernel (Christoffel) formula H_{n,j} = 1/K_{n-1}(x_{n,j}).
/// No eigenvectors needed (contrast Golub & Welsch 1969, which reads
/// masses off the first eigenvector components).
inline QuadratureRule gauss_rule(const RecurrenceCoeffs& rc, std::size_t n,
                                 unsigned bits = kDefaultPrecision) {
  QuadratureRule rule;
  rule.nodes = zeros(rc, n, bits);
  OrthonormalBasis basis = orthonormal_basis(rc, n - 1);
  rule.masses.reserve(n);
  for (const Scalar& x : rule.nodes) {
    Scalar k = kernel_sum(basis, x, n - 1);
    if (k.sgn() <= 0) throw InternalError("nonpositive Christoffel kernel");
    rule.masses.push_back(Scalar(1) / k);
  }
  return rule;
}

/// Largest relative moment defect max_m |sum_j H_j x_j^m - s_m| / |s_m|
/// over 0 <= m <= m_max (absolute defect where s_m = 0).
inline BigFloat quadrature_moment_defect(const QuadratureRule& rule,
                                         const MomentSequence& s, std::size_t m_max,
                                         unsigned bits = kDefaultPrecision) {
  BigFloat worst(bits);
  for (std::size_t m = 0; m <= m_max; ++m) {
    BigFloat got = rule.apply_power(m).to_approx(bits);
    BigFloat want = s.at(m).to_approx(bits);
    BigFloat d = abs(got - want);
    if (!want.is_zero()) d = d / abs(want);
    if (d > worst) worst = d;
  }
  return worst;
}

struct InterlacingReport {
  bool ok = false;
  Scalar min_gap;           // smallest gap encountered (signed; <= 0 on failure)
  std::string note;
};

/// Strict interlacing z_{n+1,j} < z_{n,j} < z_{n+1,j+1}.  On the float
/// path each gap must clear the margin 2^(-P/2) * (1 + |node|), which
/// separates true violations from rounding fuzz.
inline InterlacingReport interlacing_check(const std::vector<Scalar>& zn,
                                           const std::vector<Scalar>& znp1,
                                           unsigned bits = kDefaultPrecision) {
  InterlacingReport rep;
  if (znp1.size() != zn.size() + 1) {
    rep.note = "length mismatch";
    rep.min_gap = Scalar(0);
    return rep;
  }
  bool exact = true;
  for (const Scalar& v : zn) exact = exact && v.is_exact();
  for (const Scalar& v : znp1) exact = exact && v.is_exact();

  bool first = true;
  bool ok = true;
  for (std::size_t j = 0; j < zn.size(); ++j) {
    for (int side = 0; side < 2; ++side) {
      Scalar gap = side == 0 ? zn[j] - znp1[j] : znp1[j + 1] - zn[j];
      Scalar margin(0);
      if (!exact) {
        BigFloat node = abs(zn[j].to_approx(bits));
        margin = Scalar(BigFloat::pow2(-static_cast<long>(bits / 2), bits) *
                        (BigFloat::from_long(1, bits) + node));
      }
      if (!(gap > margin)) ok = false;
      if (first || gap < rep.min_gap) rep.min_gap = gap;
      first = false;
    }
  }
  rep.ok = ok;
  rep.note = exact ? "exact strict comparison" : "float path with margin 2^(-P/2)(1+|node|)";
  return rep;
}

}  // namespace momlab
