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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momlab/basis.hpp"
#include "momlab/density.hpp"

namespace momlab {

/// Determinacy cannot be decided from finitely many moments; these probes
/// only gather evidence, and every classification they emit is labeled
/// heuristic and reported next to the raw curve.
struct ProbeCurve {
  std::vector<Scalar> partial_sums;  // K_0(z) .. K_Nmax(z)
  std::vector<Scalar> increments;    // |p_N(z)|^2, N = 1..Nmax
  bool bounded_looking = false;
  std::string classification;        // "bounded-looking" / "diverging-looking"
  std::string label = "heuristic";
  std::string rule;                  // human-readable decision rule
};

/// Partial sums K_N(z) at non-real z.  Bounded K(z) is evidence of
/// indeterminacy; divergence is evidence of determinacy.  Decision rule
/// (config-overridable): bounded-looking iff every increment in the last
/// quartile of the curve is below threshold * (current partial sum), with
/// threshold defaulting to 2^(-P/4).
inline ProbeCurve determinacy_probe(const OrthonormalBasis& basis,
                                    const ComplexScalar& z, std::size_t N_max,
                                    unsigned bits = kDefaultPrecision,
                                    std::optional<Scalar> threshold = std::nullopt) {
  if (z.im.is_zero()) throw DomainError("determinacy probe needs Im(z) != 0");
  if (N_max > basis.max_row())
    throw InsufficientMomentsError("probe depth exceeds basis depth");
  // default rule threshold 2^(-P/4), kept exact so exact curves stay exact
  Scalar thr = threshold
                   ? *threshold
                   : Scalar(pow_rational(Rational(1, 2), static_cast<long>(bits / 4)));

  ProbeCurve out;
  out.partial_sums.reserve(N_max + 1);
  out.increments.reserve(N_max);
  Scalar acc(0);
  for (std::size_t r = 0; r <= N_max; ++r) {
    ComplexScalar v = poly_eval(to_complex(basis.row(r).c), z);
    Scalar inc = v.norm_sq() / basis.row(r).norm_sq;
    acc += inc;
    out.partial_sums.push_back(acc);
    if (r >= 1) out.increments.push_back(inc);
  }

  bool bounded = N_max >= 1;
  std::size_t q_start = N_max - N_max / 4;  // last quartile of N = 1..N_max
  if (q_start < 1) q_start = 1;
  for (std::size_t N = q_start; N <= N_max && bounded; ++N) {
    const Scalar& inc = out.increments[N - 1];
    if (!(inc < thr * out.partial_sums[N])) bounded = false;
  }
  out.bounded_looking = bounded;
  out.classification = bounded ? "bounded-looking" : "diverging-looking";
  out.rule = "bounded-looking iff increments for N in [" + std::to_string(q_start) +
             "," + std::to_string(N_max) + "] stay below " + thr.to_string(8) +
             " * K_N(z)";
  return out;
}

struct DensityIndexRow {
  std::size_t k = 0;
  ProbeCurve kernel_probe;  // at z = i, for the measure x^k dmu
  std::vector<std::pair<std::size_t, Scalar>> residual_curve;  // f=1 vs x*C[x]
  std::string evidence;     // heuristic summary for this k
};

struct DensityIndexReport {
  std::vector<DensityIndexRow> rows;
  std::string label = "heuristic";
  std::string summary;  // evidence about delta(mu) = sup { k : dense }
};

/// Evidence table for the density index delta(mu): for each k <= k_max,
/// probe the shifted measure x^k dmu with both the kernel-boundedness
/// diagnostic and the residual decay of f = 1 into the ideal x*C[x].
inline DensityIndexReport density_index_probe(const MeasureSpec& measure,
                                              std::size_t k_max, std::size_t N_max,
                                              unsigned bits = kDefaultPrecision,
                                              std::optional<Scalar> threshold = std::nullopt) {
  if (!measure.support_nonneg())
    throw DomainError("density-index probe needs supp(mu) within [0,inf)");
  MomentSequence s = measure.moments(2 * (N_max + 1) + k_max, bits);
  ComplexScalar z_i(Scalar(0), Scalar(1));

  DensityIndexReport rep;
  bool all_diverging = true;
  for (std::size_t k = 0; k <= k_max; ++k) {
    DensityIndexRow row;
    row.k = k;
    MomentSequence sk = power_shift(s, k);
    std::size_t depth = N_max + 1;
    // shifted prefix may be short for raw-moment data; recurrence ctor checks
    OrthonormalBasis basis = orthonormal_basis(chebyshev_recurrence(sk, depth), N_max);
    row.kernel_probe = determinacy_probe(basis, z_i, N_max, bits, threshold);

    // positivity of the shift is inherited from the parent measure on
    // [0, inf); the nested factorization below re-verifies every pivot
    MeasureSpec shifted_measure = MeasureSpec::raw_unchecked(sk);
    row.residual_curve = residual_decay_curve(TargetFunction::one(),
                                              IdealSpec::monomial(1), 1,
                                              N_max, shifted_measure, bits);
    const Scalar& last = row.residual_curve.back().second;
    row.evidence = row.kernel_probe.classification + " kernel, final residual " +
                   last.to_string(8);
    all_diverging = all_diverging && !row.kernel_probe.bounded_looking;
    rep.rows.push_back(std::move(row));
  }
  rep.summary = all_diverging
                    ? "kernel diverging-looking for every k <= " + std::to_string(k_max) +
                          ": consistent with delta(mu) = infinity"
                    : "bounded-looking kernel encountered: consistent with an "
                      "indeterminate shifted measure (delta undefined or finite)";
  return rep;
}

struct RieszReport {
  std::vector<std::pair<std::size_t, Scalar>> curve;  // residuals of f=1 vs (x-z)C[x]
  bool monotone_nonincreasing = true;
  Scalar final_residual;
};

/// Residual decay of f = 1 into the ideal (x - z)C[x], Im(z) != 0, via the
/// |x - z|^2 modulus transform.  For determinate families the residuals
/// must sink toward zero (the classical density statement for non-real
/// translates); for an m-atom discrete measure they hit exactly zero once
/// the cofactor space covers all atoms (cofactor degree m - 1, i.e. total
/// degree N = m).
inline RieszReport riesz_ideal_check(const MeasureSpec& measure,
                                     const ComplexScalar& z, std::size_t N_lo,
                                     std::size_t N_hi,
                                     unsigned bits = kDefaultPrecision) {
  if (z.im.is_zero()) throw DomainError("Riesz check needs Im(z) != 0");
  IdealSpec ideal = IdealSpec::root_system({{z, 0}});
  RieszReport rep;
  rep.curve = residual_decay_curve(TargetFunction::one(), ideal, N_lo, N_hi,
                                   measure, bits);
  for (std::size_t i = 1; i < rep.curve.size(); ++i)
    if (rep.curve[i].second > rep.curve[i - 1].second)
      rep.monotone_nonincreasing = false;
  rep.final_residual = rep.curve.back().second;
  return rep;
}

}  // namespace momlab
