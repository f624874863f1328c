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
#include <string>
#include <utility>
#include <vector>

#include "momlab/basis.hpp"
#include "momlab/gram.hpp"
#include "momlab/moments.hpp"
#include "momlab/poly.hpp"
#include "momlab/recurrence.hpp"

namespace momlab {

// ---------------------------------------------------------------------------
// Target functions
// ---------------------------------------------------------------------------

struct PolyTarget {
  Poly f;
};

/// Values on the atoms of a DiscreteAtoms measure, in atom order — the
/// only non-polynomial targets whose inner products are exactly
/// computable, hence the only ones admitted.
struct AtomValuesTarget {
  std::vector<Scalar> values;
};

class TargetFunction {
public:
  using Variant = std::variant<PolyTarget, AtomValuesTarget>;

  TargetFunction(Variant v) : v_(std::move(v)) {}  // NOLINT: implicit by design

  static TargetFunction poly(Poly f) { return TargetFunction(PolyTarget{std::move(f)}); }
  static TargetFunction one() { return poly(Poly::constant(Scalar(1))); }
  static TargetFunction atom_values(std::vector<Scalar> v) {
    return TargetFunction(AtomValuesTarget{std::move(v)});
  }

  const PolyTarget* as_poly() const { return std::get_if<PolyTarget>(&v_); }
  const AtomValuesTarget* as_atoms() const { return std::get_if<AtomValuesTarget>(&v_); }
  std::string name() const { return as_poly() ? "poly" : "atom-values"; }

private:
  Variant v_;
};

// ---------------------------------------------------------------------------
// Inner-product context
// ---------------------------------------------------------------------------

namespace detail {

/// Everything needed to form <f, x^k> and ||f||^2 for one experiment.
struct L2Context {
  const MeasureSpec& measure;
  MomentSequence s;
  const TargetFunction& f;

  L2Context(const MeasureSpec& m, const TargetFunction& fn, std::size_t M,
            unsigned bits)
      : measure(m), s(m.moments(M, bits)), f(fn) {
    if (const auto* av = fn.as_atoms()) {
      const DiscreteAtoms* d = m.as_discrete();
      if (!d)
        throw ConfigError("atom-value targets require a discrete measure");
      if (av->values.size() != d->size())
        throw ConfigError("atom-value target length must match atom count");
    }
  }

  /// <f, x^k>.
  Scalar cross(std::size_t k) const {
    if (const auto* pt = f.as_poly()) {
      Scalar acc(0);
      for (std::size_t m = 0; m < pt->f.c.size(); ++m)
        if (!pt->f.c[m].is_zero()) acc += pt->f.c[m] * s.at(m + k);
      return acc;
    }
    const auto* av = f.as_atoms();
    const DiscreteAtoms* d = measure.as_discrete();
    Scalar acc(0);
    for (std::size_t i = 0; i < d->size(); ++i)
      acc += d->weights[i] * av->values[i] * pow_scalar_ui(d->points[i], k);
    return acc;
  }

  Scalar f_norm_sq() const {
    if (const auto* pt = f.as_poly()) {
      Scalar acc(0);
      for (std::size_t j = 0; j < pt->f.c.size(); ++j)
        for (std::size_t k = 0; k < pt->f.c.size(); ++k)
          if (!pt->f.c[j].is_zero() && !pt->f.c[k].is_zero())
            acc += pt->f.c[j] * pt->f.c[k] * s.at(j + k);
      return acc;
    }
    const auto* av = f.as_atoms();
    const DiscreteAtoms* d = measure.as_discrete();
    Scalar acc(0);
    for (std::size_t i = 0; i < d->size(); ++i)
      acc += d->weights[i] * av->values[i] * av->values[i];
    return acc;
  }

  std::size_t target_degree() const {
    if (const auto* pt = f.as_poly())
      return pt->f.is_zero() ? 0 : static_cast<std::size_t>(pt->f.degree());
    return 0;
  }
};

inline std::size_t max3(std::size_t a, std::size_t b, std::size_t c) {
  std::size_t m = a > b ? a : b;
  return m > c ? m : c;
}

/// Clamp float-path residuals whose tiny negativity is pure rounding;
/// anything more negative is a genuine failure.
inline Scalar checked_residual(Scalar r, const Scalar& f_norm_sq, bool exact,
                               unsigned bits) {
  if (r.sgn() >= 0) return r;
  if (exact) throw InternalError("negative residual on the exact path");
  BigFloat tol = BigFloat::pow2(-static_cast<long>(bits / 2), bits) *
                 (BigFloat::from_long(1, bits) + f_norm_sq.to_approx(bits));
  if (abs(r.to_approx(bits)) > tol)
    throw PrecisionError("residual negative beyond rounding tolerance");
  return Scalar(0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Projections
// ---------------------------------------------------------------------------

/// Best approximant in the ideal, its residual, and solver diagnostics.
struct ProjectionResult {
  CPoly approximant;      // real-coefficient whenever the ideal data is real
  Scalar residual_sq;
  std::size_t gram_order = 0;
  Scalar conditioning;
  bool exact = false;

  /// The approximant as a real polynomial (requires vanishing imaginary parts).
  Poly approximant_real() const {
    Poly p;
    p.c.reserve(approximant.c.size());
    for (const ComplexScalar& v : approximant.c) {
      if (!v.im.is_zero())
        throw InternalError("approximant has nonzero imaginary part");
      p.c.push_back(v.re);
    }
    p.trim();
    return p;
  }
};

/// <f, x^k> for k in [k_lo, k_hi].
inline std::vector<Scalar> cross_moments(const TargetFunction& f,
                                         const MeasureSpec& measure,
                                         std::size_t k_lo, std::size_t k_hi,
                                         unsigned bits = kDefaultPrecision) {
  if (k_hi < k_lo) throw ConfigError("empty cross-moment range");
  std::size_t df = 0;
  if (const auto* pt = f.as_poly())
    df = pt->f.is_zero() ? 0 : static_cast<std::size_t>(pt->f.degree());
  detail::L2Context ctx(measure, f, df + k_hi, bits);
  std::vector<Scalar> out;
  out.reserve(k_hi - k_lo + 1);
  for (std::size_t k = k_lo; k <= k_hi; ++k) out.push_back(ctx.cross(k));
  return out;
}

/// Distance from f to the truncated ideal: least squares over the basis
/// {x^k}_{k=n..N} (monomial ideal) or {R(x) x^j}_{j=0..N-deg R} (root
/// system), solved by pivoted exact/symbolic LDL^T normal equations.
/// residual_sq = ||f||^2 - <solution, cross moments>.
inline ProjectionResult ideal_distance(const TargetFunction& f, const IdealSpec& ideal,
                                       std::size_t N, const MeasureSpec& measure,
                                       unsigned bits = kDefaultPrecision) {
  ProjectionResult out;
  std::size_t df = 0;
  if (const auto* pt = f.as_poly())
    df = pt->f.is_zero() ? 0 : static_cast<std::size_t>(pt->f.degree());
  if (const MonomialIdeal* mono = ideal.as_monomial()) {
    std::size_t n = mono->n;
    if (n > N) throw ConfigError("monomial ideal needs n <= N");
    detail::L2Context ctx(measure, f, detail::max3(2 * N, df + N, 2 * df), bits);
    std::size_t dim = N - n + 1;
    std::vector<std::vector<Scalar>> G(dim, std::vector<Scalar>(dim, Scalar(0)));
    std::vector<Scalar> beta(dim, Scalar(0));
    for (std::size_t j = 0; j < dim; ++j) {
      beta[j] = ctx.cross(n + j);
      for (std::size_t k = 0; k < dim; ++k) G[j][k] = ctx.s.at(2 * n + j + k);
    }
    SpdSolution sol = solve_spd(std::move(G), beta);
    Scalar fit(0);
    for (std::size_t j = 0; j < dim; ++j) fit += sol.x[j] * beta[j];
    Scalar fns = ctx.f_norm_sq();
    out.residual_sq = fns - fit;
    out.gram_order = dim;
    out.conditioning = sol.conditioning();
    Poly approx;
    approx.c.assign(N + 1, Scalar(0));
    for (std::size_t j = 0; j < dim; ++j) approx.c[n + j] = sol.x[j];
    approx.trim();
    out.approximant = to_complex(approx);
    out.exact = fns.is_exact() && out.residual_sq.is_exact();
    out.residual_sq = detail::checked_residual(out.residual_sq, fns, out.exact, bits);
    return out;
  }

  const RootSystem& rs = *ideal.as_root_system();
  std::size_t dR = rs.degree();
  if (dR > N) throw ConfigError("root-system ideal needs deg R <= N");
  detail::L2Context ctx(measure, f, detail::max3(2 * N, df + N, 2 * df), bits);
  MomentSequence smod = modulus_transform(ctx.s, rs);
  CPoly R = rs.generator();
  CPoly Rc = conj(R);
  std::size_t dim = N - dR + 1;

  // cross(k) for k up to (dim-1) + dR = N
  std::vector<Scalar> cr(N + 1, Scalar(0));
  for (std::size_t k = 0; k <= N; ++k) cr[k] = ctx.cross(k);

  std::vector<std::vector<Scalar>> G(dim, std::vector<Scalar>(dim, Scalar(0)));
  std::vector<Scalar> bre(dim, Scalar(0)), bim(dim, Scalar(0));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) G[j][k] = smod.at(j + k);
    ComplexScalar acc;
    for (std::size_t m = 0; m < Rc.c.size(); ++m)
      acc = acc + Rc.c[m] * ComplexScalar(cr[j + m]);
    bre[j] = acc.re;
    bim[j] = acc.im;
  }
  SpdSolution sre = solve_spd(G, bre);
  SpdSolution sim = solve_spd(std::move(G), bim);
  Scalar fit(0);
  for (std::size_t j = 0; j < dim; ++j)
    fit += sre.x[j] * bre[j] + sim.x[j] * bim[j];
  Scalar fns = ctx.f_norm_sq();
  out.residual_sq = fns - fit;
  out.gram_order = dim;
  out.conditioning = sre.conditioning();
  CPoly coeff;
  coeff.c.reserve(dim);
  for (std::size_t j = 0; j < dim; ++j)
    coeff.c.emplace_back(sre.x[j], sim.x[j]);
  coeff.trim();
  out.approximant = R * coeff;
  out.exact = fns.is_exact() && out.residual_sq.is_exact();
  out.residual_sq = detail::checked_residual(out.residual_sq, fns, out.exact, bits);
  return out;
}

/// Largest violation of ideal membership by the approximant: for a
/// monomial ideal, the largest |coefficient| below x^n; for a root
/// system, the largest |remainder coefficient| under division by R.
/// Exactly zero on the exact path.
inline Scalar ideal_membership_defect(const ProjectionResult& res,
                                      const IdealSpec& ideal) {
  Scalar worst(0);
  if (const MonomialIdeal* mono = ideal.as_monomial()) {
    for (std::size_t k = 0; k < mono->n && k < res.approximant.c.size(); ++k) {
      Scalar m = sqrt_scalar(res.approximant.c[k].norm_sq());
      if (m > worst) worst = m;
    }
    return worst;
  }
  CPoly rem = poly_divmod(res.approximant, ideal.as_root_system()->generator()).second;
  for (const ComplexScalar& v : rem.c) {
    Scalar m = sqrt_scalar(v.norm_sq());
    if (m > worst) worst = m;
  }
  return worst;
}

/// Constructive route of the transformed projection: approximate
/// g = f * x^{-n} by degree <= N-n polynomials in L^2(x^{2n} dmu), then
/// multiply back by x^n.  Contract: this equals ideal_distance(f,
/// MonomialIdeal n, N) exactly — both project onto the same subspace and
/// the minimizer is unique.  Solved with the *unpivoted* nested
/// factorization, so agreement with the pivoted solver is a genuine
/// cross-check of two elimination orders.
///
/// The hypothesis mu({0}) = 0 is enforced structurally: the target must
/// be divisible by x^n, or the measure must be discrete without an atom
/// at 0 (so f * x^{-n} is defined mu-almost everywhere).
inline ProjectionResult transformed_projection(const TargetFunction& f,
                                               std::size_t n, std::size_t N,
                                               const MeasureSpec& measure,
                                               unsigned bits = kDefaultPrecision) {
  if (n > N) throw ConfigError("transformed projection needs n <= N");

  // Build the divided target g = f * x^{-n}.
  TargetFunction g = TargetFunction::one();
  if (const auto* pt = f.as_poly()) {
    bool divisible = true;
    for (std::size_t k = 0; k < n && k < pt->f.c.size(); ++k)
      divisible = divisible && pt->f.c[k].is_zero();
    if (!divisible) {
      const DiscreteAtoms* d = measure.as_discrete();
      if (!d || measure.has_atom_at(Scalar(0)))
        throw DomainError("target not divisible by x^n and measure has mass at 0");
      // evaluate f/x^n on the atoms
      std::vector<Scalar> vals;
      vals.reserve(d->size());
      for (std::size_t i = 0; i < d->size(); ++i)
        vals.push_back(poly_eval(pt->f, d->points[i]) /
                       pow_scalar_ui(d->points[i], n));
      g = TargetFunction::atom_values(std::move(vals));
    } else {
      Poly gp;
      if (pt->f.c.size() > n)
        gp.c.assign(pt->f.c.begin() + static_cast<long>(n), pt->f.c.end());
      gp.trim();
      g = TargetFunction::poly(std::move(gp));
    }
  } else {
    const DiscreteAtoms* d = measure.as_discrete();
    if (!d) throw ConfigError("atom-value targets require a discrete measure");
    if (measure.has_atom_at(Scalar(0)))
      throw DomainError("x^{-n} undefined: measure has an atom at 0");
    std::vector<Scalar> vals;
    const auto& av = f.as_atoms()->values;
    if (av.size() != d->size())
      throw ConfigError("atom-value target length must match atom count");
    vals.reserve(d->size());
    for (std::size_t i = 0; i < d->size(); ++i)
      vals.push_back(av[i] / pow_scalar_ui(d->points[i], n));
    g = TargetFunction::atom_values(std::move(vals));
  }

  std::size_t dg = 0;
  if (const auto* gp = g.as_poly())
    dg = gp->f.is_zero() ? 0 : static_cast<std::size_t>(gp->f.degree());
  std::size_t Np = N - n;  // degree bound for p
  detail::L2Context ctx(measure, g, detail::max3(2 * Np, dg + Np, 2 * dg) + 2 * n, bits);
  MomentSequence shifted = power_shift(ctx.s, 2 * n);

  // <g, x^k> and ||g||^2 in L^2(x^{2n} dmu)
  auto shifted_cross = [&](std::size_t k) -> Scalar {
    if (const auto* gp = g.as_poly()) {
      Scalar acc(0);
      for (std::size_t m = 0; m < gp->f.c.size(); ++m)
        if (!gp->f.c[m].is_zero()) acc += gp->f.c[m] * shifted.at(m + k);
      return acc;
    }
    const DiscreteAtoms* d = measure.as_discrete();
    const auto& vals = g.as_atoms()->values;
    Scalar acc(0);
    for (std::size_t i = 0; i < d->size(); ++i)
      acc += d->weights[i] * pow_scalar_ui(d->points[i], 2 * n) * vals[i] *
             pow_scalar_ui(d->points[i], k);
    return acc;
  };
  Scalar gns(0);
  if (const auto* gp = g.as_poly()) {
    for (std::size_t j = 0; j < gp->f.c.size(); ++j)
      for (std::size_t k = 0; k < gp->f.c.size(); ++k)
        if (!gp->f.c[j].is_zero() && !gp->f.c[k].is_zero())
          gns += gp->f.c[j] * gp->f.c[k] * shifted.at(j + k);
  } else {
    const DiscreteAtoms* d = measure.as_discrete();
    const auto& vals = g.as_atoms()->values;
    for (std::size_t i = 0; i < d->size(); ++i)
      gns += d->weights[i] * pow_scalar_ui(d->points[i], 2 * n) * vals[i] * vals[i];
  }

  IncrementalLdlt fac;
  for (std::size_t j = 0; j <= Np; ++j) {
    std::vector<Scalar> col;
    col.reserve(j + 1);
    for (std::size_t i = 0; i <= j; ++i) col.push_back(shifted.at(i + j));
    fac.push(col, shifted_cross(j));
  }

  ProjectionResult out;
  std::vector<Scalar> c = fac.solution();
  Poly approx;
  approx.c.assign(N + 1, Scalar(0));
  for (std::size_t j = 0; j <= Np; ++j) approx.c[n + j] = c[j];
  approx.trim();
  out.approximant = to_complex(approx);
  out.residual_sq = fac.residual_sq(gns);
  out.gram_order = Np + 1;
  out.conditioning = fac.conditioning();
  out.exact = gns.is_exact() && out.residual_sq.is_exact();
  out.residual_sq = detail::checked_residual(out.residual_sq, gns, out.exact, bits);
  return out;
}

/// residual_sq as a function of the truncation order N over [N_lo, N_hi]
/// — one nested factorization for the whole (nonincreasing) curve.
inline std::vector<std::pair<std::size_t, Scalar>> residual_decay_curve(
    const TargetFunction& f, const IdealSpec& ideal, std::size_t N_lo,
    std::size_t N_hi, const MeasureSpec& measure,
    unsigned bits = kDefaultPrecision) {
  if (N_hi < N_lo) throw ConfigError("empty truncation range");
  std::size_t df = 0;
  if (const auto* pt = f.as_poly())
    df = pt->f.is_zero() ? 0 : static_cast<std::size_t>(pt->f.degree());

  std::vector<std::pair<std::size_t, Scalar>> curve;
  if (const MonomialIdeal* mono = ideal.as_monomial()) {
    std::size_t n = mono->n;
    if (n > N_lo) throw ConfigError("monomial ideal needs n <= N_lo");
    detail::L2Context ctx(measure, f,
                          detail::max3(2 * N_hi, df + N_hi, 2 * df), bits);
    Scalar fns = ctx.f_norm_sq();
    bool exact = fns.is_exact() && ctx.s.exact;
    IncrementalLdlt fac;
    for (std::size_t N = n; N <= N_hi; ++N) {
      std::vector<Scalar> col;
      col.reserve(N - n + 1);
      for (std::size_t k = n; k <= N; ++k) col.push_back(ctx.s.at(k + N));
      fac.push(col, ctx.cross(N));
      if (N >= N_lo)
        curve.emplace_back(
            N, detail::checked_residual(fac.residual_sq(fns), fns, exact, bits));
    }
    return curve;
  }

  const RootSystem& rs = *ideal.as_root_system();
  std::size_t dR = rs.degree();
  if (dR > N_lo) throw ConfigError("root-system ideal needs deg R <= N_lo");
  detail::L2Context ctx(measure, f,
                        detail::max3(2 * N_hi, df + N_hi, 2 * df), bits);
  MomentSequence smod = modulus_transform(ctx.s, rs);
  CPoly Rc = conj(rs.generator());
  Scalar fns = ctx.f_norm_sq();
  bool exact = fns.is_exact() && ctx.s.exact;
  std::vector<Scalar> cr(N_hi + 1, Scalar(0));
  for (std::size_t k = 0; k <= N_hi; ++k) cr[k] = ctx.cross(k);

  IncrementalLdlt fre, fim;  // same matrix, real and imaginary right sides
  for (std::size_t j = 0; j + dR <= N_hi; ++j) {
    std::vector<Scalar> col;
    col.reserve(j + 1);
    for (std::size_t i = 0; i <= j; ++i) col.push_back(smod.at(i + j));
    ComplexScalar acc;
    for (std::size_t m = 0; m < Rc.c.size(); ++m)
      acc = acc + Rc.c[m] * ComplexScalar(cr[j + m]);
    fre.push(col, acc.re);
    fim.push(col, acc.im);
    std::size_t N = j + dR;
    if (N >= N_lo) {
      Scalar r = fns - fre.explained() - fim.explained();
      curve.emplace_back(N, detail::checked_residual(r, fns, exact, bits));
    }
  }
  return curve;
}

struct DualityRow {
  std::size_t N = 0;
  Scalar residual_sq;  // Gram-solver route
  Scalar kernel;       // orthonormal-basis route K_N(0)
  Scalar product;      // must be 1
};

/// The executable core identity: residual_sq(f=1, MonomialIdeal 1, N)
/// * K_N(0) = 1 for every N.  Left factor comes from the Hankel normal
/// equations, right factor from the orthonormal recurrence — two
/// independent pipelines; a mismatch is an arithmetic bug and throws.
inline std::vector<DualityRow> christoffel_duality_check(
    const MeasureSpec& measure, std::size_t N_lo, std::size_t N_hi,
    unsigned bits = kDefaultPrecision) {
  if (N_lo < 1 || N_hi < N_lo) throw ConfigError("duality range needs 1 <= N_lo <= N_hi");
  auto curve = residual_decay_curve(TargetFunction::one(), IdealSpec::monomial(1),
                                    N_lo, N_hi, measure, bits);
  MomentSequence s = measure.moments(2 * (N_hi + 1), bits);
  OrthonormalBasis basis =
      orthonormal_basis(chebyshev_recurrence(s, N_hi + 1), N_hi);
  std::vector<DualityRow> rows;
  rows.reserve(curve.size());
  bool exact = basis.is_exact();
  for (const auto& [N, res] : curve) {
    DualityRow row;
    row.N = N;
    row.residual_sq = res;
    row.kernel = kernel_sum(basis, Scalar(0), N);
    row.product = row.residual_sq * row.kernel;
    bool ok;
    if (exact && row.product.is_exact()) {
      ok = row.product == Scalar(1);
    } else {
      BigFloat diff = abs(row.product.to_approx(bits) - BigFloat::from_long(1, bits));
      ok = diff < BigFloat::pow2(-static_cast<long>(bits / 2), bits);
    }
    if (!ok)
      throw InternalError("Christoffel duality violated at N = " + std::to_string(N));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace momlab
