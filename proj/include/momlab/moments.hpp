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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "momlab/poly.hpp"
#include "momlab/qseries.hpp"
#include "momlab/scalar.hpp"

namespace momlab {

/// Finite prefix s_0..s_M of a positive-definite moment sequence.
struct MomentSequence {
  std::vector<Scalar> s;
  bool exact = true;

  static MomentSequence from(std::vector<Scalar> values) {
    if (values.empty()) throw ConfigError("moment sequence must contain s_0");
    MomentSequence m;
    m.s = std::move(values);
    m.exact = true;
    for (const Scalar& v : m.s) m.exact = m.exact && v.is_exact();
    if (m.s[0].sgn() <= 0) throw PositivityError("s_0 must be positive");
    return m;
  }

  std::size_t max_order() const { return s.size() - 1; }

  const Scalar& at(std::size_t m) const {
    if (m >= s.size())
      throw InsufficientMomentsError("moment s_" + std::to_string(m) +
                                     " beyond available order " +
                                     std::to_string(max_order()));
    return s[m];
  }

  /// Verify that the Hankel matrices H_0..H_n = (s_{j+k}) are positive
  /// definite.  Runs the moment-determinant recurrence: the successive
  /// pivots sigma_{k,k} equal ratios of leading principal minors, so
  /// all-positive pivots certify positive definiteness — exactly on the
  /// exact path.
  void assert_positive_definite(std::size_t n) const {
    if (2 * n > max_order())
      throw InsufficientMomentsError("Hankel order " + std::to_string(n) +
                                     " needs moments through s_" +
                                     std::to_string(2 * n));
    std::size_t len = 2 * n + 1;
    std::vector<Scalar> prev2, prev(s.begin(), s.begin() + len);
    if (prev[0].sgn() <= 0) throw PositivityError("Hankel pivot 0 not positive");
    if (n == 0) return;  // H_0 = (s_0) alone
    Scalar a_prev = prev[1] / prev[0];
    Scalar b_prev(0);
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Scalar> cur(len, Scalar(0));
      for (std::size_t l = k; l + k < len; ++l) {
        cur[l] = prev[l + 1] - a_prev * prev[l];
        if (k >= 2) cur[l] -= b_prev * prev2[l];
      }
      if (cur[k].sgn() <= 0)
        throw PositivityError("Hankel pivot " + std::to_string(k) +
                              " not positive");
      if (k < n) {
        Scalar a_k = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
        b_prev = cur[k] / prev[k - 1];
        a_prev = a_k;
        prev2 = std::move(prev);
        prev = std::move(cur);
      }
    }
  }

  /// Like assert_positive_definite, but accept rank saturation: a measure
  /// with r support points has positive pivots 0..r-1 and a zero pivot at
  /// r, after which the recurrence carries no information.  An exactly
  /// negative pivot still certifies that the data is not a moment
  /// sequence.  On the inexact path a nonpositive pivot merely ends the
  /// certification (roundoff at saturation is indistinguishable from
  /// slight negativity).
  void assert_positive_semidefinite(std::size_t n) const {
    if (2 * n > max_order())
      throw InsufficientMomentsError("Hankel order " + std::to_string(n) +
                                     " needs moments through s_" +
                                     std::to_string(2 * n));
    std::size_t len = 2 * n + 1;
    std::vector<Scalar> prev2, prev(s.begin(), s.begin() + len);
    if (prev[0].sgn() < 0 || (prev[0].is_exact() && prev[0].sgn() == 0))
      throw PositivityError("Hankel pivot 0 negative");
    if (n == 0 || prev[0].sgn() <= 0) return;  // H_0 alone, or float mass certification exhausted
    Scalar a_prev = prev[1] / prev[0];
    Scalar b_prev(0);
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Scalar> cur(len, Scalar(0));
      for (std::size_t l = k; l + k < len; ++l) {
        cur[l] = prev[l + 1] - a_prev * prev[l];
        if (k >= 2) cur[l] -= b_prev * prev2[l];
      }
      if (cur[k].sgn() <= 0) {
        if (cur[k].is_exact() && cur[k].sgn() < 0)
          throw PositivityError("Hankel pivot " + std::to_string(k) +
                                " negative");
        return;  // rank saturated (or float certification exhausted)
      }
      if (k < n) {
        Scalar a_k = cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
        b_prev = cur[k] / prev[k - 1];
        a_prev = a_k;
        prev2 = std::move(prev);
        prev = std::move(cur);
      }
    }
  }
};

/// Moments of x^k dmu: s'_m = s_{m+k}.  Positivity of the shifted
/// sequence requires supp(mu) within [0, inf) — caller-asserted.
inline MomentSequence power_shift(const MomentSequence& s, std::size_t k) {
  if (k > s.max_order())
    throw InsufficientMomentsError("power_shift by " + std::to_string(k) +
                                   " exceeds max order " +
                                   std::to_string(s.max_order()));
  MomentSequence out;
  out.s.assign(s.s.begin() + static_cast<long>(k), s.s.end());
  out.exact = s.exact;
  if (out.s[0].sgn() <= 0)
    throw PositivityError("shifted sequence has nonpositive s_0");
  return out;
}

// ---------------------------------------------------------------------------
// Measure specifications
// ---------------------------------------------------------------------------

struct DiscreteAtoms {
  std::vector<Scalar> points;
  std::vector<Scalar> weights;

  DiscreteAtoms(std::vector<Scalar> p, std::vector<Scalar> w)
      : points(std::move(p)), weights(std::move(w)) {
    if (points.empty() || points.size() != weights.size())
      throw ConfigError("discrete measure needs matching nonempty point/weight lists");
    for (const Scalar& wt : weights)
      if (wt.sgn() <= 0) throw ConfigError("atom weights must be positive");
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i] == points[j])
          throw ConfigError("atom points must be pairwise distinct");
  }

  std::size_t size() const { return points.size(); }
};

struct Laguerre {};   // weight e^{-x} on [0, inf); s_n = n!

struct Lognormal {    // the indeterminate lognormal family, s_n = q^{-n(n+1)/2}
  Scalar q;
  explicit Lognormal(Scalar q_) : q(std::move(q_)) {
    if (!(q > Scalar(0) && q < Scalar(1)))
      throw ConfigError("lognormal parameter q must lie strictly inside (0,1)");
  }
};

struct UniformUnit {};  // Lebesgue measure on [0,1]; s_n = 1/(n+1)

struct RawMoments {
  MomentSequence seq;
};

class MeasureSpec {
public:
  using Variant = std::variant<DiscreteAtoms, Laguerre, Lognormal, UniformUnit, RawMoments>;

  MeasureSpec(Variant v) : v_(std::move(v)) {}  // NOLINT: implicit by design

  static MeasureSpec laguerre() { return MeasureSpec(Laguerre{}); }
  static MeasureSpec uniform_unit() { return MeasureSpec(UniformUnit{}); }
  static MeasureSpec lognormal(Scalar q) { return MeasureSpec(Lognormal{std::move(q)}); }
  static MeasureSpec discrete(std::vector<Scalar> pts, std::vector<Scalar> wts) {
    return MeasureSpec(DiscreteAtoms(std::move(pts), std::move(wts)));
  }
  static MeasureSpec raw(MomentSequence seq) {
    std::size_t n = seq.max_order() / 2;
    seq.assert_positive_definite(n);  // reject nonpositive-definite data
    return MeasureSpec(RawMoments{std::move(seq)});
  }
  /// For sequences whose positive definiteness is already guaranteed
  /// (e.g. transforms of a checked parent); skips the quadratic-cost check.
  static MeasureSpec raw_unchecked(MomentSequence seq) {
    return MeasureSpec(RawMoments{std::move(seq)});
  }

  const Variant& variant() const { return v_; }
  const DiscreteAtoms* as_discrete() const { return std::get_if<DiscreteAtoms>(&v_); }
  const Lognormal* as_lognormal() const { return std::get_if<Lognormal>(&v_); }

  std::string name() const {
    if (std::holds_alternative<DiscreteAtoms>(v_)) return "discrete";
    if (std::holds_alternative<Laguerre>(v_)) return "laguerre";
    if (std::holds_alternative<Lognormal>(v_)) return "lognormal";
    if (std::holds_alternative<UniformUnit>(v_)) return "uniform-unit";
    return "raw-moments";
  }

  bool is_exact() const {
    if (const auto* d = std::get_if<DiscreteAtoms>(&v_)) {
      for (const Scalar& p : d->points)
        if (!p.is_exact()) return false;
      for (const Scalar& w : d->weights)
        if (!w.is_exact()) return false;
      return true;
    }
    if (const auto* ln = std::get_if<Lognormal>(&v_)) return ln->q.is_exact();
    if (const auto* r = std::get_if<RawMoments>(&v_)) return r->seq.exact;
    return true;
  }

  /// Number of support points when finite (discrete measures only).
  std::optional<std::size_t> support_size() const {
    if (const auto* d = std::get_if<DiscreteAtoms>(&v_)) return d->size();
    return std::nullopt;
  }

  bool support_nonneg() const {
    if (const auto* d = std::get_if<DiscreteAtoms>(&v_)) {
      for (const Scalar& p : d->points)
        if (p.sgn() < 0) return false;
    }
    return true;  // Laguerre, Lognormal, UniformUnit, and raw data by contract
  }

  /// s_0..s_M.  Exact for every built-in family with exact parameters:
  /// discrete measures by direct power sums, Laguerre by s_n = n!
  /// (integration by parts), UniformUnit by s_n = 1/(n+1), and the
  /// lognormal family by s_n = q^{-n(n+1)/2} — the substitution x = e^u
  /// turns int x^n w(x) dx into a Gaussian integral whose value, after
  /// the s_0 = 1 normalization, collapses to that closed form.
  MomentSequence moments(std::size_t M, unsigned bits = kDefaultPrecision) const {
    std::vector<Scalar> s;
    s.reserve(M + 1);
    if (const auto* d = std::get_if<DiscreteAtoms>(&v_)) {
      std::vector<Scalar> pw = d->weights;  // running w_i * x_i^m
      for (std::size_t m = 0; m <= M; ++m) {
        Scalar sum(0);
        for (std::size_t i = 0; i < d->size(); ++i) {
          sum += pw[i];
          pw[i] *= d->points[i];
        }
        s.push_back(sum);
      }
    } else if (std::holds_alternative<Laguerre>(v_)) {
      Rational f = 1;
      for (std::size_t m = 0; m <= M; ++m) {
        if (m > 0) f *= static_cast<unsigned long>(m);
        s.push_back(Scalar(f));
      }
    } else if (const auto* ln = std::get_if<Lognormal>(&v_)) {
      if (ln->q.is_exact()) {
        const Rational& q = ln->q.as_rational();
        for (std::size_t m = 0; m <= M; ++m)
          s.push_back(Scalar(pow_rational(q, -static_cast<long>(m * (m + 1) / 2))));
      } else {
        BigFloat invq = BigFloat::from_long(1, bits) / ln->q.to_approx(bits);
        for (std::size_t m = 0; m <= M; ++m)
          s.push_back(Scalar(pow_ui(invq, m * (m + 1) / 2)));
      }
    } else if (std::holds_alternative<UniformUnit>(v_)) {
      for (std::size_t m = 0; m <= M; ++m)
        s.push_back(Scalar(Rational(1, static_cast<unsigned long>(m + 1))));
    } else {
      const auto& seq = std::get<RawMoments>(v_).seq;
      if (M > seq.max_order())
        throw InsufficientMomentsError("raw moment data ends at order " +
                                       std::to_string(seq.max_order()));
      s.assign(seq.s.begin(), seq.s.begin() + static_cast<long>(M) + 1);
    }
    return MomentSequence::from(std::move(s));
  }

  /// mu({x0}): the matching atom weight for discrete measures, zero for
  /// the absolutely continuous families.  Raw moment data does not
  /// determine point masses, so that variant is rejected.
  Scalar atom_mass(const Scalar& x0) const {
    if (const auto* d = std::get_if<DiscreteAtoms>(&v_)) {
      for (std::size_t i = 0; i < d->size(); ++i)
        if (d->points[i] == x0) return d->weights[i];
      return Scalar(0);
    }
    if (std::holds_alternative<RawMoments>(v_))
      throw DomainError("atom_mass is not determined by finitely many moments");
    return Scalar(0);
  }

  bool has_atom_at(const Scalar& x0) const {
    const auto* d = std::get_if<DiscreteAtoms>(&v_);
    if (!d) return false;
    for (const Scalar& p : d->points)
      if (p == x0) return true;
    return false;
  }

private:
  Variant v_;
};

// ---------------------------------------------------------------------------
// Ideal specifications
// ---------------------------------------------------------------------------

struct MonomialIdeal {
  unsigned n = 0;  // span of x^n, x^{n+1}, ...
};

struct RootSystem {
  std::vector<std::pair<ComplexScalar, unsigned>> roots;  // (z_j, k_j)

  explicit RootSystem(std::vector<std::pair<ComplexScalar, unsigned>> r)
      : roots(std::move(r)) {
    if (roots.empty()) throw ConfigError("root system needs at least one root");
    for (std::size_t i = 0; i < roots.size(); ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if (roots[i].first == roots[j].first)
          throw ConfigError("root system points must be distinct");
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [z, k] : roots) d += k + 1;
    return d;
  }

  /// The generator R(x) = prod (x - z_j)^{k_j + 1}.
  CPoly generator() const {
    CPoly R = root_poly(roots);
    if (R.degree() != static_cast<long>(degree()))
      throw InternalError("root-system degree mismatch");
    return R;
  }
};

class IdealSpec {
public:
  using Variant = std::variant<MonomialIdeal, RootSystem>;

  IdealSpec(Variant v) : v_(std::move(v)) {}  // NOLINT: implicit by design

  static IdealSpec monomial(unsigned n) { return IdealSpec(MonomialIdeal{n}); }
  static IdealSpec root_system(std::vector<std::pair<ComplexScalar, unsigned>> r) {
    return IdealSpec(RootSystem(std::move(r)));
  }

  const MonomialIdeal* as_monomial() const { return std::get_if<MonomialIdeal>(&v_); }
  const RootSystem* as_root_system() const { return std::get_if<RootSystem>(&v_); }

  std::string name() const {
    return as_monomial() ? "monomial" : "root-system";
  }

private:
  Variant v_;
};

/// Moments of |R(x)|^2 dmu from the moments of dmu:
/// s'_m = sum_j q_j s_{m+j} where Q = |R|^2 has real coefficients q_j.
inline MomentSequence modulus_transform(const MomentSequence& s,
                                        const RootSystem& ideal) {
  Poly Q = modulus_square(ideal.generator());
  std::size_t dQ = static_cast<std::size_t>(Q.degree());
  if (dQ > s.max_order())
    throw InsufficientMomentsError("modulus transform needs moments through s_" +
                                   std::to_string(dQ));
  std::size_t Mp = s.max_order() - dQ;
  std::vector<Scalar> sp;
  sp.reserve(Mp + 1);
  for (std::size_t m = 0; m <= Mp; ++m) {
    Scalar v(0);
    for (std::size_t j = 0; j <= dQ; ++j) v += Q.coeff(j) * s.at(m + j);
    sp.push_back(v);
  }
  MomentSequence out = MomentSequence::from(std::move(sp));
  // |R|^2 dmu may have finite support even when mu does not (mass outside
  // the zero set of R can be a single atom), so only semidefiniteness is
  // guaranteed; strict failures still surface.
  out.assert_positive_semidefinite(Mp / 2);
  return out;
}

}  // namespace momlab
