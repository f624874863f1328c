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

#include <utility>
#include <vector>

#include "momlab/scalar.hpp"

namespace momlab {

/// Dense polynomial, coefficients in ascending power order.  An empty
/// coefficient vector is the zero polynomial; a normalized nonzero
/// polynomial has nonzero trailing coefficient.
template <typename S>
struct BasicPoly {
  std::vector<S> c;

  BasicPoly() = default;
  explicit BasicPoly(std::vector<S> coeffs) : c(std::move(coeffs)) { trim(); }

  static BasicPoly constant(S v) {
    BasicPoly p;
    p.c.push_back(std::move(v));
    p.trim();
    return p;
  }
  /// The monomial x^k.
  static BasicPoly monomial(std::size_t k, S lead = S(1)) {
    BasicPoly p;
    p.c.assign(k + 1, S(0));
    p.c[k] = std::move(lead);
    p.trim();
    return p;
  }

  bool is_zero() const { return c.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c.size()) - 1; }

  S coeff(std::size_t k) const { return k < c.size() ? c[k] : S(0); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
    BasicPoly r;
    r.c.resize(a.c.size() > b.c.size() ? a.c.size() : b.c.size(), S(0));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(k) + b.coeff(k);
    r.trim();
    return r;
  }
  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
    BasicPoly r;
    r.c.resize(a.c.size() > b.c.size() ? a.c.size() : b.c.size(), S(0));
    for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(k) - b.coeff(k);
    r.trim();
    return r;
  }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return BasicPoly();
    BasicPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, S(0));
    for (std::size_t j = 0; j < a.c.size(); ++j)
      for (std::size_t k = 0; k < b.c.size(); ++k)
        r.c[j + k] += a.c[j] * b.c[k];
    r.trim();
    return r;
  }
  friend BasicPoly operator*(const S& s, const BasicPoly& p) {
    BasicPoly r;
    r.c.reserve(p.c.size());
    for (const S& v : p.c) r.c.push_back(s * v);
    r.trim();
    return r;
  }
  friend BasicPoly operator-(const BasicPoly& p) { return S(-1) * p; }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t k = 0; k < a.c.size(); ++k)
      if (!(a.c[k] == b.c[k])) return false;
    return true;
  }
};

using Poly = BasicPoly<Scalar>;
using CPoly = BasicPoly<ComplexScalar>;

/// Horner evaluation; the point type X must embed the coefficient type S.
template <typename S, typename X>
X poly_eval(const BasicPoly<S>& p, const X& x) {
  X acc{};
  for (std::size_t k = p.c.size(); k-- > 0;) acc = acc * x + X(p.c[k]);
  return acc;
}

/// Exact formal derivative of the given order.
template <typename S>
BasicPoly<S> poly_derivative(const BasicPoly<S>& p, unsigned order = 1) {
  BasicPoly<S> r = p;
  for (unsigned t = 0; t < order; ++t) {
    if (r.c.size() <= 1) return BasicPoly<S>();
    std::vector<S> d(r.c.size() - 1, S(0));
    for (std::size_t k = 1; k < r.c.size(); ++k)
      d[k - 1] = S(static_cast<long>(k)) * r.c[k];
    r.c = std::move(d);
  }
  r.trim();
  return r;
}

/// (p(0), p'(0), ..., p^{(n)}(0)); component j equals j! * coeff_j.
template <typename S>
std::vector<S> jet_at_zero(const BasicPoly<S>& p, unsigned n) {
  std::vector<S> jet(n + 1, S(0));
  Rational fact = 1;
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) fact *= j;
    if (j < p.c.size()) jet[j] = S(Scalar(fact)) * p.c[j];
  }
  return jet;
}

/// Euclidean division a = q*b + r with deg r < deg b.  Field coefficients.
template <typename S>
std::pair<BasicPoly<S>, BasicPoly<S>> poly_divmod(const BasicPoly<S>& a,
                                                  const BasicPoly<S>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  BasicPoly<S> q, r = a;
  long db = b.degree();
  if (r.degree() >= db) q.c.assign(r.degree() - db + 1, S(0));
  while (!r.is_zero() && r.degree() >= db) {
    long shift = r.degree() - db;
    S factor = r.c.back() / b.c.back();
    q.c[shift] = factor;
    for (long k = 0; k <= db; ++k)
      r.c[shift + k] -= factor * b.c[k];
    r.trim();
  }
  q.trim();
  return {q, r};
}

inline CPoly to_complex(const Poly& p) {
  CPoly r;
  r.c.reserve(p.c.size());
  for (const Scalar& v : p.c) r.c.emplace_back(v);
  return r;
}

inline CPoly conj(const CPoly& p) {
  CPoly r;
  r.c.reserve(p.c.size());
  for (const ComplexScalar& v : p.c) r.c.push_back(v.conj());
  return r;
}

/// R(x) = prod_j (x - z_j)^{k_j + 1} for root/multiplicity pairs.
inline CPoly root_poly(const std::vector<std::pair<ComplexScalar, unsigned>>& roots) {
  if (roots.empty()) throw ConfigError("root system needs at least one root");
  CPoly r = CPoly::constant(ComplexScalar(Scalar(1)));
  for (const auto& [z, k] : roots) {
    CPoly lin;
    lin.c = {-z, ComplexScalar(Scalar(1))};
    for (unsigned t = 0; t <= k; ++t) r = r * lin;
  }
  return r;
}

/// |R(x)|^2 = R(x) * conj(R)(x) as a polynomial in the real variable x.
/// Imaginary residue must vanish (exactly on the exact path); anything
/// above the float-path tolerance is an arithmetic bug, not a data error.
inline Poly modulus_square(const CPoly& R) {
  CPoly prod = R * conj(R);
  Poly out;
  out.c.reserve(prod.c.size());
  for (const ComplexScalar& v : prod.c) {
    if (v.im.is_exact()) {
      if (!v.im.is_zero())
        throw InternalError("modulus_square: nonzero exact imaginary residue");
    } else {
      unsigned bits = v.im.precision_or(kDefaultPrecision);
      BigFloat tol = BigFloat::pow2(-static_cast<long>(bits / 2), bits) *
                     (BigFloat::from_long(1, bits) + abs(v.re.to_approx(bits)));
      if (abs(v.im.to_approx()) > tol)
        throw InternalError("modulus_square: imaginary residue above tolerance");
    }
    out.c.push_back(v.re);
  }
  out.trim();
  return out;
}

inline std::string poly_to_string(const Poly& p, int digits = 0) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < p.c.size(); ++k) {
    if (p.c[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += p.c[k].to_string(digits);
    if (k >= 1) s += "*x";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

}  // namespace momlab
