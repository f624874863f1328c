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

#include <string>
#include <variant>

#include "momlab/bigfloat.hpp"
#include "momlab/rational.hpp"

namespace momlab {

/// Number that is either an exact rational or a floating value of known
/// precision.  Arithmetic keeps results exact whenever both operands are
/// exact; as soon as one operand is approximate the result is approximate
/// at the larger operand precision.
class Scalar {
public:
  Scalar() : v_(Rational(0)) {}
  Scalar(const Rational& q) : v_(q) {}          // NOLINT: implicit by design
  Scalar(const BigFloat& f) : v_(f) {}          // NOLINT: implicit by design
  Scalar(long n) : v_(Rational(n)) {}           // NOLINT: implicit by design
  Scalar(int n) : v_(Rational(n)) {}            // NOLINT: implicit by design

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }

  const Rational& as_rational() const {
    if (!is_exact()) throw InternalError("as_rational on approximate scalar");
    return std::get<Rational>(v_);
  }

  /// Floating image at the requested precision (exact values are rounded,
  /// approximate values are returned as stored).
  BigFloat to_approx(unsigned bits = kDefaultPrecision) const {
    if (is_exact()) return BigFloat::from_rational(std::get<Rational>(v_), bits);
    return std::get<BigFloat>(v_);
  }

  unsigned precision_or(unsigned fallback) const {
    return is_exact() ? fallback : std::get<BigFloat>(v_).precision();
  }

  int sgn() const {
    return is_exact() ? ::sgn(std::get<Rational>(v_)) : std::get<BigFloat>(v_).sgn();
  }
  bool is_zero() const { return sgn() == 0; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
      return Scalar(Rational(a.as_rational() + b.as_rational()));
    return Scalar(a.lift(b) + b.lift(a));
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
      return Scalar(Rational(a.as_rational() - b.as_rational()));
    return Scalar(a.lift(b) - b.lift(a));
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
      return Scalar(Rational(a.as_rational() * b.as_rational()));
    return Scalar(a.lift(b) * b.lift(a));
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw DomainError("scalar division by zero");
    if (a.is_exact() && b.is_exact())
      return Scalar(Rational(a.as_rational() / b.as_rational()));
    return Scalar(a.lift(b) / b.lift(a));
  }
  friend Scalar operator-(const Scalar& a) {
    if (a.is_exact()) return Scalar(Rational(-a.as_rational()));
    return Scalar(-a.to_approx());
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  /// Three-way comparison; mixed exact/approx compares in the float image.
  friend int cmp(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact())
      return ::cmp(a.as_rational(), b.as_rational());
    Scalar d = a - b;
    return d.sgn();
  }
  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a, b) >= 0; }

  friend Scalar abs(const Scalar& a) { return a.sgn() < 0 ? -a : a; }

  /// Square root.  Perfect squares of exact values stay exact; everything
  /// else drops to a float at `bits` (or at the stored precision).
  friend Scalar sqrt_scalar(const Scalar& a, unsigned bits = kDefaultPrecision) {
    if (a.sgn() < 0) throw DomainError("sqrt of negative scalar");
    if (a.is_exact()) {
      Rational root;
      if (exact_sqrt(a.as_rational(), &root)) return Scalar(root);
      return Scalar(sqrt(a.to_approx(bits)));
    }
    return Scalar(sqrt(a.to_approx()));
  }

  std::string to_string(int digits = 0) const {
    if (is_exact()) return rational_to_string(as_rational());
    return std::get<BigFloat>(v_).to_string(digits);
  }

  friend Scalar pow_scalar_ui(const Scalar& a, unsigned long e) {
    if (a.is_exact())
      return Scalar(pow_rational(a.as_rational(), static_cast<long>(e)));
    return Scalar(pow_ui(a.to_approx(), e));
  }

private:
  // Image of this value at the precision the mixed operation runs at.
  BigFloat lift(const Scalar& other) const {
    unsigned bits = kDefaultPrecision;
    if (!is_exact()) bits = std::get<BigFloat>(v_).precision();
    if (!other.is_exact()) {
      unsigned ob = std::get<BigFloat>(other.v_).precision();
      if (!is_exact() && std::get<BigFloat>(v_).precision() > ob)
        ob = std::get<BigFloat>(v_).precision();
      bits = ob;
    }
    return to_approx(bits);
  }

  std::variant<Rational, BigFloat> v_;
};

/// Complex number over Scalar; exactness is tracked componentwise.
struct ComplexScalar {
  Scalar re;
  Scalar im;

  ComplexScalar() = default;
  ComplexScalar(Scalar r, Scalar i = Scalar(0)) : re(std::move(r)), im(std::move(i)) {}

  bool is_exact() const { return re.is_exact() && im.is_exact(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  ComplexScalar conj() const { return {re, -im}; }
  Scalar norm_sq() const { return re * re + im * im; }

  friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) {
    Scalar d = b.norm_sq();
    if (d.is_zero()) throw DomainError("complex division by zero");
    ComplexScalar num = a * b.conj();
    return {num.re / d, num.im / d};
  }
  friend ComplexScalar operator-(const ComplexScalar& a) { return {-a.re, -a.im}; }

  ComplexScalar& operator+=(const ComplexScalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexScalar& operator-=(const ComplexScalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
    return a.re == b.re && a.im == b.im;
  }

  std::string to_string(int digits = 0) const {
    if (im.is_zero()) return re.to_string(digits);
    return re.to_string(digits) + (im.sgn() < 0 ? " - " : " + ") +
           abs(im).to_string(digits) + "i";
  }
};

inline ComplexScalar conj(const ComplexScalar& z) { return z.conj(); }

}  // namespace momlab
