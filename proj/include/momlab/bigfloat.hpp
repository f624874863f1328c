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

#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "momlab/error.hpp"
#include "momlab/rational.hpp"

namespace momlab {

inline constexpr unsigned kDefaultPrecision = 256;

/// Value-semantic wrapper around mpfr_t.  Every value carries its own
/// precision in bits; binary operations round to the larger precision of
/// the two operands (round-to-nearest throughout).
class BigFloat {
public:
  explicit BigFloat(unsigned bits = kDefaultPrecision) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_zero(v_, 1);
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }

  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat from_long(long x, unsigned bits) {
    BigFloat r(bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }

  static BigFloat from_rational(const Rational& q, unsigned bits) {
    BigFloat r(bits);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
  }

  static BigFloat from_string(const std::string& s, unsigned bits) {
    BigFloat r(bits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw ConfigError("bad float literal '" + s + "'");
    return r;
  }

  /// 2^e at the given precision (exact).
  static BigFloat pow2(long e, unsigned bits) {
    BigFloat r(bits);
    mpfr_set_ui_2exp(r.v_, 1, static_cast<mpfr_exp_t>(e), MPFR_RNDN);
    return r;
  }

  unsigned precision() const {
    return static_cast<unsigned>(mpfr_get_prec(v_));
  }

  int sgn() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw DomainError("float division by zero");
    BigFloat r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend bool operator<(const BigFloat& a, const BigFloat& b) {
    return mpfr_less_p(a.v_, b.v_) != 0;
  }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) {
    return mpfr_lessequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return b <= a; }
  friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !(a == b); }

  friend BigFloat abs(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat sqrt(const BigFloat& a) {
    if (a.sgn() < 0) throw DomainError("sqrt of negative value");
    BigFloat r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat exp(const BigFloat& a) {
    BigFloat r(a.precision());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat log(const BigFloat& a) {
    if (a.sgn() <= 0) throw DomainError("log of nonpositive value");
    BigFloat r(a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat pow_ui(const BigFloat& a, unsigned long e) {
    BigFloat r(a.precision());
    mpfr_pow_ui(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  /// a * 2^e (exact).
  friend BigFloat ldexp2(const BigFloat& a, long e) {
    BigFloat r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  /// Decimal string with the given number of significant digits
  /// (defaults to full working precision).
  std::string to_string(int digits = 0) const {
    if (digits <= 0)
      digits = static_cast<int>(std::ceil(precision() * 0.30103)) + 1;
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

private:
  static unsigned join(const BigFloat& a, const BigFloat& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
  }

  mpfr_t v_;
};

/// |a - b| relative to max(|a|, |b|); zero when both vanish.
inline BigFloat relative_error(const BigFloat& a, const BigFloat& b) {
  BigFloat diff = abs(a - b);
  BigFloat scale = abs(a) > abs(b) ? abs(a) : abs(b);
  if (scale.is_zero()) return diff;
  return diff / scale;
}

}  // namespace momlab
