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

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "momlab/error.hpp"

namespace momlab {

// GMP rationals are kept canonical (lowest terms, positive denominator)
// by every mpq_* operation, which is exactly the representation contract
// we need for the exact path.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), base.get_num().get_mpz_t(),
             static_cast<unsigned long>(e < 0 ? -e : e));
  mpz_pow_ui(num.get_den_mpz_t(), base.get_den().get_mpz_t(),
             static_cast<unsigned long>(e < 0 ? -e : e));
  num.canonicalize();
  if (e < 0) {
    if (num == 0) throw DomainError("0 raised to a negative power");
    return Rational(1) / num;
  }
  return num;
}

/// True iff |r| is the square of a rational; if so *root is set to the
/// nonnegative square root.
inline bool exact_sqrt(const Rational& r, Rational* root) {
  if (sgn(r) < 0) return false;
  if (mpz_perfect_square_p(r.get_num().get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(r.get_den().get_mpz_t()) == 0) return false;
  Rational s;
  mpz_sqrt(s.get_num_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(s.get_den_mpz_t(), r.get_den().get_mpz_t());
  s.canonicalize();
  if (root) *root = s;
  return true;
}

/// Parses "p/q" fractions and plain/scientific decimal strings into exact
/// rationals ("0.25" -> 1/4, "5e-3" -> 1/200).
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ConfigError("empty numeric literal");
  if (text.find('/') != std::string::npos) {
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
      throw ConfigError("bad fraction literal '" + text + "'");
    if (r.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
  }

  // Decimal / scientific form: sign, digits, optional '.', optional exponent.
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
  std::string digits;
  long frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (seen_dot) throw ConfigError("bad numeric literal '" + text + "'");
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw ConfigError("bad numeric literal '" + text + "'");
    }
  }
  long exp10 = 0;
  if (i < text.size()) {  // exponent part
    ++i;
    try {
      exp10 = std::stol(text.substr(i));
    } catch (...) {
      throw ConfigError("bad exponent in '" + text + "'");
    }
  }
  if (!seen_digit) throw ConfigError("bad numeric literal '" + text + "'");

  // explicit base 10: the auto-detecting constructor would read a leading
  // zero ("0.25" -> digits "025") as octal
  Rational r(Integer(digits.empty() ? std::string("0") : digits, 10));
  long shift = exp10 - frac_digits;
  if (shift != 0) r *= pow_rational(Rational(10), shift);
  if (neg) r = -r;
  r.canonicalize();
  return r;
}

inline std::string rational_to_string(const Rational& r) {
  return r.get_str();
}

}  // namespace momlab
