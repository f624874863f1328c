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
#include <catch2/catch_amalgamated.hpp>

#include "momlab/bigfloat.hpp"
#include "momlab/error.hpp"
#include "momlab/poly.hpp"
#include "momlab/qseries.hpp"
#include "momlab/rational.hpp"
#include "momlab/scalar.hpp"

using namespace momlab;

TEST_CASE("parse_rational handles fractions, decimals, scientific notation") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7/2") == Rational(-7, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("2.5e-1") == Rational(1, 4));
  CHECK(parse_rational("1e3") == Rational(1000));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(parse_rational("42") == Rational(42));
  CHECK_THROWS_AS(parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(parse_rational("abc"), ConfigError);
  CHECK_THROWS_AS(parse_rational(""), ConfigError);
}

TEST_CASE("exact_sqrt detects perfect rational squares") {
  Rational root;
  CHECK(exact_sqrt(Rational(9, 4), &root));
  CHECK(root == Rational(3, 2));
  CHECK(exact_sqrt(Rational(0), &root));
  CHECK(root == 0);
  CHECK_FALSE(exact_sqrt(Rational(2), &root));
  CHECK_FALSE(exact_sqrt(Rational(1, 3), &root));
}

TEST_CASE("factorial, binomial, pow_rational basics") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(4, 0) == 1);
  CHECK(pow_rational(Rational(1, 2), 3) == Rational(1, 8));
  CHECK(pow_rational(Rational(1, 2), -2) == Rational(4));
  CHECK(pow_rational(Rational(5), 0) == Rational(1));
}

TEST_CASE("BigFloat arithmetic joins precision and guards domain errors") {
  BigFloat a = BigFloat::from_rational(Rational(1, 3), 128);
  BigFloat b = BigFloat::from_rational(Rational(1, 3), 256);
  CHECK((a + b).precision() == 256);
  CHECK((a * b).precision() == 256);

  BigFloat two = BigFloat::from_long(2, 256);
  BigFloat r = sqrt(two);
  CHECK(relative_error(r * r, two) < BigFloat::pow2(-250, 256));

  CHECK_THROWS_AS(two / BigFloat::from_long(0, 256), DomainError);
  CHECK_THROWS_AS(sqrt(BigFloat::from_long(-1, 256)), DomainError);

  // pow2 and ldexp2 agree
  CHECK(BigFloat::pow2(-5, 64) == ldexp2(BigFloat::from_long(1, 64), -5));
}

TEST_CASE("BigFloat precision-doubling leaves leading digits fixed") {
  // the same computation at 128 vs 256 bits agrees to ~2^-120
  auto run = [](unsigned bits) {
    BigFloat x = BigFloat::from_rational(Rational(355, 113), bits);
    return exp(log(x) / BigFloat::from_long(3, bits));
  };
  CHECK(relative_error(run(128), run(256)) < BigFloat::pow2(-120, 256));
}

TEST_CASE("Scalar keeps exactness and lifts mixed operands") {
  Scalar e(Rational(2, 3));
  Scalar f(Rational(3, 4));
  CHECK((e * f).is_exact());
  CHECK((e * f) == Scalar(Rational(1, 2)));
  CHECK((e - e).is_zero());

  Scalar approx(BigFloat::from_long(2, 128));
  Scalar mixed = e + approx;
  CHECK_FALSE(mixed.is_exact());
  CHECK(mixed.to_approx(128).precision() >= 128);

  CHECK(sqrt_scalar(Scalar(Rational(9, 16)), 256).is_exact());
  CHECK(sqrt_scalar(Scalar(Rational(9, 16)), 256) == Scalar(Rational(3, 4)));
  CHECK_FALSE(sqrt_scalar(Scalar(Rational(2)), 256).is_exact());

  CHECK(pow_scalar_ui(Scalar(Rational(1, 2)), 10) == Scalar(Rational(1, 1024)));
  CHECK(abs(Scalar(Rational(-5, 7))) == Scalar(Rational(5, 7)));
  CHECK(Scalar(Rational(1, 3)) < Scalar(Rational(1, 2)));
}

TEST_CASE("ComplexScalar field operations") {
  ComplexScalar i(Scalar(0), Scalar(1));
  ComplexScalar z(Scalar(3), Scalar(4));
  CHECK(z.norm_sq() == Scalar(25));
  CHECK((z * conj(z)).re == Scalar(25));
  CHECK((z * conj(z)).im.is_zero());
  CHECK((i * i).re == Scalar(-1));

  ComplexScalar w = z / ComplexScalar(Scalar(1), Scalar(2));
  // (3+4i)/(1+2i) = (3+4i)(1-2i)/5 = (11-2i)/5
  CHECK(w.re == Scalar(Rational(11, 5)));
  CHECK(w.im == Scalar(Rational(-2, 5)));
  CHECK_THROWS_AS(z / ComplexScalar(Scalar(0), Scalar(0)), DomainError);
}

TEST_CASE("Poly arithmetic, evaluation, division") {
  Poly p({Scalar(1), Scalar(2), Scalar(1)});  // (1+x)^2
  Poly q({Scalar(1), Scalar(1)});             // 1+x
  CHECK(p.degree() == 2);
  CHECK((q * q) == p);
  CHECK((p - p).is_zero());
  CHECK(poly_eval(p, Scalar(Rational(1, 2))) == Scalar(Rational(9, 4)));

  // Horner vs naive power evaluation on a denser example
  Poly r({Scalar(3), Scalar(-1), Scalar(0), Scalar(Rational(2, 5)), Scalar(7)});
  Scalar x(Rational(-3, 2));
  Scalar naive(0);
  for (std::size_t k = 0; k < r.c.size(); ++k)
    naive += r.coeff(k) * pow_scalar_ui(x, k);
  CHECK(poly_eval(r, x) == naive);

  auto [quot, rem] = poly_divmod(r, q);
  CHECK((quot * q + rem) == r);
  CHECK(rem.degree() < q.degree());
  CHECK_THROWS_AS(poly_divmod(r, Poly()), DomainError);
}

TEST_CASE("poly_derivative and jet_at_zero") {
  // (x+2)^3 = 8 + 12x + 6x^2 + x^3; jets j! c_j = 8, 12, 12, 6
  Poly p({Scalar(8), Scalar(12), Scalar(6), Scalar(1)});
  std::vector<Scalar> jets = jet_at_zero(p, 4);
  CHECK(jets[0] == Scalar(8));
  CHECK(jets[1] == Scalar(12));
  CHECK(jets[2] == Scalar(12));
  CHECK(jets[3] == Scalar(6));

  Poly dp = poly_derivative(p, 1);
  CHECK(dp == Poly({Scalar(12), Scalar(12), Scalar(3)}));
  CHECK(poly_derivative(p, 4).is_zero());
}

TEST_CASE("root_poly and modulus_square closed forms") {
  ComplexScalar i(Scalar(0), Scalar(1));
  // simple root at i: R = x - i, |R|^2 = x^2 + 1
  CPoly R = root_poly({{i, 0}});
  Poly Q = modulus_square(R);
  CHECK(Q == Poly({Scalar(1), Scalar(0), Scalar(1)}));

  // double root: R = (x - i)^2, |R|^2 = (x^2 + 1)^2
  CPoly R2 = root_poly({{i, 1}});
  Poly Q2 = modulus_square(R2);
  CHECK(Q2 == Poly({Scalar(1), Scalar(0), Scalar(2), Scalar(0), Scalar(1)}));

  // |R(t)|^2 == Q(t) for rational t and a mixed root set
  CPoly R3 = root_poly({{ComplexScalar(Scalar(1), Scalar(2)), 0},
                        {ComplexScalar(Scalar(-1), Scalar(Rational(1, 3))), 1}});
  Poly Q3 = modulus_square(R3);
  for (long num = -3; num <= 3; ++num) {
    Scalar t(Rational(num, 2));
    ComplexScalar val = poly_eval(R3, ComplexScalar(t, Scalar(0)));
    CHECK(val.norm_sq() == poly_eval(Q3, t));
  }

  CHECK_THROWS_AS(root_poly({}), ConfigError);
  // duplicate roots are rejected at the RootSystem layer; root_poly itself
  // accepts any list, so no throw expected here
}

TEST_CASE("q-Pochhammer values and recurrence") {
  Scalar q(Rational(1, 2));
  CHECK(q_pochhammer(q, 0) == Scalar(1));
  // (1/2; 1/2)_3 = (1/2)(3/4)(7/8) = 21/64
  CHECK(q_pochhammer(q, 3) == Scalar(Rational(21, 64)));
  for (std::size_t n = 1; n <= 10; ++n) {
    Scalar lhs = q_pochhammer(q, n);
    Scalar rhs = q_pochhammer(q, n - 1) * (Scalar(1) - pow_scalar_ui(q, n));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("q-binomial Pascal identity") {
  Scalar q(Rational(2, 3));
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      Scalar lhs = q_binomial(q, n, k);
      Scalar rhs = q_binomial(q, n - 1, k - 1) +
                   pow_scalar_ui(q, k) * q_binomial(q, n - 1, k);
      CHECK(lhs == rhs);
    }
    CHECK(q_binomial(q, n, 0) == Scalar(1));
    CHECK(q_binomial(q, n, n) == Scalar(1));
  }
}

TEST_CASE("scalar and bigfloat string rendering") {
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_to_string(Rational(5)) == "5");
  Scalar v(Rational(1, 4));
  CHECK(v.to_string() == "1/4");
  BigFloat x = BigFloat::from_rational(Rational(1, 4), 64);
  std::string s = x.to_string(6);
  CHECK(s.find("2.5") != std::string::npos);
}
