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

#include "momlab/moments.hpp"
#include "momlab/quadrature.hpp"
#include "momlab/recurrence.hpp"

using namespace momlab;

namespace {

RecurrenceCoeffs recurrence_of(const MeasureSpec& m, std::size_t n) {
  return chebyshev_recurrence(m.moments(2 * n), n);
}

}  // namespace

TEST_CASE("Gauss-Laguerre closed forms at small order") {
  const unsigned bits = 256;
  BigFloat tol = BigFloat::pow2(-200, bits);

  // n = 1: single node at a_0 = 1 with full mass
  QuadratureRule r1 = gauss_rule(recurrence_of(MeasureSpec::laguerre(), 1), 1, bits);
  REQUIRE(r1.size() == 1);
  CHECK(relative_error(r1.nodes[0].to_approx(bits), BigFloat::from_long(1, bits)) < tol);
  CHECK(relative_error(r1.masses[0].to_approx(bits), BigFloat::from_long(1, bits)) < tol);

  // n = 2: nodes 2 -+ sqrt(2), masses (2 +- sqrt(2))/4
  QuadratureRule r2 = gauss_rule(recurrence_of(MeasureSpec::laguerre(), 2), 2, bits);
  REQUIRE(r2.size() == 2);
  BigFloat rt2 = sqrt(BigFloat::from_long(2, bits));
  BigFloat two = BigFloat::from_long(2, bits);
  BigFloat four = BigFloat::from_long(4, bits);
  CHECK(relative_error(r2.nodes[0].to_approx(bits), two - rt2) < tol);
  CHECK(relative_error(r2.nodes[1].to_approx(bits), two + rt2) < tol);
  CHECK(relative_error(r2.masses[0].to_approx(bits), (two + rt2) / four) < tol);
  CHECK(relative_error(r2.masses[1].to_approx(bits), (two - rt2) / four) < tol);
}

TEST_CASE("full-order rule recovers a discrete measure") {
  const unsigned bits = 256;
  std::vector<Scalar> pts = {Scalar(Rational(1, 3)), Scalar(1), Scalar(Rational(5, 2))};
  std::vector<Scalar> wts = {Scalar(Rational(1, 6)), Scalar(Rational(1, 2)),
                             Scalar(Rational(1, 3))};
  MeasureSpec m = MeasureSpec::discrete(pts, wts);
  QuadratureRule r = gauss_rule(recurrence_of(m, 3), 3, bits);
  REQUIRE(r.size() == 3);
  BigFloat tol = BigFloat::pow2(-200, bits);
  for (std::size_t j = 0; j < 3; ++j) {
    CHECK(relative_error(r.nodes[j].to_approx(bits), pts[j].to_approx(bits)) < tol);
    CHECK(relative_error(r.masses[j].to_approx(bits), wts[j].to_approx(bits)) < tol);
  }
}

TEST_CASE("mass positivity, total mass, moment exactness across families") {
  const unsigned bits = 256;
  BigFloat tol = BigFloat::pow2(-128, bits);
  for (const MeasureSpec& m :
       {MeasureSpec::laguerre(), MeasureSpec::uniform_unit(),
        MeasureSpec::lognormal(Scalar(Rational(1, 2)))}) {
    std::size_t cap = m.as_lognormal() ? 6 : 8;
    unsigned fbits = m.as_lognormal() ? 512 : bits;
    MomentSequence s = m.moments(2 * cap);
    RecurrenceCoeffs rc = chebyshev_recurrence(s, cap);
    for (std::size_t n = 1; n <= cap; ++n) {
      QuadratureRule rule = gauss_rule(rc, n, fbits);
      for (const Scalar& h : rule.masses) CHECK(h.sgn() > 0);
      CHECK(relative_error(rule.mass_sum().to_approx(fbits), s.at(0).to_approx(fbits)) <
            tol);
      CHECK(quadrature_moment_defect(rule, s, 2 * n - 1, fbits) < tol);
    }
  }
}

TEST_CASE("zeros: positivity certificates and interlacing") {
  const unsigned bits = 256;
  for (const MeasureSpec& m :
       {MeasureSpec::laguerre(), MeasureSpec::uniform_unit()}) {
    RecurrenceCoeffs rc = recurrence_of(m, 10);
    std::vector<Scalar> prev;
    for (std::size_t n = 1; n <= 10; ++n) {
      CHECK(zeros_strictly_positive(rc, n));
      std::vector<Scalar> zs = zeros(rc, n, bits);
      REQUIRE(zs.size() == n);
      if (n >= 2) {
        InterlacingReport il = interlacing_check(prev, zs, bits);
        CHECK(il.ok);
        CHECK(il.min_gap > Scalar(0));
      }
      prev = zs;
    }
  }

  // UniformUnit zeros live strictly inside (0,1)
  RecurrenceCoeffs ru = recurrence_of(MeasureSpec::uniform_unit(), 8);
  for (const Scalar& z : zeros(ru, 8, bits)) {
    CHECK(z.to_approx(bits) > BigFloat::from_long(0, bits));
    CHECK(z.to_approx(bits) < BigFloat::from_long(1, bits));
  }
}

TEST_CASE("interlacing detects violations") {
  const unsigned bits = 128;
  std::vector<Scalar> a = {Scalar(1), Scalar(3)};
  std::vector<Scalar> good = {Scalar(0), Scalar(2), Scalar(4)};
  std::vector<Scalar> bad = {Scalar(0), Scalar(5), Scalar(6)};
  CHECK(interlacing_check(a, good, bits).ok);
  CHECK_FALSE(interlacing_check(a, bad, bits).ok);
  // length mismatch is a contract violation, not a numeric failure
  CHECK_FALSE(interlacing_check(a, a, bits).ok);
}

TEST_CASE("weak convergence on a non-polynomial integrand") {
  // integral of e^{-x}/(1+x) over [0,inf) = e * E_1(1); sixty digits frozen
  // from an independent special-function evaluation
  const unsigned bits = 256;
  BigFloat target = BigFloat::from_string(
      "0.596347362323194074341078499369279376074177860152548781573485", bits);
  MomentSequence s = MeasureSpec::laguerre().moments(80);
  RecurrenceCoeffs rc = chebyshev_recurrence(s, 40);
  BigFloat prev_err(bits);
  bool have_prev = false;
  for (std::size_t n : {5u, 10u, 20u, 40u}) {
    QuadratureRule rule = gauss_rule(rc, n, bits);
    BigFloat acc = BigFloat::from_long(0, bits);
    for (std::size_t j = 0; j < rule.size(); ++j) {
      BigFloat x = rule.nodes[j].to_approx(bits);
      acc = acc + rule.masses[j].to_approx(bits) / (BigFloat::from_long(1, bits) + x);
    }
    BigFloat err = abs(acc - target);
    if (have_prev) CHECK(err < prev_err);
    prev_err = err;
    have_prev = true;
  }
  // Gauss-Laguerre error for this integrand decays like exp(-4 sqrt(n));
  // the n = 40 error lands at 1.44e-10
  CHECK(prev_err < BigFloat::from_rational(Rational(1, 2000000000L), bits));
}

TEST_CASE("quadrature failure modes") {
  RecurrenceCoeffs rc = recurrence_of(MeasureSpec::laguerre(), 4);
  CHECK_THROWS_AS(gauss_rule(rc, 5, 256), InsufficientMomentsError);
  CHECK_THROWS_AS(zeros(rc, 0, 256), ConfigError);

  // positivity certificate requires exact recurrence data
  RecurrenceCoeffs approx_rc = rc;
  approx_rc.exact = false;
  approx_rc.a[0] = Scalar(BigFloat::from_long(1, 128));
  CHECK_THROWS_AS(zeros_strictly_positive(approx_rc, 2), PrecisionError);
}
