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

#include <cmath>

#include "momlab/moments.hpp"
#include "momlab/poly.hpp"

using namespace momlab;

TEST_CASE("built-in moment closed forms") {
  MomentSequence lag = MeasureSpec::laguerre().moments(5);
  CHECK(lag.at(0) == Scalar(1));
  CHECK(lag.at(1) == Scalar(1));
  CHECK(lag.at(2) == Scalar(2));
  CHECK(lag.at(3) == Scalar(6));
  CHECK(lag.at(4) == Scalar(24));
  CHECK(lag.exact);

  MomentSequence uni = MeasureSpec::uniform_unit().moments(3);
  CHECK(uni.at(0) == Scalar(1));
  CHECK(uni.at(1) == Scalar(Rational(1, 2)));
  CHECK(uni.at(2) == Scalar(Rational(1, 3)));
  CHECK(uni.at(3) == Scalar(Rational(1, 4)));

  // lognormal: s_m = q^{-m(m+1)/2}, s_0 = 1 normalization
  MomentSequence ln2 = MeasureSpec::lognormal(Scalar(Rational(1, 2))).moments(3);
  CHECK(ln2.at(0) == Scalar(1));
  CHECK(ln2.at(1) == Scalar(2));
  CHECK(ln2.at(2) == Scalar(8));
  CHECK(ln2.at(3) == Scalar(64));

  CHECK_THROWS_AS(lag.at(6), InsufficientMomentsError);
}

TEST_CASE("discrete moments are running power sums") {
  MeasureSpec m = MeasureSpec::discrete(
      {Scalar(Rational(1, 2)), Scalar(2), Scalar(3)},
      {Scalar(Rational(1, 4)), Scalar(Rational(1, 4)), Scalar(Rational(1, 2))});
  MomentSequence s = m.moments(3);
  CHECK(s.at(0) == Scalar(1));
  CHECK(s.at(1) == Scalar(Rational(1, 8) + Rational(1, 2) + Rational(3, 2)));
  Scalar s3 = Scalar(Rational(1, 4)) * Scalar(Rational(1, 8)) +
              Scalar(Rational(1, 4)) * Scalar(8) + Scalar(Rational(1, 2)) * Scalar(27);
  CHECK(s.at(3) == s3);
}

TEST_CASE("lognormal moments match numeric quadrature of the density") {
  // independent oracle: the weight with s_n = q^{-n(n+1)/2} is the lognormal
  // density with sigma^2 = ln(1/q), mu = sigma^2/2; trapezoid in u = ln x
  // converges superalgebraically for Gaussian-type integrands
  for (double qd : {0.5, 0.75}) {
    Rational qr = qd == 0.5 ? Rational(1, 2) : Rational(3, 4);
    MomentSequence s = MeasureSpec::lognormal(Scalar(qr)).moments(6);
    double sig2 = std::log(1.0 / qd);
    double sig = std::sqrt(sig2);
    double mu = sig2 / 2.0;
    for (int n = 0; n <= 6; ++n) {
      double center = mu + n * sig2;
      double h = sig / 16.0;
      long steps = static_cast<long>(std::ceil(28.0 * sig / h));
      double lo = center - 14.0 * sig;
      double sum = 0.0;
      for (long i = 0; i <= steps; ++i) {
        double u = lo + i * h;
        double g = std::exp(n * u - (u - mu) * (u - mu) / (2.0 * sig2)) /
                   (sig * std::sqrt(2.0 * M_PI));
        sum += (i == 0 || i == steps) ? g / 2.0 : g;
      }
      sum *= h;
      double exact = s.at(n).to_approx(64).to_double();
      CHECK(std::abs(sum - exact) <= 1e-9 * exact);
    }
  }
}

TEST_CASE("lognormal parameter validation") {
  CHECK_THROWS_AS(MeasureSpec::lognormal(Scalar(2)), ConfigError);
  CHECK_THROWS_AS(MeasureSpec::lognormal(Scalar(1)), ConfigError);
  CHECK_THROWS_AS(MeasureSpec::lognormal(Scalar(0)), ConfigError);
  CHECK_THROWS_AS(MeasureSpec::lognormal(Scalar(Rational(-1, 2))), ConfigError);
}

TEST_CASE("discrete atom validation") {
  CHECK_THROWS_AS(MeasureSpec::discrete({}, {}), ConfigError);
  CHECK_THROWS_AS(MeasureSpec::discrete({Scalar(1)}, {Scalar(1), Scalar(1)}),
                  ConfigError);
  CHECK_THROWS_AS(MeasureSpec::discrete({Scalar(1)}, {Scalar(0)}), ConfigError);
  CHECK_THROWS_AS(MeasureSpec::discrete({Scalar(1), Scalar(1)},
                                        {Scalar(1), Scalar(1)}),
                  ConfigError);
}

TEST_CASE("Hankel positive definiteness holds for built-ins and fails for fakes") {
  for (std::size_t M : {24u}) {
    MeasureSpec::laguerre().moments(M).assert_positive_definite(M / 2);
    MeasureSpec::uniform_unit().moments(M).assert_positive_definite(M / 2);
    MeasureSpec::lognormal(Scalar(Rational(1, 2)))
        .moments(M)
        .assert_positive_definite(M / 2);
  }
  // signed "moment" data has a negative pivot
  CHECK_THROWS_AS(
      MomentSequence::from({Scalar(1), Scalar(0), Scalar(-1)}).assert_positive_definite(1),
      PositivityError);
  // raw measure constructor performs the same check up-front
  CHECK_THROWS_AS(MeasureSpec::raw(MomentSequence::from({Scalar(1), Scalar(0), Scalar(-1)})),
                  PositivityError);
  CHECK_THROWS_AS(MomentSequence::from({Scalar(-1)}), PositivityError);
  CHECK_THROWS_AS(MomentSequence::from({}), ConfigError);
  // not enough moments to even form the requested Hankel block
  CHECK_THROWS_AS(MeasureSpec::laguerre().moments(3).assert_positive_definite(2),
                  InsufficientMomentsError);
}

TEST_CASE("power_shift shifts the sequence and validates") {
  MomentSequence uni = MeasureSpec::uniform_unit().moments(8);
  MomentSequence sh = power_shift(uni, 2);
  CHECK(sh.at(0) == Scalar(Rational(1, 3)));
  CHECK(sh.at(3) == Scalar(Rational(1, 6)));
  CHECK(sh.max_order() == 6);

  // composition: shifting twice equals one combined shift
  MomentSequence a = power_shift(power_shift(uni, 1), 2);
  MomentSequence b = power_shift(uni, 3);
  CHECK(a.max_order() == b.max_order());
  for (std::size_t m = 0; m <= a.max_order(); ++m) CHECK(a.at(m) == b.at(m));

  CHECK_THROWS_AS(power_shift(uni, 9), InsufficientMomentsError);
  // all mass at 0: the shifted sequence is no longer a positive measure
  MomentSequence zero_atom = MeasureSpec::discrete({Scalar(0)}, {Scalar(1)}).moments(4);
  CHECK_THROWS_AS(power_shift(zero_atom, 1), PositivityError);
}

TEST_CASE("modulus_transform closed forms") {
  ComplexScalar i(Scalar(0), Scalar(1));
  MomentSequence uni = MeasureSpec::uniform_unit().moments(10);

  // R = x: |R|^2 = x^2, the transform is power_shift by 2
  RootSystem at_zero({{ComplexScalar(Scalar(0), Scalar(0)), 0}});
  MomentSequence t0 = modulus_transform(uni, at_zero);
  MomentSequence sh2 = power_shift(uni, 2);
  for (std::size_t m = 0; m <= t0.max_order(); ++m) CHECK(t0.at(m) == sh2.at(m));

  // R = x - i over UniformUnit: s'_m = 1/(m+3) + 1/(m+1)
  RootSystem at_i({{i, 0}});
  MomentSequence ti = modulus_transform(uni, at_i);
  for (std::size_t m = 0; m <= ti.max_order(); ++m)
    CHECK(ti.at(m) == Scalar(Rational(1, static_cast<long>(m) + 3) +
                             Rational(1, static_cast<long>(m) + 1)));

  // R = x - 1 over atoms {0, 1}: only the atom at 0 survives |x-1|^2
  MomentSequence disc =
      MeasureSpec::discrete({Scalar(0), Scalar(1)},
                            {Scalar(Rational(1, 2)), Scalar(Rational(1, 2))})
          .moments(6);
  RootSystem at_one({{ComplexScalar(Scalar(1), Scalar(0)), 0}});
  MomentSequence t1 = modulus_transform(disc, at_one);
  CHECK(t1.at(0) == Scalar(Rational(1, 2)));
  CHECK(t1.at(1).is_zero());  // the surviving atom sits at x = 0

  // insufficient moments: transform needs s up to 2 deg(R) beyond the range
  MomentSequence tiny = MeasureSpec::uniform_unit().moments(1);
  CHECK_THROWS_AS(modulus_transform(tiny, at_i), InsufficientMomentsError);
}

TEST_CASE("root system validation") {
  ComplexScalar i(Scalar(0), Scalar(1));
  CHECK_THROWS_AS(RootSystem({}), ConfigError);
  CHECK_THROWS_AS(RootSystem({{i, 0}, {i, 1}}), ConfigError);
  RootSystem rs({{i, 1}});
  CHECK(rs.degree() == 2);
  CPoly g = rs.generator();
  CHECK(g.degree() == 2);
}

TEST_CASE("atom queries") {
  MeasureSpec disc = MeasureSpec::discrete(
      {Scalar(0), Scalar(Rational(1, 2))}, {Scalar(Rational(1, 3)), Scalar(Rational(2, 3))});
  CHECK(disc.has_atom_at(Scalar(0)));
  CHECK(disc.atom_mass(Scalar(0)) == Scalar(Rational(1, 3)));
  CHECK(disc.atom_mass(Scalar(7)).is_zero());
  CHECK_FALSE(disc.has_atom_at(Scalar(7)));

  CHECK(MeasureSpec::uniform_unit().atom_mass(Scalar(0)).is_zero());
  CHECK(MeasureSpec::laguerre().support_nonneg());
  CHECK(MeasureSpec::uniform_unit().support_nonneg());
  CHECK_FALSE(MeasureSpec::discrete({Scalar(-1)}, {Scalar(1)}).support_nonneg());

  MeasureSpec raw = MeasureSpec::raw(MeasureSpec::laguerre().moments(6));
  CHECK_THROWS_AS(raw.atom_mass(Scalar(0)), DomainError);
}

TEST_CASE("measure names and exactness flags") {
  CHECK(MeasureSpec::laguerre().is_exact());
  CHECK(MeasureSpec::lognormal(Scalar(Rational(1, 2))).is_exact());
  CHECK_FALSE(
      MeasureSpec::lognormal(Scalar(BigFloat::from_rational(Rational(1, 2), 128)))
          .is_exact());
  CHECK(MeasureSpec::laguerre().name() == "laguerre");
  CHECK(MeasureSpec::uniform_unit().name() == "uniform-unit");
}
