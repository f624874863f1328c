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

#include "momlab/probes.hpp"

using namespace momlab;

namespace {

const ComplexScalar kI(Scalar(0), Scalar(1));

OrthonormalBasis basis_of(const MeasureSpec& m, std::size_t N) {
  MomentSequence s = m.moments(2 * (N + 1));
  return orthonormal_basis(chebyshev_recurrence(s, N + 1), N);
}

}  // namespace

TEST_CASE("determinate Laguerre kernel diverges at z = i") {
  ProbeCurve pc = determinacy_probe(basis_of(MeasureSpec::laguerre(), 60), kI, 60, 256);
  CHECK_FALSE(pc.bounded_looking);
  CHECK(pc.classification == "diverging-looking");
  CHECK(pc.label == "heuristic");
  REQUIRE(pc.partial_sums.size() == 61);
  REQUIRE(pc.increments.size() == 60);
  // K_0 = |p_0(i)|^2 = 1/s_0 = 1
  CHECK(pc.partial_sums[0] == Scalar(1));
  // partial sums are strictly increasing by construction
  for (std::size_t i = 1; i < pc.partial_sums.size(); ++i)
    CHECK(pc.partial_sums[i] > pc.partial_sums[i - 1]);
  // increments stay macroscopic: no Cauchy plateau anywhere
  Scalar cut(pow_rational(Rational(1, 2), 64));
  for (const Scalar& inc : pc.increments) CHECK(inc > cut);
}

TEST_CASE("indeterminate lognormal kernel plateaus at z = i") {
  // override the rule threshold to 2^-32: the contrast with Laguerre is
  // decisive there (lognormal increments sink to ~2^-44 and below over the
  // last quartile, Laguerre's grow without bound)
  Scalar thr(pow_rational(Rational(1, 2), 32));
  OrthonormalBasis sw = sw_basis(Scalar(Rational(1, 2)), 60);
  ProbeCurve pc = determinacy_probe(sw, kI, 60, 256, thr);
  CHECK(pc.bounded_looking);
  CHECK(pc.classification == "bounded-looking");
  CHECK(pc.label == "heuristic");
  CHECK(pc.rule.find("1/4294967296") != std::string::npos);  // 2^-32 threshold

  ProbeCurve lag = determinacy_probe(basis_of(MeasureSpec::laguerre(), 60), kI, 60,
                                     256, thr);
  CHECK_FALSE(lag.bounded_looking);
}

TEST_CASE("probe rejects real evaluation points and trivial depth works") {
  OrthonormalBasis b = basis_of(MeasureSpec::uniform_unit(), 4);
  CHECK_THROWS_AS(determinacy_probe(b, ComplexScalar(Scalar(1), Scalar(0)), 4, 256),
                  DomainError);
  CHECK_THROWS_AS(determinacy_probe(b, kI, 9, 256), InsufficientMomentsError);

  ProbeCurve pc = determinacy_probe(b, kI, 0, 256);
  REQUIRE(pc.partial_sums.size() == 1);
  CHECK(pc.partial_sums[0] == Scalar(1));  // 1/s_0
  CHECK(pc.increments.empty());
}

TEST_CASE("riesz check: UniformUnit decays, discrete hits zero at full span") {
  RieszReport rep = riesz_ideal_check(MeasureSpec::uniform_unit(), kI, 1, 12, 256);
  CHECK(rep.monotone_nonincreasing);
  REQUIRE(rep.curve.size() == 12);
  // N = 1 residual is the projection onto span{x - i}: 1/16
  CHECK(rep.curve[0].second == Scalar(Rational(1, 16)));
  CHECK(rep.final_residual < Scalar(Rational(1, 1000)));

  MeasureSpec m = MeasureSpec::discrete(
      {Scalar(1), Scalar(2), Scalar(3)},
      {Scalar(Rational(1, 2)), Scalar(Rational(1, 4)), Scalar(Rational(1, 4))});
  RieszReport rd = riesz_ideal_check(m, kI, 1, 3, 256);
  CHECK(rd.final_residual.is_zero());              // cofactor degree 2 covers 3 atoms
  CHECK(rd.curve[1].second > Scalar(0));           // one step earlier it cannot

  CHECK_THROWS_AS(
      riesz_ideal_check(MeasureSpec::uniform_unit(), ComplexScalar(Scalar(2), Scalar(0)),
                        1, 5, 256),
      DomainError);
}

TEST_CASE("density index probe distinguishes the families") {
  DensityIndexReport rep =
      density_index_probe(MeasureSpec::laguerre(), 2, 16, 256);
  REQUIRE(rep.rows.size() == 3);
  CHECK(rep.label == "heuristic");
  for (const DensityIndexRow& row : rep.rows) {
    CHECK_FALSE(row.kernel_probe.bounded_looking);
    CHECK(row.kernel_probe.label == "heuristic");
    // residuals of f = 1 into xC[x] for the shifted measure keep shrinking
    CHECK(row.residual_curve.back().second > Scalar(0));
    CHECK(row.residual_curve.back().second < row.residual_curve.front().second);
  }
  CHECK(rep.summary.find("delta(mu) = infinity") != std::string::npos);

  // k = 0 row must agree with the untransformed probe
  ProbeCurve direct = determinacy_probe(basis_of(MeasureSpec::laguerre(), 16), kI,
                                        16, 256);
  CHECK(rep.rows[0].kernel_probe.classification == direct.classification);
  for (std::size_t i = 0; i < direct.partial_sums.size(); ++i)
    CHECK(rep.rows[0].kernel_probe.partial_sums[i] == direct.partial_sums[i]);

  // the lognormal family trips the bounded-looking alternative
  Scalar thr(pow_rational(Rational(1, 2), 20));
  DensityIndexReport ln = density_index_probe(
      MeasureSpec::lognormal(Scalar(Rational(1, 2))), 1, 40, 256, thr);
  bool any_bounded = false;
  for (const DensityIndexRow& row : ln.rows)
    any_bounded = any_bounded || row.kernel_probe.bounded_looking;
  CHECK(any_bounded);
  CHECK(ln.summary.find("indeterminate") != std::string::npos);

  // signed support is rejected
  MeasureSpec neg = MeasureSpec::discrete({Scalar(-1), Scalar(1)},
                                          {Scalar(1), Scalar(1)});
  CHECK_THROWS_AS(density_index_probe(neg, 1, 4, 256), DomainError);
}
