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
#include <vector>

#include "momlab/moments.hpp"
#include "momlab/scalar.hpp"

namespace momlab {

/// Three-term recurrence data for the monic orthogonal polynomials:
/// pi_{k+1}(x) = (x - a_k) pi_k(x) - b_k pi_{k-1}(x),  pi_0 = 1, pi_{-1} = 0,
/// with b_k > 0 for a positive-definite moment functional.
struct RecurrenceCoeffs {
  std::vector<Scalar> a;  // a_0 .. a_{d-1}
  std::vector<Scalar> b;  // b_1 .. b_{d-1}
  Scalar s0;
  bool exact = true;

  std::size_t depth() const { return a.size(); }

  const Scalar& a_at(std::size_t k) const {
    if (k >= a.size()) throw InternalError("recurrence depth exceeded (a)");
    return a[k];
  }
  const Scalar& b_at(std::size_t k) const {  // k >= 1
    if (k == 0 || k > b.size()) throw InternalError("recurrence depth exceeded (b)");
    return b[k - 1];
  }

  /// ||pi_k||^2 = s_0 * b_1 * ... * b_k, valid for k <= depth()-1.
  Scalar norm_sq(std::size_t k) const {
    Scalar r = s0;
    for (std::size_t j = 1; j <= k; ++j) r *= b_at(j);
    return r;
  }
};

/// Moments -> recurrence coefficients via the Chebyshev algorithm on the
/// mixed moments sigma_{k,l} = <pi_k, x^l>  (Gautschi, "On generating
/// orthogonal polynomials", SIAM J. Sci. Stat. Comput. 3 (1982), Sec. 2.3):
///   sigma_{k,l} = sigma_{k-1,l+1} - a_{k-1} sigma_{k-1,l} - b_{k-1} sigma_{k-2,l}
///   a_k = sigma_{k,k+1}/sigma_{k,k} - sigma_{k-1,k}/sigma_{k-1,k-1}
///   b_k = sigma_{k,k}/sigma_{k-1,k-1}
/// The classical ill-conditioning of this map is bypassed on the exact
/// rational path; float-path callers must apply the precision-doubling
/// policy.  Requires s_0..s_{2n-1}.
inline RecurrenceCoeffs chebyshev_recurrence(const MomentSequence& s, std::size_t n) {
  if (n == 0) throw ConfigError("recurrence depth must be positive");
  if (s.max_order() + 1 < 2 * n)
    throw InsufficientMomentsError("depth " + std::to_string(n) +
                                   " needs moments through s_" +
                                   std::to_string(2 * n - 1));
  if (s.at(0).sgn() <= 0) throw PositivityError("s_0 must be positive");

  RecurrenceCoeffs rc;
  rc.s0 = s.at(0);
  rc.exact = s.exact;
  rc.a.reserve(n);
  rc.b.reserve(n - 1);

  std::size_t len = 2 * n;
  std::vector<Scalar> prev2, prev(s.s.begin(), s.s.begin() + static_cast<long>(len));
  rc.a.push_back(prev[1] / prev[0]);

  for (std::size_t k = 1; k < n; ++k) {
    std::vector<Scalar> cur(len, Scalar(0));
    for (std::size_t l = k; l + k < len; ++l) {
      cur[l] = prev[l + 1] - rc.a[k - 1] * prev[l];
      if (k >= 2) cur[l] -= rc.b[k - 2] * prev2[l];
    }
    if (cur[k].sgn() <= 0) {
      std::string why = s.exact
          ? "measure has fewer than " + std::to_string(k + 1) + " support points"
          : "precision exhausted at step " + std::to_string(k);
      throw PositivityError("recurrence breakdown (b_" + std::to_string(k) +
                            " <= 0): " + why);
    }
    rc.b.push_back(cur[k] / prev[k - 1]);
    rc.a.push_back(cur[k + 1] / cur[k] - prev[k] / prev[k - 1]);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return rc;
}

}  // namespace momlab
