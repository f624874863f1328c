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

#include "momlab/scalar.hpp"

namespace momlab {

/// q-Pochhammer symbol (q;q)_n = prod_{k=1}^{n} (1 - q^k); empty product
/// for n = 0.  Exact in, exact out.
inline Scalar q_pochhammer(const Scalar& q, unsigned long n) {
  Scalar prod(1);
  Scalar qk(1);
  for (unsigned long k = 1; k <= n; ++k) {
    qk *= q;
    prod *= Scalar(1) - qk;
  }
  return prod;
}

/// Gaussian binomial [n choose k]_q = (q;q)_n / ((q;q)_k (q;q)_{n-k}).
inline Scalar q_binomial(const Scalar& q, unsigned long n, unsigned long k) {
  if (k > n) return Scalar(0);
  return q_pochhammer(q, n) / (q_pochhammer(q, k) * q_pochhammer(q, n - k));
}

}  // namespace momlab
