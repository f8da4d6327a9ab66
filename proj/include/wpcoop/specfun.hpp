// Copyright 2026 The wpcoop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WPCOOP_SPECFUN_HPP
#define WPCOOP_SPECFUN_HPP

#include <cstdint>

namespace wpcoop {

/// Arguments of the regularized incomplete gamma function.
struct GammaArgs {
  double shape;  ///< a > 0
  double bound;  ///< x >= 0
};

/// Regularized lower incomplete gamma P(a, x) = (1/Gamma(a)) * int_0^x e^-t t^(a-1) dt.
///
/// Uses the power series for x < a + 1 and a Lentz continued fraction for the
/// complement otherwise. Throws std::domain_error if a <= 0 or x < 0.
double regularized_lower_gamma(double a, double x);
double regularized_lower_gamma(const GammaArgs& args);

/// log P(a, x), accurate where P underflows (small x). Returns -inf at x = 0.
double log_regularized_lower_gamma(double a, double x);

/// Principal branch W0 of the Lambert-W function, z >= -1/e.
double lambert_w0(double z);

/// Exact binomial coefficient C(n, k). Throws std::domain_error if k > n and
/// std::overflow_error if the result does not fit in 64 bits.
std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace wpcoop

#endif  // WPCOOP_SPECFUN_HPP
