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

#include "wpcoop/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wpcoop {
namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 100000;

void check_gamma_domain(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw std::domain_error("incomplete gamma: shape must be positive and finite");
  }
  if (!(x >= 0.0)) {
    throw std::domain_error("incomplete gamma: bound must be non-negative");
  }
}

// log of sum_{k>=0} x^k / ((a+1)...(a+k)); P(a,x) = x^a e^-x / Gamma(a+1) * sum.
double log_series_sum(double a, double x) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < kMaxIter; ++k) {
    term *= x / (a + k);
    sum += term;
    if (term < sum * kEps) {
      return std::log(sum);
    }
  }
  throw std::runtime_error("incomplete gamma: series did not converge");
}

// log Q(a,x) via the modified Lentz evaluation of the continued fraction.
double log_upper_continued_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) {
      return a * std::log(x) - x - std::lgamma(a) + std::log(h);
    }
  }
  throw std::runtime_error("incomplete gamma: continued fraction did not converge");
}

}  // namespace

double regularized_lower_gamma(double a, double x) {
  check_gamma_domain(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) {
    return std::exp(a * std::log(x) - x - std::lgamma(a + 1.0) + log_series_sum(a, x));
  }
  return -std::expm1(log_upper_continued_fraction(a, x));
}

double regularized_lower_gamma(const GammaArgs& args) {
  return regularized_lower_gamma(args.shape, args.bound);
}

double log_regularized_lower_gamma(double a, double x) {
  check_gamma_domain(a, x);
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) {
    return a * std::log(x) - x - std::lgamma(a + 1.0) + log_series_sum(a, x);
  }
  return std::log1p(-std::exp(log_upper_continued_fraction(a, x)));
}

double lambert_w0(double z) {
  constexpr double branch_point = -1.0 / std::numbers::e;
  if (std::isnan(z) || z < branch_point) {
    throw std::domain_error("lambert_w0: argument below -1/e");
  }
  if (z == branch_point) return -1.0;
  if (z == 0.0) return 0.0;
  if (std::isinf(z)) return z;

  double w;
  if (z < -0.25) {
    // Expansion about the branch point.
    const double p = std::sqrt(2.0 * (std::numbers::e * z + 1.0));
    w = -1.0 + p - p * p / 3.0;
  } else if (z < 3.0) {
    w = std::log1p(z) * (1.0 - std::log1p(std::log1p(z)) / (2.0 + std::log1p(z)));
  } else {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  // Halley iteration on f(w) = w e^w - z.
  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= 1e-15 * (1.0 + std::fabs(w))) break;
  }
  return w;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) throw std::domain_error("binomial: k > n");
  if (k > n - k) k = n - k;
  __extension__ using Wide = unsigned __int128;
  Wide result = 1;
  for (unsigned i = 0; i < k; ++i) {
    // C(n, i+1) = C(n, i) * (n - i) / (i + 1) is exact at every step.
    result = result * (n - i) / (i + 1);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial: result exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace wpcoop
