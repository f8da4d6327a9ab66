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

#include "wpcoop/montecarlo.hpp"

#include "tally.hpp"

#include <omp.h>

#include <algorithm>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <stdexcept>

namespace wpcoop {

double wilson_halfwidth_95(std::uint64_t failures, std::uint64_t samples) {
  if (samples == 0) return 0.0;
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(failures) / n;
  return z / (1.0 + z * z / n) * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n));
}

double product_exp_cdf_exact(double g) {
  if (!(g >= 0.0)) throw std::domain_error("product_exp_cdf_exact: g must be non-negative");
  if (g == 0.0) return 0.0;
  if (std::isinf(g)) return 1.0;
  boost::math::quadrature::exp_sinh<double> integrator;
  const auto f = [g](double x) { return x > 0.0 ? std::exp(-x - g / x) : 0.0; };
  const double tail = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-13);
  return std::clamp(1.0 - tail, 0.0, 1.0);
}

OutageEstimate estimate_outage(const Scheme& scheme, const SystemParams& params, std::uint64_t trials,
                               std::uint64_t seed, SimOptions options, unsigned workers) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const ProtocolSimulator sim(scheme, params, options);
  const std::uint64_t chunks = (trials + kChunkTrials - 1) / kChunkTrials;
  const int threads = workers == 0 ? omp_get_max_threads() : static_cast<int>(workers);
  std::uint64_t failures = 0;
  std::uint64_t samples = 0;

#pragma omp parallel num_threads(threads) reduction(+ : failures, samples)
  {
    auto ws = sim.make_workspace();
    detail::Counts local;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
      const auto chunk = static_cast<std::uint64_t>(c);
      StreamRng rng(seed, chunk);
      const std::uint64_t n = std::min(kChunkTrials, trials - chunk * kChunkTrials);
      for (std::uint64_t t = 0; t < n; ++t) {
        detail::tally(local, sim.run_trial(rng, ws), sim.users(), options.system_outage);
      }
    }
    failures += local.failures;
    samples += local.samples;
  }
  return detail::finish({failures, samples}, trials, seed, options.system_outage);
}

}  // namespace wpcoop
