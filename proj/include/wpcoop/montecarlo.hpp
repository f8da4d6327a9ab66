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

#ifndef WPCOOP_MONTECARLO_HPP
#define WPCOOP_MONTECARLO_HPP

#include <cstdint>

#include "wpcoop/analytic.hpp"
#include "wpcoop/protocol.hpp"

namespace wpcoop {

/// Trials per chunk; chunk c draws from stream c of the seed.
inline constexpr std::uint64_t kChunkTrials = 4096;

struct OutageEstimate {
  double p_hat = 0.0;
  std::uint64_t trials = 0;
  double ci_halfwidth_95 = 0.0;  ///< Wilson score interval
  std::uint64_t seed = 0;
  bool per_user = true;
  std::uint64_t failures = 0;  ///< outage events counted
  std::uint64_t samples = 0;   ///< indicators averaged: trials * users, or trials

  bool operator==(const OutageEstimate&) const = default;
};

/// Half-width of the 95% Wilson score interval for `failures` out of `samples`.
double wilson_halfwidth_95(std::uint64_t failures, std::uint64_t samples);

/// Pr{X Y < g} for independent unit exponentials, 1 - 2 sqrt(g) K1(2 sqrt(g)),
/// by adaptive quadrature of 1 - int_0^inf exp(-x - g/x) dx.
double product_exp_cdf_exact(double g);

/// OpenMP estimate over `workers` threads (0: the OpenMP default). The result
/// depends only on the arguments other than `workers`.
OutageEstimate estimate_outage(const Scheme& scheme, const SystemParams& params, std::uint64_t trials,
                               std::uint64_t seed, SimOptions options = {}, unsigned workers = 0);

/// Single-threaded estimate that replays the same draws but decodes each
/// round with an unoptimized frame-list model. Used to check the kernel.
OutageEstimate estimate_outage_reference(const Scheme& scheme, const SystemParams& params, std::uint64_t trials,
                                         std::uint64_t seed, SimOptions options = {});

/// Outage indicators of one round under the frame-list model.
TrialOutcome evaluate_reference(const ProtocolSimulator& sim, const ChannelRealization& channel);

}  // namespace wpcoop

#endif  // WPCOOP_MONTECARLO_HPP
