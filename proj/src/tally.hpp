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

#ifndef WPCOOP_SRC_TALLY_HPP
#define WPCOOP_SRC_TALLY_HPP

#include <bit>
#include <cstdint>

#include "wpcoop/montecarlo.hpp"

namespace wpcoop {
namespace detail {

struct Counts {
  std::uint64_t failures = 0;
  std::uint64_t samples = 0;
};

inline void tally(Counts& c, const TrialOutcome& t, unsigned users, bool system_outage) {
  if (system_outage) {
    c.failures += t.outage_mask != 0;
    c.samples += 1;
  } else {
    c.failures += static_cast<std::uint64_t>(std::popcount(t.outage_mask));
    c.samples += users;
  }
}

inline OutageEstimate finish(const Counts& c, std::uint64_t trials, std::uint64_t seed, bool system_outage) {
  OutageEstimate e;
  e.trials = trials;
  e.seed = seed;
  e.per_user = !system_outage;
  e.failures = c.failures;
  e.samples = c.samples;
  e.p_hat = static_cast<double>(c.failures) / static_cast<double>(c.samples);
  e.ci_halfwidth_95 = wilson_halfwidth_95(c.failures, c.samples);
  return e;
}

}  // namespace detail

}  // namespace wpcoop

#endif  // WPCOOP_SRC_TALLY_HPP
