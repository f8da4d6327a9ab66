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

#ifndef WPCOOP_VALIDATION_HPP
#define WPCOOP_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wpcoop/analytic.hpp"

namespace wpcoop {

struct CheckResult {
  std::string name;
  double measured;
  double expected;
  double tolerance;
  bool pass;
};

struct ValidationOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  /// Model under test; substituting wrong constants must make the suite fail.
  AnalyticModel model{};
};

/// Special-function identities, field and MDS checks, MC against exact
/// oracles, diversity slopes and threshold SNRs.
std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

}  // namespace wpcoop

#endif  // WPCOOP_VALIDATION_HPP
