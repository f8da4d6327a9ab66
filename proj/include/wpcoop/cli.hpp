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

#ifndef WPCOOP_CLI_HPP
#define WPCOOP_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wpcoop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Inclusive arithmetic grid `start:stop:step`, or a single value.
struct SweepSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  static SweepSpec parse(std::string_view text);
  std::vector<double> values() const;
};

/// Runs the command line (without the program name). Tables go to `out`
/// unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Formats a value with 10 significant digits; probabilities below 1e-3 are
/// always written in scientific notation.
std::string format_number(double value);
std::string format_probability(double p);

}  // namespace wpcoop

#endif  // WPCOOP_CLI_HPP
