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

#ifndef WPCOOP_RNG_HPP
#define WPCOOP_RNG_HPP

#include <array>
#include <cstdint>

namespace wpcoop {

/// Philox4x32-10 block function (Salmon et al., SC'11).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);
};

/// Seed and stream index of one independent random sequence.
struct TrialRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Sequential draws from one Philox stream: the key is the seed, the upper
/// counter half is the stream index, the lower half counts blocks.
class StreamRng {
 public:
  explicit StreamRng(TrialRng id);
  StreamRng(std::uint64_t seed, std::uint64_t stream) : StreamRng(TrialRng{seed, stream}) {}

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1p-53; }

  /// Unit-mean exponential, i.e. |h|^2 for a unit-variance Rayleigh envelope.
  double exponential();

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter counter_;
  Philox4x32::Counter buffer_{};
  unsigned used_ = 4;
};

}  // namespace wpcoop

#endif  // WPCOOP_RNG_HPP
