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

#include <benchmark/benchmark.h>

#include "wpcoop/montecarlo.hpp"

namespace {

using wpcoop::Scheme;

wpcoop::SystemParams params() {
  wpcoop::SystemParams p;
  p.snr_db = 10.0;
  p.rate = 0.5;
  return p;
}

Scheme scheme_for(std::int64_t id) {
  switch (id) {
    case 0: return Scheme::decode_forward();
    case 1: return Scheme::network_coded();
    default: return Scheme::generalized(2, 2, 2);
  }
}

void BM_Parallel(benchmark::State& state) {
  const auto s = scheme_for(state.range(0));
  const auto trials = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpcoop::estimate_outage(s, params(), trials, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_Reference(benchmark::State& state) {
  const auto s = scheme_for(state.range(0));
  const auto trials = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wpcoop::estimate_outage_reference(s, params(), trials, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

}  // namespace

BENCHMARK(BM_Parallel)->ArgsProduct({{0, 1, 2}, {1 << 16}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Reference)->ArgsProduct({{0, 1, 2}, {1 << 16}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
