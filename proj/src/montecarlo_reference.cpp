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

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "tally.hpp"
#include "wpcoop/montecarlo.hpp"

namespace wpcoop {
namespace {

struct Frame {
  std::vector<GfElement> coeffs;
  double snr;
};

bool is_unit(const std::vector<GfElement>& v, std::size_t& where) {
  std::size_t nonzero = 0;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) {
      ++nonzero;
      where = j;
    }
  }
  return nonzero == 1 && v[where] == 1;
}

}  // namespace

TrialOutcome evaluate_reference(const ProtocolSimulator& sim, const ChannelRealization& ch) {
  const unsigned m = sim.users();
  const unsigned k1 = sim.broadcast_slots();
  const unsigned k2 = sim.slots() - k1;
  const unsigned n = sim.unknowns();
  const double thr = sim.snr_threshold();
  const Family family = sim.scheme().family;
  const auto unit = [n](std::size_t j) {
    std::vector<GfElement> v(n, 0);
    v[j] = 1;
    return v;
  };

  std::vector<std::set<std::size_t>> decoded(m);
  TrialOutcome out;
  std::vector<Frame> frames;

  for (unsigned s = 0; s < k1; ++s) {
    for (unsigned i = 0; i < m; ++i) {
      const std::size_t own = std::size_t{i} * k1 + s;
      decoded[i].insert(own);
      frames.push_back({unit(own), ch.to_dest(s, i)});
      if (family == Family::DT) continue;
      for (unsigned j = 0; j < m; ++j) {
        if (j != i && ch.to_partner(s, i, j) >= thr) {
          decoded[j].insert(own);
          if (s == 0) out.overheard_mask |= std::uint64_t{1} << (i * m + j);
        }
      }
    }
  }

  for (unsigned t = 0; t < k2; ++t) {
    for (unsigned i = 0; i < m; ++i) {
      const double snr = ch.to_dest(k1 + t, i);
      if (family == Family::DF) {
        const std::size_t partner = 1 - i;
        frames.push_back({unit(decoded[i].count(partner) ? partner : i), snr});
        continue;
      }
      std::vector<GfElement> coeffs(n, 0);
      for (std::size_t v : decoded[i]) coeffs[v] = sim.parity()(v, std::size_t{i} * k2 + t);
      // A combination of one frame is sent as that frame.
      const auto nonzero = [](GfElement c) { return c != 0; };
      if (std::count_if(coeffs.begin(), coeffs.end(), nonzero) == 1) {
        coeffs = unit(static_cast<std::size_t>(std::find_if(coeffs.begin(), coeffs.end(), nonzero) - coeffs.begin()));
      }
      frames.push_back({coeffs, snr});
    }
  }

  // Copies of the same plain frame are MRC-combined before the threshold;
  // coded frames stand alone.
  std::vector<double> mrc(n, 0.0);
  GfMatrix system;
  for (const Frame& f : frames) {
    std::size_t where = 0;
    if (is_unit(f.coeffs, where)) {
      mrc[where] += f.snr;
    } else if (f.snr >= thr) {
      system.append_row(f.coeffs);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (mrc[v] >= thr) system.append_row(unit(v));
  }

  std::set<std::size_t> recovered;
  if (system.rows() > 0) {
    const auto r = recoverable_unknowns(system, sim.field());
    recovered.insert(r.begin(), r.end());
  }
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned s = 0; s < k1; ++s) {
      if (!recovered.count(std::size_t{i} * k1 + s)) {
        out.outage_mask |= std::uint64_t{1} << i;
        break;
      }
    }
  }
  return out;
}

OutageEstimate estimate_outage_reference(const Scheme& scheme, const SystemParams& params, std::uint64_t trials,
                                         std::uint64_t seed, SimOptions options) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  const ProtocolSimulator sim(scheme, params, options);
  auto ws = sim.make_workspace();
  detail::Counts counts;
  for (std::uint64_t done = 0, chunk = 0; done < trials; ++chunk) {
    StreamRng rng(seed, chunk);
    const std::uint64_t n = std::min(kChunkTrials, trials - done);
    for (std::uint64_t t = 0; t < n; ++t) {
      sim.draw(rng, ws);
      detail::tally(counts, evaluate_reference(sim, ws.channel), sim.users(), options.system_outage);
    }
    done += n;
  }
  return detail::finish(counts, trials, seed, options.system_outage);
}

}  // namespace wpcoop
