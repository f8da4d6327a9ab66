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

#include "wpcoop/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wpcoop {
namespace {

constexpr std::uint64_t bit(unsigned i) { return std::uint64_t{1} << i; }

GfMatrix make_parity(const Scheme& scheme, const GaloisField& field) {
  switch (scheme.family) {
    case Family::NC:
      // User 1 sends S1 + S2, user 2 sends S1 + 2 S2.
      return GfMatrix(2, 2, {1, 1, 1, 2});
    case Family::GNC: {
      const std::size_t k = std::size_t{scheme.users} * scheme.k1;
      const std::size_t n = std::size_t{scheme.users} * (scheme.k1 + scheme.k2);
      const GfMatrix g = mds_generator(k, n, field);
      std::vector<std::size_t> cols;
      for (std::size_t c = k; c < n; ++c) cols.push_back(c);
      return g.select_columns(cols);
    }
    default:
      return {};
  }
}

}  // namespace

void ChannelRealization::resize(unsigned users_, unsigned slots_) {
  users = users_;
  slots = slots_;
  dest.assign(std::size_t{users} * slots, 0.0);
  partner.assign(std::size_t{users} * users * slots, 0.0);
}

double simulate_slot_power(double harvest_gain, const SystemParams& params, double alpha, unsigned users,
                           bool energy_transfer) {
  const double pd = params.snr_linear() * params.noise;
  if (!energy_transfer) return pd;
  return users * alpha * params.eta * pd * harvest_gain / (1.0 - alpha);
}

ProtocolSimulator::ProtocolSimulator(const Scheme& scheme, const SystemParams& params, SimOptions options)
    : scheme_(scheme), params_(params), options_(options), field_(scheme.field) {
  scheme_.validate();
  params_.validate();
  users_ = scheme_.slot_users();
  if (users_ > 8) throw std::invalid_argument("simulation supports at most 8 users");
  switch (scheme_.family) {
    case Family::DT:
      broadcast_slots_ = 1;
      slots_ = 1;
      break;
    case Family::DF:
    case Family::NC:
      broadcast_slots_ = 1;
      slots_ = 2;
      break;
    case Family::GNC:
      broadcast_slots_ = scheme_.k1;
      slots_ = scheme_.k1 + scheme_.k2;
      break;
  }
  unknowns_ = users_ * broadcast_slots_;
  if (unknowns_ > 64) throw std::invalid_argument("simulation supports at most 64 information frames");
  parity_ = make_parity(scheme_, field_);

  const double target = params_.rate / code_rate(scheme_);
  if (scheme_.energy_transfer) {
    alpha_ = resolve_alpha(scheme_, params_);
    threshold_ = std::expm1(std::numbers::ln2 * target / (1.0 - alpha_));
  } else {
    alpha_ = 0.0;
    threshold_ = std::expm1(std::numbers::ln2 * target);
  }
  power_scale_ = simulate_slot_power(1.0, params_, alpha_, users_, scheme_.energy_transfer);
}

ProtocolSimulator::Workspace ProtocolSimulator::make_workspace() const {
  Workspace ws;
  ws.channel.resize(users_, slots_);
  ws.plain_snr.assign(unknowns_, 0.0);
  ws.knows.assign(users_, 0);
  ws.rows.reserve(std::size_t{unknowns_} * (users_ * (slots_ - broadcast_slots_) + unknowns_));
  return ws;
}

void ProtocolSimulator::draw(StreamRng& rng, Workspace& ws) const {
  auto& ch = ws.channel;
  if (ch.users != users_ || ch.slots != slots_) ch.resize(users_, slots_);
  const bool et = scheme_.energy_transfer;
  const bool relays = scheme_.family != Family::DT;
  const double scale = power_scale_ / params_.noise;
  for (unsigned s = 0; s < slots_; ++s) {
    const bool broadcast = relays && s < broadcast_slots_;
    for (unsigned i = 0; i < users_; ++i) {
      const double u = et ? rng.exponential() : 1.0;
      ch.to_dest(s, i) = scale * u * rng.exponential();
      if (!broadcast) continue;
      for (unsigned j = 0; j < users_; ++j) {
        if (j == i) continue;
        const double uj = (et && options_.independent_links) ? rng.exponential() : u;
        ch.to_partner(s, i, j) = scale * uj * rng.exponential();
      }
    }
  }
}

TrialOutcome ProtocolSimulator::evaluate(Workspace& ws) const {
  const auto& ch = ws.channel;
  const unsigned k1 = broadcast_slots_;
  TrialOutcome out;
  ws.plain_snr.assign(unknowns_, 0.0);
  ws.knows.resize(users_);
  for (unsigned i = 0; i < users_; ++i) {
    ws.knows[i] = ((bit(k1) - 1) << (i * k1));
  }

  const bool relays = scheme_.family != Family::DT;
  for (unsigned s = 0; s < k1; ++s) {
    for (unsigned i = 0; i < users_; ++i) {
      const unsigned frame = i * k1 + s;
      ws.plain_snr[frame] += ch.to_dest(s, i);
      if (!relays) continue;
      for (unsigned j = 0; j < users_; ++j) {
        if (j == i || ch.to_partner(s, i, j) < threshold_) continue;
        ws.knows[j] |= bit(frame);
        if (s == 0) out.overheard_mask |= bit(i * users_ + j);
      }
    }
  }

  std::size_t combined = 0;
  ws.rows.clear();
  if (scheme_.family == Family::DF) {
    // Relay the partner's frame if it was decoded, otherwise repeat one's own.
    for (unsigned i = 0; i < 2; ++i) {
      const unsigned p = 1 - i;
      const unsigned frame = (ws.knows[i] & bit(p)) ? p : i;
      ws.plain_snr[frame] += ch.to_dest(1, i);
    }
  } else if (scheme_.family != Family::DT) {
    const unsigned k2 = slots_ - k1;
    for (unsigned t = 0; t < k2; ++t) {
      for (unsigned i = 0; i < users_; ++i) {
        const std::size_t col = std::size_t{i} * k2 + t;
        const double snr = ch.to_dest(k1 + t, i);
        unsigned nonzero = 0, last = 0;
        for (unsigned v = 0; v < unknowns_; ++v) {
          if ((ws.knows[i] & bit(v)) && parity_(v, col) != 0) {
            ++nonzero;
            last = v;
          }
        }
        if (nonzero == 1) {
          // A combination of a single frame is a plain copy.
          ws.plain_snr[last] += snr;
          continue;
        }
        if (snr < threshold_) continue;
        for (unsigned v = 0; v < unknowns_; ++v) {
          ws.rows.push_back((ws.knows[i] & bit(v)) ? parity_(v, col) : 0);
        }
        ++combined;
      }
    }
  }

  std::uint64_t recovered = 0;
  for (unsigned v = 0; v < unknowns_; ++v) {
    if (ws.plain_snr[v] >= threshold_) recovered |= bit(v);
  }
  const std::uint64_t all = unknowns_ == 64 ? ~std::uint64_t{0} : bit(unknowns_) - 1;
  if (combined > 0 && recovered != all) {
    for (unsigned v = 0; v < unknowns_; ++v) {
      if (!(recovered & bit(v))) continue;
      for (unsigned c = 0; c < unknowns_; ++c) ws.rows.push_back(c == v ? 1 : 0);
      ++combined;
    }
    recovered = detail::recoverable_mask(ws.rows, combined, unknowns_, field_);
  }

  for (unsigned i = 0; i < users_; ++i) {
    const std::uint64_t own = (bit(k1) - 1) << (i * k1);
    if ((own & recovered) != own) out.outage_mask |= bit(i);
  }
  return out;
}

}  // namespace wpcoop
