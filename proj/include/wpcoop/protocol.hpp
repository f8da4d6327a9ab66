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

/// \file protocol.hpp
///
/// Event-level model of one protocol round: channel draws for every slot and
/// the destination's decoding of the frames that arrive.
///
/// Slot layout. DT uses a single slot in which every user sends one frame to
/// the destination. DF and NC use one broadcast and one cooperative slot; GNC
/// uses k1 broadcast and k2 cooperative slots. In a broadcast slot each user
/// reaches the destination and every partner; in a cooperative slot only the
/// destination listens. With energy transfer each slot starts with its own
/// harvest, and a source spends one harvested power on all of its links in
/// that slot.

#ifndef WPCOOP_PROTOCOL_HPP
#define WPCOOP_PROTOCOL_HPP

#include <cstdint>
#include <vector>

#include "wpcoop/analytic.hpp"
#include "wpcoop/galois.hpp"
#include "wpcoop/rng.hpp"

namespace wpcoop {

struct SimOptions {
  /// Draw a separate harvest gain for every link instead of one per source and slot.
  bool independent_links = false;
  /// Count a round as failed if any user is in outage, instead of averaging users.
  bool system_outage = false;
};

/// Received SNRs of one round, indexed by slot, transmitter and receiver.
struct ChannelRealization {
  unsigned users = 0;
  unsigned slots = 0;
  std::vector<double> dest;     ///< [slot * users + tx]
  std::vector<double> partner;  ///< [(slot * users + tx) * users + rx], diagonal unused

  void resize(unsigned users_, unsigned slots_);
  double& to_dest(unsigned slot, unsigned tx) { return dest[slot * users + tx]; }
  double to_dest(unsigned slot, unsigned tx) const { return dest[slot * users + tx]; }
  double& to_partner(unsigned slot, unsigned tx, unsigned rx) { return partner[(slot * users + tx) * users + rx]; }
  double to_partner(unsigned slot, unsigned tx, unsigned rx) const {
    return partner[(slot * users + tx) * users + rx];
  }
};

struct TrialOutcome {
  std::uint64_t outage_mask = 0;  ///< bit i: user i in outage
  /// bit (i * users + j): user j decoded user i's first broadcast frame.
  std::uint64_t overheard_mask = 0;
};

/// Transmit power of a source: M alpha eta P_d u / (1 - alpha) with energy
/// transfer, the fixed battery power otherwise. P_d = snr * noise.
double simulate_slot_power(double harvest_gain, const SystemParams& params, double alpha, unsigned users,
                           bool energy_transfer = true);

class ProtocolSimulator {
 public:
  /// Per-thread scratch space, reused across trials.
  struct Workspace {
    ChannelRealization channel;
    std::vector<double> plain_snr;       ///< MRC-combined SNR of each unknown's plain copies
    std::vector<std::uint64_t> knows;    ///< unknowns available to each user
    std::vector<GfElement> rows;         ///< received combined frames, then the decoding system
  };

  ProtocolSimulator(const Scheme& scheme, const SystemParams& params, SimOptions options = {});

  const Scheme& scheme() const { return scheme_; }
  const SimOptions& options() const { return options_; }
  const GaloisField& field() const { return field_; }
  /// unknowns x (users * parity frames per user); column i * k2 + t is user i's t-th parity frame.
  const GfMatrix& parity() const { return parity_; }

  unsigned users() const { return users_; }
  unsigned broadcast_slots() const { return broadcast_slots_; }
  unsigned slots() const { return slots_; }
  unsigned unknowns() const { return unknowns_; }
  double alpha() const { return alpha_; }
  /// Minimum received SNR for a frame, 2^R_E - 1.
  double snr_threshold() const { return threshold_; }

  Workspace make_workspace() const;

  /// Fills ws.channel with one round of fresh gains.
  void draw(StreamRng& rng, Workspace& ws) const;

  /// Plays the protocol over ws.channel. Leaves ws.plain_snr filled.
  TrialOutcome evaluate(Workspace& ws) const;

  TrialOutcome run_trial(StreamRng& rng, Workspace& ws) const {
    draw(rng, ws);
    return evaluate(ws);
  }

 private:
  Scheme scheme_;
  SystemParams params_;
  SimOptions options_;
  GaloisField field_;
  GfMatrix parity_;
  unsigned users_;
  unsigned broadcast_slots_;
  unsigned slots_;
  unsigned unknowns_;
  double alpha_;
  double threshold_;
  double power_scale_;  ///< transmit power per unit harvest gain
};

}  // namespace wpcoop

#endif  // WPCOOP_PROTOCOL_HPP
