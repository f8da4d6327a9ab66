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

/// \file analytic.hpp
///
/// Closed-form outage, time-sharing, diversity, capacity and threshold results
/// for direct transmission (DT), decode-and-forward (DF), two-user nonbinary
/// network coding (NC) and generalized network coding (GNC), each with or
/// without downlink energy transfer.
///
/// SNR convention: noise power is the unit at every receiver. For
/// energy-transfer schemes the SNR axis is the destination's transmit power
/// over noise; for battery schemes it is the common per-link average SNR.

#ifndef WPCOOP_ANALYTIC_HPP
#define WPCOOP_ANALYTIC_HPP

#include <optional>
#include <string>
#include <string_view>

#include "wpcoop/galois.hpp"

namespace wpcoop {

enum class Family { DT, DF, NC, GNC };

/// Protocol descriptor. DF and NC are two-user; `users` matters for DT (size
/// of the TDMA frame the harvested energy is spread over) and GNC.
struct Scheme {
  Family family = Family::DT;
  bool energy_transfer = true;
  unsigned users = 2;
  unsigned k1 = 1;  ///< information frames per user (GNC)
  unsigned k2 = 1;  ///< parity frames per user (GNC)
  FieldSpec field{};

  static Scheme direct(bool energy_transfer = true);
  static Scheme decode_forward(bool energy_transfer = true);
  static Scheme network_coded(bool energy_transfer = true);
  static Scheme generalized(unsigned users, unsigned k1, unsigned k2, bool energy_transfer = true);

  /// Number of users sharing one time slot, which scales harvested power.
  unsigned slot_users() const;

  /// Lower-case token, e.g. "edf" or "gnc".
  std::string name() const;

  /// Throws std::invalid_argument on inconsistent parameters.
  void validate() const;
};

/// Parses a scheme token (dt, df, nc, gnc, edt, edf, enc, egnc).
Scheme parse_scheme(std::string_view token, unsigned users = 2, unsigned k1 = 2, unsigned k2 = 2,
                    unsigned field_degree = 8);

struct SystemParams {
  double snr_db = 0.0;
  double eta = 1.0;              ///< energy transfer efficiency, (0, 1]
  std::optional<double> alpha;   ///< time-share; empty means the closed-form optimum
  double rate = 1.0;             ///< attempted rate R of direct transmission, bpcu
  double noise = 1.0;            ///< receiver noise power

  double snr_linear() const;
  void validate() const;
};

/// Moments of the generalized-gamma fit to a product of n unit exponentials.
struct EtLinkConstants {
  double m0;
  double omega0;
  unsigned n;

  static EtLinkConstants for_product_of(unsigned n);
};

enum class NcForm {
  Exact,        ///< per-case conditionals from exact erasure enumeration, MRC pairs at P^2/2
  FourCaseSum,  ///< weighted sum of the per-case approximations 3P^3, P^2/2, 2P^3, P^2
  LeadingTerm,  ///< 4 P^3
};

struct AnalyticModel {
  EtLinkConstants link = EtLinkConstants::for_product_of(2);
  NcForm nc_form = NcForm::Exact;
};

struct SchemeConstants {
  double code_gain;           ///< xi
  unsigned outage_exponent;   ///< power of the per-link outage in the leading term
  double diversity;           ///< D
  double phi;                 ///< capacity constant; NaN for battery schemes
};

/// Fraction of slots carrying new information: DT 1, DF and NC 1/2, GNC k1/(k1+k2).
double code_rate(const Scheme& scheme);

SchemeConstants scheme_constants(const Scheme& scheme, double eta = 1.0, const AnalyticModel& model = {});

/// Battery-powered Rayleigh link: 1 - exp(-(2^R - 1) / snr).
double outage_link(const SystemParams& params, double target_rate);

/// Product threshold g: the link is in outage iff |h_harvest|^2 |h_data|^2 < g.
/// `target_rate` is the rate before the (1 - alpha) adjustment.
double et_product_threshold(const SystemParams& params, double alpha, double target_rate, unsigned slot_users = 2);

/// Energy-transfer link outage through the generalized-gamma fit,
/// P(m0, (2 m0 / omega0) sqrt(g)).
double outage_et_link(const SystemParams& params, double alpha, double target_rate, unsigned slot_users = 2,
                      const EtLinkConstants& link = EtLinkConstants::for_product_of(2));

/// High-SNR form m0^(m0-1) / Gamma(m0) * ((2 / omega0) sqrt(g))^m0.
double outage_et_link_asymptotic(const SystemParams& params, double alpha, double target_rate,
                                 unsigned slot_users = 2,
                                 const EtLinkConstants& link = EtLinkConstants::for_product_of(2));

/// params.alpha if set, otherwise optimal_alpha_closed.
double resolve_alpha(const Scheme& scheme, const SystemParams& params);

/// Outage of a single link of the scheme at its per-link rate R / R_X.
double per_link_outage(const Scheme& scheme, const SystemParams& params, const AnalyticModel& model = {});

double nc_exact_polynomial(double p);
double nc_four_case_sum(double p);

/// Scheme outage, clamped to [0, 1].
double outage_scheme(const Scheme& scheme, const SystemParams& params, const AnalyticModel& model = {});

/// Natural log of the unclamped scheme outage at an explicit alpha. Stays
/// finite where the outage itself underflows.
double log_outage_unclamped(const Scheme& scheme, const SystemParams& params, double alpha,
                            const AnalyticModel& model = {});

/// High-rate approximation R_X / (R ln 2 + R_X).
double optimal_alpha_closed(double rate, const Scheme& scheme);

/// Golden-section minimizer of the scheme outage over alpha in [1e-4, 1 - 1e-4].
double optimal_alpha_numeric(const Scheme& scheme, const SystemParams& params, const AnalyticModel& model = {});

double diversity_order(const Scheme& scheme, const AnalyticModel& model = {});

/// Largest rate R with outage below epsilon, through the Lambert-W closed form.
double epsilon_outage_capacity(double epsilon, const SystemParams& params, const Scheme& scheme,
                               const AnalyticModel& model = {});

/// Same quantity by numerically inverting the regularized-gamma outage, with
/// alpha resolved per params (optimum re-evaluated at every trial rate).
double epsilon_outage_capacity_numeric(double epsilon, const SystemParams& params, const Scheme& scheme,
                                       const AnalyticModel& model = {});

enum class ThresholdMode {
  LowerBound,       ///< closed form from the W(z) ~ ln z approximation
  Numeric,          ///< crossing of the numerically inverted capacities
  LambertCrossing,  ///< crossing of the Lambert-W capacity closed forms
};

/// SNR (dB) below which `scheme` has a larger epsilon-outage capacity than
/// energy-transfer direct transmission. Requires R_X = 1/2.
double threshold_snr_db(double epsilon, const Scheme& scheme, ThresholdMode mode, double eta = 1.0,
                        const AnalyticModel& model = {});

}  // namespace wpcoop

#endif  // WPCOOP_ANALYTIC_HPP
