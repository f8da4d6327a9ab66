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

#include "wpcoop/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "wpcoop/optimize.hpp"
#include "wpcoop/specfun.hpp"

namespace wpcoop {
namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

// alpha and 1 - alpha carried separately so the closed-form optimum keeps full
// precision when alpha is close to one.
struct TimeShare {
  double alpha;
  double one_minus;
};

TimeShare fixed_share(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  return {alpha, 1.0 - alpha};
}

TimeShare optimal_share(double rate, const Scheme& scheme) {
  const double rx = code_rate(scheme);
  const double denom = rate * kLn2 + rx;
  return {rx / denom, rate * kLn2 / denom};
}

TimeShare share_for(const Scheme& scheme, const SystemParams& params, double rate) {
  return params.alpha ? fixed_share(*params.alpha) : optimal_share(rate, scheme);
}

double product_threshold(double snr, double eta, unsigned users, TimeShare share, double target_rate) {
  const double exponent = kLn2 * target_rate / share.one_minus;
  if (exponent > 700.0) return kInf;
  return share.one_minus * std::expm1(exponent) / (users * share.alpha * eta * snr);
}

double log_link_outage_et(double g, const EtLinkConstants& link) {
  if (std::isinf(g)) return 0.0;
  return log_regularized_lower_gamma(link.m0, 2.0 * link.m0 / link.omega0 * std::sqrt(g));
}

double log_link_outage_battery(double snr, double target_rate) {
  const double x = std::expm1(kLn2 * target_rate) / snr;
  if (std::isinf(x)) return 0.0;
  return std::log(-std::expm1(-x));
}

double log_link_outage(const Scheme& scheme, const SystemParams& params, TimeShare share,
                       const EtLinkConstants& link) {
  const double target = params.rate / code_rate(scheme);
  if (!scheme.energy_transfer) return log_link_outage_battery(params.snr_linear(), target);
  const double g = product_threshold(params.snr_linear(), params.eta, scheme.slot_users(), share, target);
  return log_link_outage_et(g, link);
}

double combine(const Scheme& scheme, double p, NcForm nc_form) {
  if (scheme.family == Family::NC) {
    switch (nc_form) {
      case NcForm::Exact:
        return nc_exact_polynomial(p);
      case NcForm::FourCaseSum:
        return nc_four_case_sum(p);
      case NcForm::LeadingTerm:
        return 4.0 * p * p * p;
    }
  }
  const auto c = scheme_constants(scheme);
  return c.code_gain * std::pow(p, c.outage_exponent);
}

double log_combine(const Scheme& scheme, double log_p, NcForm nc_form) {
  const auto c = scheme_constants(scheme);
  if (scheme.family == Family::NC && nc_form != NcForm::LeadingTerm && log_p > -200.0) {
    return std::log(combine(scheme, std::exp(log_p), nc_form));
  }
  return std::log(c.code_gain) + c.outage_exponent * log_p;
}

void require_energy_transfer(const Scheme& scheme, const char* what) {
  if (!scheme.energy_transfer) {
    throw std::invalid_argument(std::string(what) + " is defined for energy-transfer schemes only");
  }
}

void require_probability(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

}  // namespace

Scheme Scheme::direct(bool energy_transfer) { return {Family::DT, energy_transfer, 2, 1, 1, {}}; }
Scheme Scheme::decode_forward(bool energy_transfer) { return {Family::DF, energy_transfer, 2, 1, 1, {}}; }
Scheme Scheme::network_coded(bool energy_transfer) { return {Family::NC, energy_transfer, 2, 1, 1, {}}; }
Scheme Scheme::generalized(unsigned users, unsigned k1, unsigned k2, bool energy_transfer) {
  return {Family::GNC, energy_transfer, users, k1, k2, {}};
}

unsigned Scheme::slot_users() const {
  return (family == Family::DF || family == Family::NC) ? 2u : users;
}

std::string Scheme::name() const {
  std::string base;
  switch (family) {
    case Family::DT: base = "dt"; break;
    case Family::DF: base = "df"; break;
    case Family::NC: base = "nc"; break;
    case Family::GNC: base = "gnc"; break;
  }
  return energy_transfer ? "e" + base : base;
}

void Scheme::validate() const {
  switch (family) {
    case Family::DT:
      if (users < 1) throw std::invalid_argument("DT needs at least one user");
      break;
    case Family::DF:
    case Family::NC:
      if (users != 2) throw std::invalid_argument("DF and NC are two-user protocols");
      break;
    case Family::GNC:
      if (users < 2) throw std::invalid_argument("GNC needs at least two users");
      if (k1 < 1 || k2 < 1) throw std::invalid_argument("GNC needs k1 >= 1 and k2 >= 1");
      break;
  }
  if (field.degree < 2 || field.degree > 16) throw std::invalid_argument("field degree must be in [2, 16]");
}

Scheme parse_scheme(std::string_view token, unsigned users, unsigned k1, unsigned k2, unsigned field_degree) {
  std::string t(token);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  bool et = false;
  std::string_view base = t;
  if (t.size() > 2 && t.front() == 'e') {
    et = true;
    base.remove_prefix(1);
  }
  Scheme s;
  if (base == "dt") {
    s = Scheme::direct(et);
  } else if (base == "df") {
    s = Scheme::decode_forward(et);
  } else if (base == "nc") {
    s = Scheme::network_coded(et);
  } else if (base == "gnc") {
    s = Scheme::generalized(users, k1, k2, et);
  } else {
    throw std::invalid_argument("unknown scheme '" + std::string(token) + "'");
  }
  s.field = FieldSpec::with_degree(field_degree);
  s.validate();
  return s;
}

double SystemParams::snr_linear() const { return std::pow(10.0, snr_db / 10.0); }

void SystemParams::validate() const {
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in (0, 1]");
  if (alpha && !(*alpha > 0.0 && *alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(rate > 0.0)) throw std::invalid_argument("rate must be positive");
  if (!(noise > 0.0)) throw std::invalid_argument("noise must be positive");
}

EtLinkConstants EtLinkConstants::for_product_of(unsigned n) {
  const double nn = static_cast<double>(n);
  return {0.6102 * nn + 0.4263, 0.8808 * std::pow(nn, -0.9661) + 1.12, n};
}

double code_rate(const Scheme& scheme) {
  switch (scheme.family) {
    case Family::DT: return 1.0;
    case Family::DF:
    case Family::NC: return 0.5;
    case Family::GNC: return static_cast<double>(scheme.k1) / (scheme.k1 + scheme.k2);
  }
  return 1.0;
}

SchemeConstants scheme_constants(const Scheme& scheme, double eta, const AnalyticModel& model) {
  SchemeConstants c{};
  switch (scheme.family) {
    case Family::DT: c.code_gain = 1.0; c.outage_exponent = 1; break;
    case Family::DF: c.code_gain = 1.5; c.outage_exponent = 2; break;
    case Family::NC: c.code_gain = 4.0; c.outage_exponent = 3; break;
    case Family::GNC:
      c.code_gain = static_cast<double>(binomial(scheme.k1 + scheme.k2 - 1, scheme.k2));
      c.outage_exponent = scheme.users + scheme.k2;
      break;
  }
  if (!scheme.energy_transfer) {
    c.diversity = c.outage_exponent;
    c.phi = std::numeric_limits<double>::quiet_NaN();
    return c;
  }
  const double m0 = model.link.m0;
  c.diversity = c.outage_exponent * m0 / 2.0;
  const double lead = std::pow(m0, m0 - 1.0) / std::tgamma(m0);
  const double base = std::pow(lead, 2.0 / m0) * std::pow(2.0 / model.link.omega0, 2.0) *
                      (std::numbers::e * kLn2 / (scheme.slot_users() * eta));
  c.phi = c.code_gain * std::pow(base, c.diversity);
  return c;
}

double outage_link(const SystemParams& params, double target_rate) {
  return std::exp(log_link_outage_battery(params.snr_linear(), target_rate));
}

double et_product_threshold(const SystemParams& params, double alpha, double target_rate, unsigned slot_users) {
  return product_threshold(params.snr_linear(), params.eta, slot_users, fixed_share(alpha), target_rate);
}

double outage_et_link(const SystemParams& params, double alpha, double target_rate, unsigned slot_users,
                      const EtLinkConstants& link) {
  const double g = et_product_threshold(params, alpha, target_rate, slot_users);
  if (std::isinf(g)) return 1.0;
  return regularized_lower_gamma(link.m0, 2.0 * link.m0 / link.omega0 * std::sqrt(g));
}

double outage_et_link_asymptotic(const SystemParams& params, double alpha, double target_rate,
                                 unsigned slot_users, const EtLinkConstants& link) {
  const double g = et_product_threshold(params, alpha, target_rate, slot_users);
  const double lead = std::pow(link.m0, link.m0 - 1.0) / std::tgamma(link.m0);
  return lead * std::pow(2.0 / link.omega0 * std::sqrt(g), link.m0);
}

double resolve_alpha(const Scheme& scheme, const SystemParams& params) {
  return params.alpha ? *params.alpha : optimal_alpha_closed(params.rate, scheme);
}

double per_link_outage(const Scheme& scheme, const SystemParams& params, const AnalyticModel& model) {
  const TimeShare share = share_for(scheme, params, params.rate);
  return std::exp(log_link_outage(scheme, params, share, model.link));
}

double nc_exact_polynomial(double p) {
  const double q = 1.0 - p;
  const double mrc = p * p / 2.0;  // both copies of a duplicated frame lost under MRC
  const double case1 = q * q * (3.0 * p * p * p - 2.0 * p * p * p * p);
  const double case2 = p * p * mrc;
  const double case3 = q * p * mrc * (2.0 * p * q + p * p);
  const double case4 = p * q * p * (p + q * mrc);
  return case1 + case2 + case3 + case4;
}

double nc_four_case_sum(double p) {
  const double q = 1.0 - p;
  return q * q * 3.0 * p * p * p + p * p * (p * p / 2.0) + q * p * 2.0 * p * p * p + p * q * p * p;
}

double outage_scheme(const Scheme& scheme, const SystemParams& params, const AnalyticModel& model) {
  scheme.validate();
  params.validate();
  if (scheme.family == Family::GNC && scheme.k2 < 2) {
    throw std::invalid_argument("GNC outage approximation requires k2 >= 2");
  }
  const double p = per_link_outage(scheme, params, model);
  return std::clamp(combine(scheme, p, model.nc_form), 0.0, 1.0);
}

double log_outage_unclamped(const Scheme& scheme, const SystemParams& params, double alpha,
                            const AnalyticModel& model) {
  const double log_p = log_link_outage(scheme, params, fixed_share(alpha), model.link);
  return log_combine(scheme, log_p, model.nc_form);
}

double optimal_alpha_closed(double rate, const Scheme& scheme) {
  if (!(rate > 0.0)) throw std::invalid_argument("rate must be positive");
  const double rx = code_rate(scheme);
  return rx / (rate * kLn2 + rx);
}

double optimal_alpha_numeric(const Scheme& scheme, const SystemParams& params, const AnalyticModel& model) {
  require_energy_transfer(scheme, "optimal alpha");
  params.validate();
  const auto objective = [&](double a) { return log_outage_unclamped(scheme, params, a, model); };
  return golden_section_minimize(objective, 1e-4, 1.0 - 1e-4, 1e-7);
}

double diversity_order(const Scheme& scheme, const AnalyticModel& model) {
  return scheme_constants(scheme, 1.0, model).diversity;
}

double epsilon_outage_capacity(double epsilon, const SystemParams& params, const Scheme& scheme,
                               const AnalyticModel& model) {
  require_energy_transfer(scheme, "epsilon-outage capacity");
  require_probability(epsilon);
  const auto c = scheme_constants(scheme, params.eta, model);
  const double z = kLn2 * std::pow(epsilon / c.phi, 1.0 / c.diversity) * params.snr_linear();
  return lambert_w0(z) / kLn2 * code_rate(scheme);
}

double epsilon_outage_capacity_numeric(double epsilon, const SystemParams& params, const Scheme& scheme,
                                       const AnalyticModel& model) {
  require_probability(epsilon);
  const double target = std::log(epsilon);
  const auto excess = [&](double log_rate) {
    SystemParams p = params;
    p.rate = std::exp(log_rate);
    const TimeShare share = share_for(scheme, p, p.rate);
    return log_combine(scheme, log_link_outage(scheme, p, share, model.link), model.nc_form) - target;
  };
  double lo = std::log(1e-12);
  if (excess(lo) >= 0.0) return 0.0;
  double hi = 0.0;
  while (excess(hi) < 0.0) {
    hi += std::log(2.0);
    if (hi > std::log(1e4)) throw std::runtime_error("capacity search did not bracket");
  }
  return std::exp(bisect_root(excess, lo, hi, 1e-13));
}

double threshold_snr_db(double epsilon, const Scheme& scheme, ThresholdMode mode, double eta,
                        const AnalyticModel& model) {
  require_energy_transfer(scheme, "threshold SNR");
  require_probability(epsilon);
  if (std::fabs(code_rate(scheme) - 0.5) > 1e-12) {
    throw std::invalid_argument("threshold SNR requires code rate 1/2");
  }
  Scheme dt = Scheme::direct(true);
  dt.users = scheme.slot_users();
  const auto cx = scheme_constants(scheme, eta, model);
  const auto cd = scheme_constants(dt, eta, model);

  if (mode == ThresholdMode::LowerBound) {
    const double snr = std::pow(epsilon / cx.phi, 1.0 / cx.diversity) *
                       std::pow(epsilon / cd.phi, -2.0 / cd.diversity) / kLn2;
    return 10.0 * std::log10(snr);
  }

  SystemParams params;
  params.eta = eta;
  const auto advantage = [&](double snr_db) {
    params.snr_db = snr_db;
    if (mode == ThresholdMode::Numeric) {
      return epsilon_outage_capacity_numeric(epsilon, params, scheme, model) -
             epsilon_outage_capacity_numeric(epsilon, params, dt, model);
    }
    return epsilon_outage_capacity(epsilon, params, scheme, model) -
           epsilon_outage_capacity(epsilon, params, dt, model);
  };

  constexpr double step = 2.5;
  double lo = -20.0;
  double f_lo = advantage(lo);
  for (double hi = lo + step; hi <= 400.0; hi += step) {
    const double f_hi = advantage(hi);
    if (f_lo > 0.0 && f_hi <= 0.0) return bisect_root(advantage, lo, hi, 1e-4);
    lo = hi;
    f_lo = f_hi;
  }
  throw std::runtime_error("no capacity crossing found below 400 dB");
}

}  // namespace wpcoop
