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

#include "wpcoop/validation.hpp"

#include <cmath>
#include <algorithm>

#include "wpcoop/galois.hpp"
#include "wpcoop/montecarlo.hpp"
#include "wpcoop/specfun.hpp"

namespace wpcoop {
namespace {

CheckResult within(std::string name, double measured, double expected, double tolerance) {
  const bool pass = std::fabs(measured - expected) <= tolerance;
  return {std::move(name), measured, expected, tolerance, pass};
}

double field_axiom_violations(const GaloisField& f) {
  const unsigned q = f.order();
  double bad = 0;
  for (unsigned a = 0; a < q; ++a) {
    if (a != 0 && f.mul(static_cast<GfElement>(a), f.inv(static_cast<GfElement>(a))) != 1) ++bad;
    for (unsigned b = 0; b < q; ++b) {
      const auto x = static_cast<GfElement>(a), y = static_cast<GfElement>(b);
      if (f.mul(x, y) != f.mul(y, x)) ++bad;
      for (unsigned c = 0; c < q; ++c) {
        const auto z = static_cast<GfElement>(c);
        if (f.mul(f.mul(x, y), z) != f.mul(x, f.mul(y, z))) ++bad;
        if (f.mul(x, GaloisField::add(y, z)) != GaloisField::add(f.mul(x, y), f.mul(x, z))) ++bad;
      }
    }
  }
  return bad;
}

// Square column submatrices of the generator that are singular.
double singular_submatrices(std::size_t k, std::size_t n, const GaloisField& f) {
  const GfMatrix g = mds_generator(k, n, f);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  double bad = 0;
  do {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j) {
      if (pick[j]) cols.push_back(j);
    }
    if (rank(g.select_columns(cols), f) != k) ++bad;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return bad;
}

double slope(const Scheme& scheme, const AnalyticModel& model) {
  SystemParams lo, hi;
  lo.snr_db = 80.0;
  hi.snr_db = 120.0;
  lo.rate = hi.rate = 0.5;
  const double a = optimal_alpha_closed(0.5, scheme);
  return -(log_outage_unclamped(scheme, hi, a, model) - log_outage_unclamped(scheme, lo, a, model)) /
         std::log(1e4);
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  std::vector<CheckResult> out;
  const AnalyticModel& model = options.model;

  out.push_back(within("specfun.gamma_p(1,ln2)", regularized_lower_gamma(1.0, std::log(2.0)), 0.5, 1e-14));
  out.push_back(within("specfun.lambert_w0(1)", lambert_w0(1.0), 0.5671432904097838, 1e-14));
  out.push_back(within("specfun.binomial(10,3)", static_cast<double>(binomial(10, 3)), 120.0, 0.0));

  out.push_back(within("galois.gf16_axiom_violations", field_axiom_violations(GaloisField(FieldSpec::with_degree(4))),
                       0.0, 0.0));
  const GaloisField gf256;
  out.push_back(within("galois.mds_2_4_singular", singular_submatrices(2, 4, GaloisField(FieldSpec::with_degree(2))),
                       0.0, 0.0));
  out.push_back(within("galois.mds_2_6_singular", singular_submatrices(2, 6, gf256), 0.0, 0.0));
  out.push_back(within("galois.mds_4_8_singular", singular_submatrices(4, 8, gf256), 0.0, 0.0));

  out.push_back(within("analytic.m0", model.link.m0, 1.6467, 5e-5));
  out.push_back(within("analytic.omega0", model.link.omega0, 1.5709, 5e-5));

  const double k1 = std::cyl_bessel_k(1.0, 2.0);
  out.push_back(within("montecarlo.product_cdf(1)", product_exp_cdf_exact(1.0), 1.0 - 2.0 * k1, 1e-10));

  {
    SystemParams p;
    p.snr_db = 10.0;
    p.rate = 1.0;
    const auto est = estimate_outage(Scheme::direct(false), p, options.trials, options.seed);
    const double exact = outage_link(p, 1.0);
    out.push_back(within("montecarlo.dt_battery_10dB", est.p_hat, exact, 3.0 * est.ci_halfwidth_95));
  }
  {
    SystemParams p;
    p.snr_db = 10.0;
    p.rate = 1.0;
    p.alpha = 0.5;
    const auto est = estimate_outage(Scheme::direct(true), p, options.trials, options.seed);
    const double exact = product_exp_cdf_exact(et_product_threshold(p, 0.5, 1.0, 2));
    out.push_back(within("montecarlo.et_link_10dB", est.p_hat, exact, 3.0 * est.ci_halfwidth_95));
  }

  const double m0 = 0.6102 * 2 + 0.4263;
  const struct {
    const char* name;
    Scheme scheme;
    double expected;
  } slopes[] = {
      {"analytic.slope_edt", Scheme::direct(), m0 / 2},
      {"analytic.slope_edf", Scheme::decode_forward(), m0},
      {"analytic.slope_enc", Scheme::network_coded(), 1.5 * m0},
      {"analytic.slope_egnc_2_2_2", Scheme::generalized(2, 2, 2), 2.0 * m0},
  };
  for (const auto& s : slopes) {
    out.push_back(within(s.name, slope(s.scheme, model), s.expected, 0.05 * s.expected));
  }

  out.push_back(within("analytic.threshold_edf_1e-3_numeric",
                       threshold_snr_db(1e-3, Scheme::decode_forward(), ThresholdMode::Numeric, 1.0, model), 61.9,
                       0.5));
  out.push_back(within("analytic.threshold_edf_1e-3_lower_bound",
                       threshold_snr_db(1e-3, Scheme::decode_forward(), ThresholdMode::LowerBound, 1.0, model),
                       59.3, 0.2));
  return out;
}

}  // namespace wpcoop
