#include "wpcoop/analytic.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"

using namespace wpcoop;

namespace {

SystemParams at(double snr_db, double rate = 0.5) {
  SystemParams p;
  p.snr_db = snr_db;
  p.rate = rate;
  return p;
}

std::vector<Scheme> all_schemes() {
  std::vector<Scheme> out;
  for (bool et : {false, true}) {
    out.push_back(Scheme::direct(et));
    out.push_back(Scheme::decode_forward(et));
    out.push_back(Scheme::network_coded(et));
    out.push_back(Scheme::generalized(2, 2, 2, et));
  }
  return out;
}

double fitted_slope(const Scheme& s) {
  const double a = s.energy_transfer ? optimal_alpha_closed(0.5, s) : 0.5;
  const double lo = log_outage_unclamped(s, at(80.0), a);
  const double hi = log_outage_unclamped(s, at(120.0), a);
  return -(hi - lo) / std::log(1e4);
}

}  // namespace

TEST_CASE("link constants for a product of two exponentials") {
  const auto c = EtLinkConstants::for_product_of(2);
  CHECK(c.m0 == doctest::Approx(1.6467).epsilon(1e-12));
  CHECK(c.omega0 == doctest::Approx(1.5709).epsilon(5e-5));
  CHECK(c.n == 2);
}

TEST_CASE("code rates") {
  CHECK(code_rate(Scheme::direct()) == 1.0);
  CHECK(code_rate(Scheme::decode_forward()) == 0.5);
  CHECK(code_rate(Scheme::network_coded()) == 0.5);
  CHECK(code_rate(Scheme::generalized(2, 2, 2)) == 0.5);
  CHECK(code_rate(Scheme::generalized(3, 1, 2)) == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("scheme parsing and validation") {
  CHECK(parse_scheme("edf").family == Family::DF);
  CHECK(parse_scheme("edf").energy_transfer);
  CHECK_FALSE(parse_scheme("nc").energy_transfer);
  const auto g = parse_scheme("egnc", 3, 2, 4);
  CHECK(g.users == 3);
  CHECK(g.k2 == 4);
  CHECK(g.name() == "egnc");
  CHECK_THROWS_AS(parse_scheme("foo"), std::invalid_argument);
  CHECK_THROWS_AS(Scheme::generalized(0, 1, 1).validate(), std::invalid_argument);
}

TEST_CASE("battery link outage") {
  CHECK(outage_link(at(10.0), 1.0) == doctest::Approx(1.0 - std::exp(-0.1)).epsilon(1e-14));
  CHECK(outage_link(at(10.0), 1.0) == doctest::Approx(0.095163).epsilon(1e-5));
  CHECK(outage_link(at(300.0), 1.0) < 1e-29);
  CHECK(outage_link(at(10.0), 1e-300) == doctest::Approx(0.0));
}

TEST_CASE("energy-transfer link outage") {
  SystemParams p = at(30.0, 4.0);
  SUBCASE("gamma fit tracks the exact product CDF") {
    const double g = et_product_threshold(p, 0.15, 4.0);
    const double exact = oracle::product_cdf_quadrature(g);
    const double fit = outage_et_link(p, 0.15, 4.0);
    CHECK(std::fabs(fit - exact) / exact < 0.15);
  }
  SUBCASE("alpha close to one saturates") {
    CHECK(outage_et_link(p, 1.0 - 1e-12, 4.0) == doctest::Approx(1.0));
  }
  SUBCASE("zero rate never fails") {
    CHECK(outage_et_link(p, 0.5, 0.0) == 0.0);
  }
  SUBCASE("asymptotic form converges at high SNR") {
    p.snr_db = 120.0;
    CHECK(outage_et_link_asymptotic(p, 0.5, 1.0) ==
          doctest::Approx(outage_et_link(p, 0.5, 1.0)).epsilon(1e-3));
  }
}

TEST_CASE("scheme outage combinations") {
  CHECK(nc_four_case_sum(0.1) == doctest::Approx(0.00356).epsilon(1e-12));
  // Per-case conditionals: 3P^3 - 2P^4, P^2/2, (P^2/2)(2P - P^2), P(P + (1-P)P^2/2).
  const double p = 0.1, q = 0.9;
  const double by_hand = q * q * (3 * 1e-3 - 2 * 1e-4) + p * p * 0.005 + q * p * 0.005 * (0.2 - 0.01) +
                         p * q * p * (p + q * 0.005);
  CHECK(nc_exact_polynomial(0.1) == doctest::Approx(by_hand).epsilon(1e-14));
  CHECK(nc_exact_polynomial(1e-4) / (4e-12) == doctest::Approx(1.0).epsilon(0.01));

  AnalyticModel lead;
  lead.nc_form = NcForm::LeadingTerm;
  for (double snr : {20.0, 40.0}) {
    const auto params = at(snr);
    const double pl = per_link_outage(Scheme::network_coded(), params);
    CHECK(outage_scheme(Scheme::network_coded(), params, lead) == doctest::Approx(4 * pl * pl * pl));
    const double pd = per_link_outage(Scheme::decode_forward(), params);
    CHECK(outage_scheme(Scheme::decode_forward(), params) == doctest::Approx(1.5 * pd * pd));
    const auto gnc = Scheme::generalized(2, 2, 2);
    const double pg = per_link_outage(gnc, params);
    CHECK(outage_scheme(gnc, params) == doctest::Approx(3 * std::pow(pg, 4)));
  }
  CHECK_THROWS_AS(outage_scheme(Scheme::generalized(2, 2, 1), at(20.0)), std::invalid_argument);
}

TEST_CASE("outage is a clamped probability, monotone in snr and rate") {
  for (const auto& s : all_schemes()) {
    CAPTURE(s.name());
    double prev = 2.0;
    for (double snr = -20.0; snr <= 160.0; snr += 2.5) {
      const double po = outage_scheme(s, at(snr));
      CHECK(po >= 0.0);
      CHECK(po <= 1.0);
      CHECK(po <= prev);
      prev = po;
    }
    double last = -1.0;
    for (double r = 0.25; r <= 8.0; r += 0.25) {
      const double po = outage_scheme(s, at(40.0, r));
      CHECK(po >= last);
      last = po;
    }
  }
}

TEST_CASE("optimal alpha") {
  CHECK(optimal_alpha_closed(4.0, Scheme::generalized(2, 2, 2)) == doctest::Approx(0.15279).epsilon(1e-4));
  CHECK(optimal_alpha_closed(1.0, Scheme::direct()) ==
        doctest::Approx(1.0 / (std::numbers::ln2 + 1.0)).epsilon(1e-14));
  CHECK(optimal_alpha_closed(1e12, Scheme::direct()) < 1e-11);

  SUBCASE("closed form ignores snr and eta") {
    SystemParams a = at(10.0, 3.0), b = at(90.0, 3.0);
    b.eta = 0.3;
    const auto s = Scheme::decode_forward();
    CHECK(resolve_alpha(s, a) == resolve_alpha(s, b));
  }
  SUBCASE("numeric optimum is a local minimum; the closed form improves with rate") {
    for (const auto& s : {Scheme::direct(), Scheme::decode_forward(), Scheme::network_coded()}) {
      CAPTURE(s.name());
      for (double r = 2.0; r <= 8.0; r += 0.5) {
        const auto p = at(60.0, r);
        const double a = optimal_alpha_numeric(s, p);
        const double f = log_outage_unclamped(s, p, a);
        CHECK(log_outage_unclamped(s, p, std::max(a - 0.05, 1e-4)) >= f);
        CHECK(log_outage_unclamped(s, p, std::min(a + 0.05, 1 - 1e-4)) >= f);
      }
      const double gap_low = std::fabs(optimal_alpha_numeric(s, at(60.0, 0.5)) - optimal_alpha_closed(0.5, s));
      const double gap_high = std::fabs(optimal_alpha_numeric(s, at(60.0, 8.0)) - optimal_alpha_closed(8.0, s));
      CHECK(gap_low > gap_high);
    }
  }
}

TEST_CASE("diversity orders and fitted slopes") {
  CHECK(diversity_order(Scheme::direct()) == doctest::Approx(0.82335).epsilon(1e-9));
  CHECK(diversity_order(Scheme::network_coded()) == doctest::Approx(2.47005).epsilon(1e-9));
  CHECK(diversity_order(Scheme::generalized(4, 2, 2, false)) == 6.0);
  for (const auto& s : all_schemes()) {
    CAPTURE(s.name());
    CHECK(fitted_slope(s) == doctest::Approx(diversity_order(s)).epsilon(0.05));
  }
  for (unsigned m : {3u, 4u}) {
    const auto s = Scheme::generalized(m, 2, 2);
    CHECK(fitted_slope(s) == doctest::Approx((m + 2) * 1.6467 / 2).epsilon(0.05));
  }
}

TEST_CASE("epsilon-outage capacity") {
  const auto edf = Scheme::decode_forward();
  CHECK(epsilon_outage_capacity(1e-3, at(60.0), edf) > epsilon_outage_capacity(1e-3, at(40.0), edf));

  SUBCASE("closed form inverts the asymptotic outage") {
    for (const auto& s : {Scheme::direct(), edf, Scheme::network_coded(), Scheme::generalized(2, 2, 2)}) {
      CAPTURE(s.name());
      const double r = epsilon_outage_capacity(1e-3, at(50.0), s);
      SystemParams p = at(50.0, r);
      const double alpha = optimal_alpha_closed(r, s);
      const double link = outage_et_link_asymptotic(p, alpha, r / code_rate(s), s.slot_users());
      const auto c = scheme_constants(s);
      CHECK(c.code_gain * std::pow(link, c.outage_exponent) == doctest::Approx(1e-3).epsilon(0.2));
    }
  }
  SUBCASE("numeric capacity hits epsilon exactly") {
    const double r = epsilon_outage_capacity_numeric(1e-3, at(50.0), edf);
    CHECK(outage_scheme(edf, at(50.0, r)) == doctest::Approx(1e-3).epsilon(1e-6));
  }
  SUBCASE("cooperation wins at low snr, direct at high snr") {
    CHECK(epsilon_outage_capacity(1e-3, at(40.0), edf) > epsilon_outage_capacity(1e-3, at(40.0), Scheme::direct()));
    CHECK(epsilon_outage_capacity(1e-3, at(90.0), edf) < epsilon_outage_capacity(1e-3, at(90.0), Scheme::direct()));
  }
  CHECK_THROWS_AS(epsilon_outage_capacity(0.0, at(40.0), edf), std::invalid_argument);
}

TEST_CASE("threshold snr") {
  struct Cell {
    double eps;
    Scheme scheme;
    double num;
    double lb;
  };
  const Cell cells[] = {
      {1e-3, Scheme::decode_forward(), 61.9, 59.3},        {1e-3, Scheme::network_coded(), 68.4, 64.0},
      {1e-3, Scheme::generalized(2, 2, 2), 73.8, 68.0},    {1e-5, Scheme::decode_forward(), 100.7, 95.7},
      {1e-5, Scheme::network_coded(), 110.9, 104.5},       {1e-5, Scheme::generalized(2, 2, 2), 118.0, 110.5},
      {1e-7, Scheme::decode_forward(), 138.7, 132.2},      {1e-7, Scheme::network_coded(), 152.8, 145.0},
      {1e-7, Scheme::generalized(2, 2, 2), 161.7, 153.0},
  };
  for (const auto& c : cells) {
    CAPTURE(c.eps);
    CAPTURE(c.scheme.name());
    const double num = threshold_snr_db(c.eps, c.scheme, ThresholdMode::Numeric);
    const double lb = threshold_snr_db(c.eps, c.scheme, ThresholdMode::LowerBound);
    CHECK(std::fabs(num - c.num) <= 0.5);
    CHECK(std::fabs(lb - c.lb) <= 0.2);
    CHECK(lb < num);
  }
  CHECK_THROWS_AS(threshold_snr_db(1e-3, Scheme::generalized(2, 1, 2), ThresholdMode::Numeric),
                  std::invalid_argument);
  CHECK_THROWS_AS(threshold_snr_db(1e-3, Scheme::decode_forward(false), ThresholdMode::Numeric),
                  std::invalid_argument);
}
