#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spdc/error.hpp"
#include "spdc/experiments.hpp"
#include "spdc/rates.hpp"

#include <cmath>

using namespace spdc;

namespace {

SpdcConfig ppln() { return experiments::make_config(experiments::ppln_type0().input); }
SpdcConfig bibo() { return experiments::make_config(experiments::bibo_type1().input); }
SpdcConfig ppktp() { return experiments::make_config(experiments::ppktp_type2().input); }

double log_slope(double (*eval)(const SpdcConfig&), SpdcConfig cfg, double lo, double hi) {
  cfg.length_z = lo;
  const double r_lo = eval(cfg);
  cfg.length_z = hi;
  const double r_hi = eval(cfg);
  return std::log(r_hi / r_lo) / std::log(hi / lo);
}

double eval_t01(const SpdcConfig& c) { return rate_sm_type01(c).pairs_per_second; }
double eval_t2(const SpdcConfig& c) { return rate_sm_type2(c).pairs_per_second; }
double eval_total(const SpdcConfig& c) { return rate_total_type1(c).pairs_per_second; }
double eval_filtered(const SpdcConfig& c) {
  // fixed passband, well inside the natural bandwidth at every length used
  SpdcConfig wide = c;
  wide.length_z = 0.1;
  return rate_narrowband_filtered(c, natural_bandwidth(wide) * 1e-4).pairs_per_second;
}

} // namespace

TEST_CASE("table reproduction: type-0 PPLN single mode") {
  const RateResult r = rate_sm_type01(ppln());
  CHECK(r.per_milliwatt == doctest::Approx(94.86e6).epsilon(0.005));
  CHECK(r.regime == RateRegime::SingleMode);
}

TEST_CASE("table reproduction: type-I BiBO total rate") {
  const RateResult r = rate_total_type1(bibo());
  CHECK(r.per_milliwatt == doctest::Approx(53.87e6).epsilon(0.01));
  CHECK(r.regime == RateRegime::MultiModeTotal);
}

TEST_CASE("table reproduction: type-II PPKTP single mode") {
  const RateResult r = rate_sm_type2(ppktp());
  CHECK(r.per_milliwatt == doctest::Approx(23.58e6).epsilon(0.01));
  CHECK(r.upper_bound);
}

TEST_CASE("zero power gives zero rate") {
  for (SpdcConfig cfg : {ppln(), ppktp()}) {
    cfg.beam.power = 0.0;
    const RateResult r =
        cfg.type == SpdcType::TypeII ? rate_sm_type2(cfg) : rate_sm_type01(cfg);
    CHECK(r.pairs_per_second == 0.0);
  }
  SpdcConfig cfg = bibo();
  cfg.beam.power = 0.0;
  CHECK(rate_total_type1(cfg).pairs_per_second == 0.0);
}

TEST_CASE("linearity in P and d_eff^2") {
  SpdcConfig cfg = ppln();
  const double base = eval_t01(cfg);
  cfg.beam.power *= 2.0;
  CHECK(eval_t01(cfg) == doctest::Approx(2.0 * base).epsilon(1e-12));
  cfg = ppln();
  cfg.d_eff *= 2.0;
  CHECK(eval_t01(cfg) == doctest::Approx(4.0 * base).epsilon(1e-12));
}

TEST_CASE("length scaling exponents by log slope") {
  // L^{3/2}, L, L^{1/2}, L^2 per regime
  CHECK(log_slope(eval_t01, ppln(), 10e-3, 100e-3) == doctest::Approx(1.5).epsilon(1e-6));
  CHECK(log_slope(eval_t2, ppktp(), 5e-3, 50e-3) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(log_slope(eval_total, bibo(), 0.5e-3, 5e-3) == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(log_slope(eval_filtered, ppln(), 10e-3, 100e-3) == doctest::Approx(2.0).epsilon(1e-6));

  // doubling L multiplies the type-0/I rate by 2^{3/2}; quadrupling L
  // doubles the total rate
  SpdcConfig cfg = ppln();
  const double r1 = eval_t01(cfg);
  cfg.length_z *= 2.0;
  CHECK(eval_t01(cfg) == doctest::Approx(r1 * std::pow(2.0, 1.5)).epsilon(1e-12));
  SpdcConfig tote = bibo();
  const double rt = eval_total(tote);
  tote.length_z *= 4.0;
  CHECK(eval_total(tote) == doctest::Approx(2.0 * rt).epsilon(1e-12));
}

TEST_CASE("type-II halving the group mismatch doubles the rate") {
  SpdcConfig cfg = ppktp();
  const double base = eval_t2(cfg);
  const double mid = 0.5 * (cfg.ng1 + cfg.ng2);
  cfg.ng1 = mid - 0.0125;
  cfg.ng2 = mid + 0.0125; // delta_ng halves while ng1 ng2 shifts only ~1e-4
  CHECK(eval_t2(cfg) == doctest::Approx(2.0 * base).epsilon(1e-3));
}

TEST_CASE("QPM factor application") {
  SpdcConfig cfg = ppln();
  cfg.poling.enabled = false;
  const double unpoled = eval_t01(cfg);
  cfg.poling.enabled = true;
  cfg.poling.order = 1;
  CHECK(eval_t01(cfg) == doctest::Approx(unpoled * 4.0 / (M_PI * M_PI)).epsilon(1e-14));

  // a published d_eff that already folds in 2/(n pi) must not be corrected twice
  cfg.d_eff_includes_qpm = true;
  CHECK(eval_t01(cfg) == doctest::Approx(unpoled).epsilon(1e-14));

  cfg.d_eff_includes_qpm = false;
  cfg.poling.order = 2;
  CHECK_THROWS_AS(eval_t01(cfg), Error); // even order: misconfiguration
}

TEST_CASE("wrong-regime guards") {
  SpdcConfig cfg = ppln();
  cfg.type = SpdcType::TypeII;
  CHECK_THROWS_AS(rate_sm_type01(cfg), Error); // type mismatch
  cfg = ppktp();
  cfg.type = SpdcType::Type0;
  CHECK_THROWS_AS(rate_sm_type2(cfg), Error);
  cfg = ppln();
  cfg.degenerate = false;
  CHECK_THROWS_AS(rate_sm_type01(cfg), Error);
}

TEST_CASE("quadrature oracle brackets the closed forms") {
  // degenerate type-0/I: closed form within 1% of the integral
  const RateResult closed = rate_sm_type01(ppln());
  const RateResult oracle = rate_sm_quadrature(ppln());
  const double ratio = closed.pairs_per_second / oracle.pairs_per_second;
  CHECK(ratio > 0.99);
  CHECK(ratio < 1.01);

  // BiBO parameters through the same single-mode forms (beam radii arbitrary)
  SpdcConfig b = bibo();
  b.beam.sigma_p = 0.4e-3;
  b.beam.sigma_1 = 0.4e-3;
  const double ratio_b =
      rate_sm_type01(b).pairs_per_second / rate_sm_quadrature(b).pairs_per_second;
  CHECK(ratio_b > 0.99);
  CHECK(ratio_b < 1.01);

  // type-II: closed form is an upper bound, over-estimating by <= 7%
  const RateResult closed2 = rate_sm_type2(ppktp());
  const RateResult oracle2 = rate_sm_quadrature(ppktp());
  const double ratio2 = closed2.pairs_per_second / oracle2.pairs_per_second;
  CHECK(ratio2 >= 1.0);
  CHECK(ratio2 <= 1.07);
}

TEST_CASE("quadrature oracle is stable across a parameter grid") {
  // type-0/I: the closed form drops a -6 term against L kappa wp^2, so its
  // excess over the integral must track 1/(1 - 6/x); within the stated
  // validity regime (x large) that lands inside the 1% band
  for (double L : {1e-3, 10e-3, 100e-3}) {
    for (double kappa : {5e-26, 1e-25, 3e-25}) {
      SpdcConfig cfg = ppln();
      cfg.length_z = L;
      cfg.kappa = kappa;
      const double wp = cfg.omega_p();
      const double x = L * kappa * wp * wp;
      const double ratio =
          rate_sm_type01(cfg).pairs_per_second / rate_sm_quadrature(cfg).pairs_per_second;
      CHECK(ratio == doctest::Approx(1.0 / (1.0 - 6.0 / x)).epsilon(0.005));
      if (x > 600.0) {
        CHECK(ratio > 0.99);
        CHECK(ratio < 1.01);
      }
    }
  }
  // type-II: bounded above, within 7%, across group-index mismatches
  for (double dng : {0.01, 0.05, 0.2}) {
    SpdcConfig cfg = ppktp();
    const double mid = 0.5 * (cfg.ng1 + cfg.ng2);
    cfg.ng1 = mid - 0.5 * dng;
    cfg.ng2 = mid + 0.5 * dng;
    const double ratio =
        rate_sm_type2(cfg).pairs_per_second / rate_sm_quadrature(cfg).pairs_per_second;
    CHECK(ratio >= 1.0);
    CHECK(ratio <= 1.07);
  }
}

TEST_CASE("integrand peaks at degeneracy") {
  const SpdcConfig cfg = ppln();
  const double wp = cfg.omega_p();
  CHECK(sm_integrand(cfg, 0.5 * wp) == doctest::Approx(0.25 * wp * wp).epsilon(1e-12));
  CHECK(sm_integrand(cfg, 0.0) == 0.0);
  CHECK(sm_integrand(cfg, wp) == 0.0);
}

TEST_CASE("multimode ratio") {
  // a = sigma_p^2: exact value 4/(1+sqrt 2)^2
  const double sp = 30e-6;
  const double a_target = sp * sp;
  // choose L so that a = L lambda /(4 pi n) = sp^2
  const double lam = 405e-9, np = 1.822;
  const double L = a_target * 4.0 * M_PI * np / lam;
  const MultimodeRatio r = multimode_ratio(sp, L, lam, np);
  CHECK(r.exact == doctest::Approx(4.0 / ((1.0 + std::sqrt(2.0)) * (1.0 + std::sqrt(2.0))))
                       .epsilon(1e-12));

  // thin-crystal regime: approximation within 1%
  const MultimodeRatio thin = multimode_ratio(0.4e-3, 1e-3, 405e-9, 1.822);
  CHECK(thin.exact == doctest::Approx(thin.thin_crystal_approx).epsilon(0.01));

  // a -> 0 gives ratio -> 0
  const MultimodeRatio tiny = multimode_ratio(0.4e-3, 1e-9, 405e-9, 1.822);
  CHECK(tiny.exact < 1e-6);

  CHECK_THROWS_AS(multimode_ratio(0.0, 1e-3, 405e-9, 1.822), Error);
}

TEST_CASE("total rate exceeds the single-mode rate for matched configs") {
  // sigma_1 = sigma_p over a grid of table-like parameters
  for (double sp : {50e-6, 200e-6, 800e-6}) {
    for (double L : {1e-3, 10e-3, 40e-3}) {
      SpdcConfig cfg = bibo();
      cfg.type = SpdcType::TypeI;
      cfg.beam.sigma_p = sp;
      cfg.beam.sigma_1 = sp;
      cfg.length_z = L;
      CHECK(rate_total_type1(cfg).pairs_per_second >
            rate_sm_type01(cfg).pairs_per_second);
    }
  }
}

TEST_CASE("narrowband filter behaviour") {
  const SpdcConfig cfg = ppln();
  const double natural = natural_bandwidth(cfg);
  const double bw = 1e-4 * natural;
  const double base = rate_narrowband_filtered(cfg, bw).pairs_per_second;
  // doubling the passband doubles the rate
  CHECK(rate_narrowband_filtered(cfg, 2.0 * bw).pairs_per_second ==
        doctest::Approx(2.0 * base).epsilon(1e-12));
  // doubling L quadruples (checked by the slope suite); the filtered rate is
  // independent of kappa
  SpdcConfig k2 = cfg;
  k2.kappa *= 3.0;
  CHECK(rate_narrowband_filtered(k2, bw).pairs_per_second == doctest::Approx(base).epsilon(1e-12));
  // filtered < unfiltered for any valid bandwidth
  CHECK(base < rate_sm_quadrature(cfg).pairs_per_second);
  // too-wide filter rejected
  CHECK_THROWS_AS(rate_narrowband_filtered(cfg, 0.5 * natural), Error);
}

TEST_CASE("focused relative factor") {
  CHECK(focused_relative_factor(1.0) == doctest::Approx(M_PI / 4.0).epsilon(1e-12));
  CHECK(focused_relative_factor(1e-6) / 1e-6 == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(focused_relative_factor(1e9) == doctest::Approx(M_PI / 2.0).epsilon(1e-6));
  CHECK_THROWS_AS(focused_relative_factor(-1.0), Error);
}

TEST_CASE("waveguide rate dispatch") {
  // PPKTP mode-field diameters reproduce the table benchmark
  SpdcConfig cfg = ppktp();
  const RateResult direct = rate_sm_type2(cfg);
  const RateResult wav = waveguide_rate(cfg, 3.5e-6, 7.5e-6); // sigma 0.875 / 1.875 um
  CHECK(wav.pairs_per_second == doctest::Approx(direct.pairs_per_second).epsilon(1e-12));

  // identity with the bulk call when the radii already match
  SpdcConfig t0 = ppln();
  const RateResult wav0 = waveguide_rate(t0, 4.0 * t0.beam.sigma_p, 4.0 * t0.beam.sigma_1);
  CHECK(wav0.pairs_per_second == doctest::Approx(rate_sm_type01(t0).pairs_per_second).epsilon(1e-12));
}
