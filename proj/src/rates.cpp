#include "spdc/rates.hpp"

#include "spdc/constants.hpp"
#include "spdc/error.hpp"
#include "spdc/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace spdc {

double SpdcConfig::omega_p() const { return omega_from_lambda(beam.lambda_p); }

double SpdcConfig::qpm_factor() const {
  if (!poling.enabled || d_eff_includes_qpm) return 1.0;
  return qpm_rate_factor(poling.order);
}

void validate(const SpdcConfig& cfg) {
  require(cfg.d_eff > 0.0, Err::NonPositiveInput, "d_eff must be > 0");
  require(cfg.length_z > 0.0, Err::NonPositiveInput, "L_z must be > 0");
  require(cfg.beam.lambda_p > 0.0, Err::NonPositiveInput, "lambda_p must be > 0");
  require(cfg.beam.power >= 0.0, Err::NonPositiveInput, "power must be >= 0");
  require(cfg.beam.sigma_p > 0.0 && cfg.beam.sigma_1 >= 0.0, Err::NonPositiveInput,
          "beam radii must be positive");
  require(cfg.n1 >= 1.0 && cfg.n2 >= 1.0 && cfg.np >= 1.0, Err::NonPositiveInput,
          "refractive indices must be >= 1");
  require(cfg.ng1 >= 1.0 && cfg.ng2 >= 1.0, Err::NonPositiveInput, "group indices must be >= 1");
  if (cfg.type == SpdcType::TypeII)
    require(cfg.delta_ng() > 0.0, Err::WrongRegime, "type-II needs a group-index mismatch");
  else if (cfg.degenerate)
    require(cfg.kappa > 0.0, Err::WrongRegime, "degenerate type-0/I needs kappa > 0");
  if (cfg.poling.enabled) require(cfg.poling.order >= 1, Err::NonPositiveInput,
                                  "poling order must be >= 1");
}

namespace {

RateResult make_result(const SpdcConfig& cfg, double pairs_per_second, RateRegime regime,
                       std::string provenance) {
  RateResult r;
  r.pairs_per_second = pairs_per_second;
  r.per_milliwatt = cfg.beam.power > 0.0 ? pairs_per_second * 1e-3 / cfg.beam.power : 0.0;
  r.regime = regime;
  r.provenance = std::move(provenance);
  return r;
}

void warn_if_focused(const SpdcConfig& cfg, RateResult& r) {
  const double zr = rayleigh_range(cfg.beam.sigma_p, cfg.beam.lambda_p);
  if (zr <= cfg.length_z)
    r.warnings.push_back("pump not collimated over the crystal (z_R <= L_z); "
                         "collimated formula is approximate here");
}

} // namespace

RateResult rate_sm_type01(const SpdcConfig& cfg) {
  validate(cfg);
  require(cfg.type == SpdcType::Type0 || cfg.type == SpdcType::TypeI, Err::WrongRegime,
          "rate_sm_type01 needs type-0 or type-I");
  require(cfg.degenerate, Err::WrongRegime, "rate_sm_type01 is the degenerate closed form");

  const double wp = cfg.omega_p();
  const double overlap = overlap_factor(cfg.beam.sigma_p, cfg.beam.sigma_1);
  const double nfac = cfg.ng1 * cfg.ng2 / (cfg.n1 * cfg.n1 * cfg.n2 * cfg.n2 * cfg.np);
  const double rate = std::sqrt(2.0 / (pi * pi * pi)) * 2.0 / (3.0 * eps0 * c_light * c_light * c_light) *
                      nfac * cfg.d_eff * cfg.d_eff * wp * wp / std::sqrt(cfg.kappa) * overlap *
                      cfg.beam.power / (cfg.beam.sigma_p * cfg.beam.sigma_p) *
                      std::pow(cfg.length_z, 1.5) * cfg.qpm_factor();

  RateResult r = make_result(cfg, rate, RateRegime::SingleMode, "closed form, type-0/I single-mode");
  warn_if_focused(cfg, r);
  return r;
}

RateResult rate_sm_type2(const SpdcConfig& cfg) {
  validate(cfg);
  require(cfg.type == SpdcType::TypeII, Err::WrongRegime, "rate_sm_type2 needs type-II");

  const double wp = cfg.omega_p();
  const double overlap = overlap_factor(cfg.beam.sigma_p, cfg.beam.sigma_1);
  const double nfac = cfg.ng1 * cfg.ng2 / (cfg.n1 * cfg.n1 * cfg.n2 * cfg.n2 * cfg.np);
  const double rate = 1.0 / (pi * eps0 * c_light * c_light) * nfac * cfg.d_eff * cfg.d_eff * wp *
                      wp / cfg.delta_ng() * overlap * cfg.beam.power /
                      (cfg.beam.sigma_p * cfg.beam.sigma_p) * cfg.length_z * cfg.qpm_factor();

  RateResult r = make_result(cfg, rate, RateRegime::SingleMode, "closed form, type-II single-mode");
  r.upper_bound = true; // over-estimates, typically by under seven percent
  if (cfg.delta_ng() < 1e-2)
    r.warnings.push_back("delta n_g below 1e-2: linear-mismatch approximation is marginal");
  warn_if_focused(cfg, r);
  return r;
}

double sm_rate_prefactor(const SpdcConfig& cfg) {
  // R_SM = prefactor * int dw1 w1 (wp - w1) Sinc^2(dk L/2), assembled from
  // |E_p|^2 = P/(eps0 c pi sigma_p^2 n_p), chi = 2 d_eff, and the k-to-omega
  // Jacobian n_g1 n_g2 / c^2.
  const double overlap = overlap_factor(cfg.beam.sigma_p, cfg.beam.sigma_1);
  return 2.0 * cfg.d_eff * cfg.d_eff * cfg.length_z * cfg.length_z * cfg.beam.power /
         (pi * pi * eps0 * std::pow(c_light, 3) * cfg.np * cfg.beam.sigma_p * cfg.beam.sigma_p) *
         (cfg.ng1 * cfg.ng2 / (cfg.n1 * cfg.n1 * cfg.n2 * cfg.n2)) * overlap * cfg.qpm_factor();
}

double sm_integrand(const SpdcConfig& cfg, double omega_1) {
  const double wp = cfg.omega_p();
  if (omega_1 <= 0.0 || omega_1 >= wp) return 0.0;
  const PhaseMatchExpansion ex =
      expansion_coeffs(cfg.ng1, cfg.ng2, cfg.kappa, cfg.kappa, cfg.degenerate, 0.5 * wp);
  const double x = omega_1 - 0.5 * wp;
  const double dk = ex.linear_coeff * x + ex.quadratic_coeff * x * x;
  return omega_1 * (wp - omega_1) * sinc2_weight(dk, cfg.length_z);
}

double natural_bandwidth(const SpdcConfig& cfg) {
  // Full width at half maximum of Sinc^2(dk L/2) in omega_1.
  const double half_arg = 1.39155737825151; // Sinc^2(x) = 1/2
  if (cfg.type == SpdcType::TypeII || cfg.delta_ng() > 0.0) {
    const double a = 0.5 * cfg.length_z * cfg.delta_ng() / c_light;
    return 2.0 * half_arg / a;
  }
  const double a = 0.5 * cfg.length_z * cfg.kappa;
  return 2.0 * std::sqrt(half_arg / a);
}

RateResult rate_sm_quadrature(const SpdcConfig& cfg) {
  validate(cfg);
  require(cfg.type == SpdcType::TypeII || cfg.degenerate, Err::WrongRegime,
          "quadrature oracle covers degenerate type-0/I and type-II");

  const double wp = cfg.omega_p();
  const double wc = 0.5 * wp;

  numerics::QuadratureOptions opt;
  opt.rel_tol = 1e-7;
  opt.max_intervals = 60000;

  double integral_value = 0.0;
  double integral_error = 0.0;

  if (cfg.delta_ng() > 0.0) {
    // Linear mismatch dominates: oscillation density is bounded, integrate
    // the full domain directly with breakpoints seeding the resonance.
    const double width = natural_bandwidth(cfg);
    std::vector<double> breaks;
    for (double f : {1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 256.0}) {
      breaks.push_back(wc - f * width);
      breaks.push_back(wc + f * width);
    }
    const auto res = numerics::integrate([&](double w1) { return sm_integrand(cfg, w1); }, 0.0,
                                         wp, opt, breaks);
    integral_value = res.value;
    integral_error = res.abs_error;
  } else {
    // Degenerate type-0/I: quadratic phase b x^2 with b = (L/2) kappa. The
    // integrand is even in x = w1 - wp/2; resolve the core numerically and
    // close the far Sinc^2 tail with its mean value 1/(2 b^2 x^4), whose
    // oscillatory remainder is negligible at this cut.
    const double b = 0.5 * cfg.length_z * cfg.kappa;
    const double x_half = std::sqrt(1.39155737825151 / b);
    const double x_cut = std::min(48.0 * x_half, wc);
    std::vector<double> breaks;
    for (double f = 1.0; f < 48.0; f *= 2.0) breaks.push_back(f * x_half);
    const auto core = numerics::integrate(
        [&](double x) {
          const double s = sinc(b * x * x);
          return (wc * wc - x * x) * s * s;
        },
        0.0, x_cut, opt, breaks);
    integral_value = 2.0 * core.value;
    integral_error = 2.0 * core.abs_error;
    if (x_cut < wc) {
      const double tail = (1.0 / (2.0 * b * b)) *
                          (2.0 / (3.0 * wc) + wc * wc / (3.0 * x_cut * x_cut * x_cut) -
                           1.0 / x_cut);
      integral_value += 2.0 * tail;
    }
  }

  if (integral_error > 1e-6 * std::abs(integral_value))
    fail(Err::QuadratureNonConvergent, "frequency integral did not reach 1e-6 relative error");

  const double rate = sm_rate_prefactor(cfg) * integral_value;
  return make_result(cfg, rate, RateRegime::SingleMode, "adaptive quadrature oracle");
}

MultimodeRatio multimode_ratio(double sigma_p, double length_z, double lambda_p, double np) {
  require(sigma_p > 0.0 && length_z > 0.0 && lambda_p > 0.0 && np > 0.0, Err::NonPositiveInput,
          "multimode_ratio needs positive inputs");
  const double a = length_z * lambda_p / (4.0 * pi * np);
  const double s2 = sigma_p * sigma_p;
  const double denom = s2 + std::sqrt(a * a + s2 * s2);
  MultimodeRatio r;
  r.exact = 4.0 * a * s2 / (denom * denom);
  r.thin_crystal_approx = a / s2;
  return r;
}

RateResult rate_total_type1(const SpdcConfig& cfg) {
  validate(cfg);
  require(cfg.type == SpdcType::Type0 || cfg.type == SpdcType::TypeI, Err::WrongRegime,
          "rate_total_type1 covers collinear type-0/I");
  require(cfg.phi_multimode > 0.0, Err::NonPositiveInput, "phi must be > 0");

  const double lam = cfg.beam.lambda_p;
  const double nfac = cfg.ng1 * cfg.ng2 / (cfg.n1 * cfg.n1 * cfg.n2 * cfg.n2);
  const double rate = 32.0 * std::sqrt(2.0 * pi * pi * pi) / (27.0 * eps0 * c_light) * nfac *
                      cfg.d_eff * cfg.d_eff / (lam * lam * lam * std::sqrt(cfg.kappa)) *
                      cfg.beam.power * std::sqrt(cfg.length_z) / cfg.phi_multimode *
                      cfg.qpm_factor();

  return make_result(cfg, rate, RateRegime::MultiModeTotal, "closed form, type-0/I total rate");
}

RateResult rate_narrowband_filtered(const SpdcConfig& cfg, double filter_bandwidth_rad_s) {
  validate(cfg);
  require(filter_bandwidth_rad_s > 0.0, Err::NonPositiveInput, "filter bandwidth must be > 0");
  const double natural = natural_bandwidth(cfg);
  require(filter_bandwidth_rad_s <= 0.1 * natural, Err::FilterTooWide,
          "filter bandwidth exceeds 10% of the phase-matching bandwidth");

  const double wp = cfg.omega_p();
  // Sinc^2 ~ 1 and w1(wp - w1) ~ wp^2/4 across the passband.
  const double rate = sm_rate_prefactor(cfg) * 0.25 * wp * wp * filter_bandwidth_rad_s;
  RateResult r = make_result(cfg, rate, RateRegime::NarrowFiltered, "narrowband filter closed form");
  if (filter_bandwidth_rad_s > 0.01 * natural)
    r.warnings.push_back("filter passband above 1% of the natural bandwidth; flat-integrand "
                         "approximation begins to degrade");
  return r;
}

double focused_relative_factor(double xi) {
  require(xi > 0.0, Err::NonPositiveInput, "focal parameter must be > 0");
  return std::atan(xi);
}

RateResult waveguide_rate(const SpdcConfig& cfg, double mfd_pump, double mfd_collect) {
  SpdcConfig wav = cfg;
  wav.beam.sigma_p = sigma_from_mfd(mfd_pump);
  wav.beam.sigma_1 = sigma_from_mfd(mfd_collect);
  RateResult r = cfg.type == SpdcType::TypeII ? rate_sm_type2(wav) : rate_sm_type01(wav);
  r.provenance += " (waveguide, sigma = MFD/4)";
  return r;
}

} // namespace spdc
