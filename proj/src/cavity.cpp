#include "spdc/cavity.hpp"

#include "spdc/constants.hpp"
#include "spdc/error.hpp"
#include "spdc/numerics/fft.hpp"

#include <algorithm>
#include <cmath>

namespace spdc {

using numerics::Mat2;

double RingConfig::alpha() const { return std::exp(-0.5 * gamma * length); }
double RingConfig::t_dc() const { return n_g * length / c_light; }

void RingConfig::check() const {
  const double norm = std::norm(rho) + std::norm(tau);
  require(std::abs(norm - 1.0) <= 1e-10, Err::ConfigError,
          "coupler must satisfy |rho|^2 + |tau|^2 = 1 within 1e-10");
  require(gamma >= 0.0, Err::NonPositiveInput, "Gamma must be >= 0");
  require(length > 0.0, Err::NonPositiveInput, "ring circumference must be > 0");
  require(n_g >= 1.0, Err::NonPositiveInput, "group index must be >= 1");
  require(r >= 0.0, Err::NonPositiveInput, "per-pass squeezing must be >= 0");
}

RingConfig make_ring(double rho_mag, double gamma, double length, double n_g, double theta_p,
                     double buildup_b, double r) {
  require(rho_mag >= 0.0 && rho_mag <= 1.0, Err::ConfigError, "|rho| must lie in [0, 1]");
  RingConfig cfg;
  cfg.rho = rho_mag;
  cfg.tau = std::sqrt(std::max(0.0, 1.0 - rho_mag * rho_mag));
  cfg.gamma = gamma;
  cfg.length = length;
  cfg.n_g = n_g;
  cfg.theta_p = theta_p;
  cfg.buildup_b = buildup_b;
  cfg.r = r;
  cfg.check();
  return cfg;
}

double chain_transmission(double gamma, double length, long n_splitters) {
  require(gamma >= 0.0 && length > 0.0, Err::NonPositiveInput,
          "chain_transmission needs Gamma >= 0 and L > 0");
  require(n_splitters >= 1, Err::NonPositiveInput, "need at least one splitter");
  const double step = gamma * length / static_cast<double>(n_splitters);
  require(step < 1.0, Err::OverLossyStep,
          "Gamma L / N >= 1: single-splitter loss exceeds unity");
  return std::pow(1.0 - step, static_cast<double>(n_splitters));
}

RingTransfer ring_transfer(const RingConfig& cfg, double theta) {
  cfg.check();
  const double a = cfg.alpha();
  require(std::abs(cfg.rho) * a < 1.0, Err::DivergentSeries,
          "|rho alpha| >= 1: circulating sum does not converge");
  const cplx phase = std::polar(a, theta);
  const cplx g = (cfg.rho - phase) / (1.0 - std::conj(cfg.rho) * phase);
  RingTransfer t;
  t.g = g;
  t.h = std::sqrt(std::max(0.0, 1.0 - std::norm(g)));
  return t;
}

cplx ring_transfer_trajectory_sum(const RingConfig& cfg, double theta, int n_terms) {
  cfg.check();
  require(n_terms >= 1, Err::NonPositiveInput, "need at least one trajectory term");
  const double a = cfg.alpha();
  require(std::abs(cfg.rho) * a < 1.0, Err::DivergentSeries,
          "|rho alpha| >= 1: circulating sum does not converge");
  const cplx phase = std::polar(a, theta);
  // a_out = rho a_in - |tau|^2 alpha e^{i theta} sum_n (rho* alpha e^{i theta})^n
  cplx sum = 0.0;
  cplx term = 1.0;
  const cplx ratio = std::conj(cfg.rho) * phase;
  for (int n = 0; n < n_terms; ++n) {
    sum += term;
    term *= ratio;
  }
  return cfg.rho - std::norm(cfg.tau) * phase * sum;
}

double coupling_g_spdc(double chi2_eff, double ng1, double ng2, double n1, double n2, double np,
                       double omega_p, double v_ring) {
  require(chi2_eff >= 0.0, Err::NonPositiveInput, "chi2 must be >= 0");
  require(ng1 > 0.0 && ng2 > 0.0 && n1 > 0.0 && n2 > 0.0 && np > 0.0, Err::NonPositiveInput,
          "indices must be positive");
  require(omega_p > 0.0 && v_ring > 0.0, Err::NonPositiveInput,
          "omega_p and ring volume must be positive");
  const double hw = hbar * omega_p;
  return 32.0 * chi2_eff / (9.0 * pi * pi * pi * c_light) *
         std::sqrt(ng1 * ng2 / (n1 * n1 * n2 * n2 * np * np)) *
         std::sqrt(hw * hw * hw / (2.0 * eps0 * v_ring));
}

double coupling_g_sfwm(double chi3_eff, double ng1, double ng2, double n1, double n2, double np,
                       double omega_p, double v_ring) {
  require(chi3_eff >= 0.0, Err::NonPositiveInput, "chi3 must be >= 0");
  require(ng1 > 0.0 && ng2 > 0.0 && n1 > 0.0 && n2 > 0.0 && np > 0.0, Err::NonPositiveInput,
          "indices must be positive");
  require(omega_p > 0.0 && v_ring > 0.0, Err::NonPositiveInput,
          "omega_p and ring volume must be positive");
  const double hw = hbar * omega_p;
  return 27.0 * chi3_eff / (16.0 * pi * c_light) *
         std::sqrt(ng1 * ng2 / (n1 * n1 * n2 * n2 * np * np * np * np)) * hw * hw /
         (eps0 * v_ring);
}

SqueezeStep internal_squeeze_step(const RingConfig& cfg, double theta) {
  cfg.check();
  const double a = cfg.alpha();
  const cplx phase = std::polar(a, theta);
  const double ch = std::cosh(cfg.r);
  const double sh = std::sinh(cfg.r);
  const cplx ep = std::polar(1.0, cfg.theta_p);
  SqueezeStep s;
  s.propagation = Mat2{ch, -ep * sh, -std::conj(ep) * sh, ch} * phase;
  const double b = std::sqrt(std::max(0.0, 1.0 - a * a));
  s.noise = Mat2{b, 0.0, 0.0, b};
  return s;
}

numerics::Mat2 propagation_matrix_general(double gamma_a, double gamma_b, double n_g, double nu,
                                          double gain_r, double theta_p, double length) {
  require(gamma_a >= 0.0 && gamma_b >= 0.0, Err::NonPositiveInput, "losses must be >= 0");
  require(length > 0.0 && n_g >= 1.0, Err::NonPositiveInput, "need L > 0 and n_g >= 1");
  // M L with r = (n_g/c) |g| L |alpha_p| * L folded into gain_r (per pass).
  const cplx i(0.0, 1.0);
  const double theta = n_g * nu * length / c_light;
  const cplx ep = std::polar(1.0, theta_p);
  Mat2 ml;
  ml.a = i * theta - 0.5 * gamma_a * length;
  ml.d = i * theta - 0.5 * gamma_b * length;
  ml.b = -gain_r * ep;
  ml.c = -gain_r * std::conj(ep);
  return numerics::expm(ml);
}

OutputMatrices output_matrices(const RingConfig& cfg, double nu) {
  cfg.check();
  const double a = cfg.alpha();
  const double theta = nu * cfg.t_dc();
  const cplx phase = std::polar(a, theta);
  const double ch = std::cosh(cfg.r);
  const double sh = std::sinh(cfg.r);
  const cplx ep = std::polar(1.0, cfg.theta_p);

  const cplx script_d = phase * phase + cfg.rho * cfg.rho - 2.0 * phase * cfg.rho * ch;
  require(std::abs(script_d) > 1e-14 * (std::norm(phase) + std::norm(cfg.rho)),
          Err::SingularDenominator,
          "D matrix denominator vanished; configuration sits at a squeezing pole");

  OutputMatrices out;
  out.nu = nu;
  const cplx diag = (ch * phase - cfg.rho) / script_d;
  const cplx off = phase * sh / script_d;
  out.d = Mat2{diag, ep * off, std::conj(ep) * off, diag} * cfg.tau;
  const double root_loss = std::sqrt(std::max(0.0, 1.0 - a * a));
  out.j = out.d * (-root_loss / cfg.tau);
  return out;
}

cplx biphoton_amplitude(const RingConfig& cfg, double nu) {
  const OutputMatrices m = output_matrices(cfg, nu);
  const double a = cfg.alpha();
  const cplx ep = std::polar(1.0, cfg.theta_p);
  const cplx tconj = std::conj(cfg.tau);
  return a * a * tconj * tconj *
         (ep * std::conj(m.d.a) * m.d.d + std::conj(ep) * m.d.b * std::conj(m.d.c));
}

std::vector<double> biphoton_spectrum(const RingConfig& cfg, const std::vector<double>& nu_grid) {
  require(nu_grid.size() >= 2, Err::GridTooCoarse, "spectrum grid needs at least two points");
  const double fsr = two_pi / cfg.t_dc();
  require(nu_grid.back() - nu_grid.front() >= fsr * (1.0 - 1e-9), Err::GridTooCoarse,
          "spectrum grid must span at least one free spectral range");
  std::vector<double> out;
  out.reserve(nu_grid.size());
  for (double nu : nu_grid) out.push_back(std::norm(biphoton_amplitude(cfg, nu)));
  return out;
}

RateResult peak_pair_rate(double chi2_eff, double ng1, double ng2, double n1, double n2,
                          double np, double omega_p, double l_x, double l_y, double length,
                          double rho_mag, double buildup_b, double pump_power) {
  require(chi2_eff > 0.0 && l_x > 0.0 && l_y > 0.0 && length > 0.0, Err::NonPositiveInput,
          "geometry and nonlinearity must be positive");
  require(rho_mag >= 0.0 && rho_mag < 1.0, Err::NonPositiveInput, "|rho| must lie in [0, 1)");
  require(pump_power >= 0.0 && buildup_b > 0.0, Err::NonPositiveInput,
          "power and buildup must be non-negative");
  const double d_eff = 0.5 * chi2_eff;
  const double nfac = ng1 * ng2 / (n1 * n1 * n2 * n2 * np * np);
  const double rate = 8192.0 / (81.0 * std::pow(pi, 4) * eps0 * c_light * c_light) * nfac *
                      d_eff * d_eff * omega_p * omega_p / (l_x * l_y) * length *
                      (1.0 - std::pow(rho_mag, 4)) * buildup_b * pump_power;
  RateResult r;
  r.pairs_per_second = rate;
  r.per_milliwatt = pump_power > 0.0 ? rate * 1e-3 / pump_power : 0.0;
  r.regime = RateRegime::PeakResonance;
  r.provenance = "single resonance pair, alpha ~ 1 closed form";
  return r;
}

double heralding_efficiency(const RingConfig& cfg, double nu, bool exact) {
  cfg.check();
  if (!exact) {
    const double a = cfg.alpha();
    const double rho2 = std::norm(cfg.rho);
    return (1.0 - rho2) / (2.0 - rho2 - a * a);
  }
  const OutputMatrices m = output_matrices(cfg, nu);
  const double dbb = std::norm(m.d.d);
  const double jbb = std::norm(m.j.d);
  if (dbb + jbb == 0.0) return 0.0;
  return dbb / (dbb + jbb);
}

double opo_threshold(double gamma, double length, double rho_mag) {
  require(rho_mag > 0.0, Err::ZeroCoupling, "|rho| = 0 has no circulating feedback");
  require(rho_mag <= 1.0, Err::ConfigError, "|rho| must be <= 1");
  require(gamma >= 0.0 && length > 0.0, Err::NonPositiveInput, "need Gamma >= 0 and L > 0");
  return 0.5 * gamma * length + std::log(1.0 / rho_mag);
}

double buildup_from_finesse(double finesse) {
  require(finesse > 0.0, Err::NonPositiveInput, "finesse must be > 0");
  return finesse / (0.5 * pi);
}

double buildup_from_q(double q_factor, double lambda_p, double np, double length) {
  require(q_factor > 0.0 && lambda_p > 0.0 && np > 0.0 && length > 0.0, Err::NonPositiveInput,
          "buildup_from_q needs positive inputs");
  return 2.0 * lambda_p * q_factor / (np * length * pi);
}

TimeCorrelations time_correlations(const RingConfig& cfg, double kappa, int fsr_count,
                                   int samples_per_fsr) {
  cfg.check();
  require(kappa >= 0.0, Err::NonPositiveInput, "kappa must be >= 0");
  const double t_dc = cfg.t_dc();
  const double a = cfg.alpha();
  const double rho_mag = std::abs(cfg.rho);

  // Grid coarseness versus the |psi|^2 tine width in nu_minus.
  const double fsr_minus = 2.0 * std::sqrt(2.0) * pi / t_dc;
  const double tine_fwhm_minus = std::abs(a - rho_mag) * std::sqrt(8.0) / (t_dc * std::sqrt(a * rho_mag));
  require(samples_per_fsr > 0 && fsr_count > 0, Err::NonPositiveInput, "grid sizes must be > 0");
  // Window an integer number of FSRs with a power-of-two sample count per
  // FSR so the comb lands on exact DFT bins.
  size_t spf = 1;
  while (spf < static_cast<size_t>(samples_per_fsr)) spf <<= 1;
  size_t periods = 1;
  while (periods < static_cast<size_t>(fsr_count)) periods <<= 1;
  const double dnu = fsr_minus / static_cast<double>(spf);
  require(tine_fwhm_minus / dnu >= 16.0, Err::GridTooCoarse,
          "fewer than 16 samples per resonance; raise samples_per_fsr");

  const size_t n = spf * periods;

  // Phase-matching envelope must dominate the cavity linewidth.
  const double sinc_width = kappa > 0.0 ? pi * std::sqrt(8.0) / (cfg.length * kappa) : 0.0;
  if (kappa > 0.0)
    require(sinc_width > 10.0 * tine_fwhm_minus, Err::WrongRegime,
            "phase-matching bandwidth must dominate the cavity linewidth");

  std::vector<cplx> f(n);
  for (size_t i = 0; i < n; ++i) {
    // symmetric grid in nu_minus
    const double nu_minus = (static_cast<double>(i) - 0.5 * static_cast<double>(n)) * dnu;
    const double env = kappa > 0.0 ? sinc(cfg.length * kappa * nu_minus / std::sqrt(8.0)) : 1.0;
    f[i] = env * biphoton_amplitude(cfg, nu_minus / std::sqrt(2.0));
  }
  numerics::fft_radix2(f, -1);

  TimeCorrelations out;
  const double dt = two_pi / (dnu * static_cast<double>(n));
  out.t_minus.resize(n / 2);
  out.intensity.resize(n / 2);
  for (size_t j = 0; j < n / 2; ++j) {
    out.t_minus[j] = dt * static_cast<double>(j);
    out.intensity[j] = std::norm(f[j]) * dnu * dnu; // continuum normalisation
  }

  // Comb peaks: local maxima of the transform, ignoring the t = 0 spike.
  double max_int = 0.0;
  for (size_t j = 1; j < n / 2; ++j) max_int = std::max(max_int, out.intensity[j]);
  std::vector<size_t> peaks;
  for (size_t j = 2; j + 1 < n / 2; ++j) {
    const double v = out.intensity[j];
    if (v > out.intensity[j - 1] && v >= out.intensity[j + 1] && v > 1e-10 * max_int)
      peaks.push_back(j);
  }

  TimeCorrelationSummary& s = out.summary;
  s.tine_spacing_paper = t_dc / (2.0 * std::sqrt(2.0) * pi);
  s.envelope_decay_analytic = std::abs(a - rho_mag) * std::sqrt(2.0) / (t_dc * std::sqrt(a * rho_mag));
  s.finesse_conventional = pi * std::sqrt(rho_mag * a) / (1.0 - rho_mag * a);
  s.tines_finesse_reference = s.finesse_conventional / (8.0 * pi * pi);

  s.tine_spacing_measured = 0.0;
  s.envelope_decay_fit = 0.0;
  s.tines_to_1_over_e = 0.0;
  if (peaks.size() >= 8) {
    double spacing_sum = 0.0;
    for (size_t k = 1; k < peaks.size(); ++k)
      spacing_sum += out.t_minus[peaks[k]] - out.t_minus[peaks[k - 1]];
    s.tine_spacing_measured = spacing_sum / static_cast<double>(peaks.size() - 1);

    // Amplitude envelope fit ln|psi~| = const - lambda t over the first
    // clean stretch of tines.
    const size_t lo = 1, hi = std::min<size_t>(peaks.size() - 1, 24);
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    size_t count = 0;
    for (size_t k = lo; k <= hi; ++k) {
      const double t = out.t_minus[peaks[k]];
      const double amp = std::sqrt(out.intensity[peaks[k]]);
      if (amp <= 0.0) continue;
      const double y = std::log(amp);
      sx += t;
      sy += y;
      sxx += t * t;
      sxy += t * y;
      ++count;
    }
    if (count >= 4) {
      const double denom = static_cast<double>(count) * sxx - sx * sx;
      if (denom != 0.0) {
        s.envelope_decay_fit = -((static_cast<double>(count) * sxy - sx * sy) / denom);
        if (s.envelope_decay_fit > 0.0 && s.tine_spacing_measured > 0.0)
          s.tines_to_1_over_e = 1.0 / (s.envelope_decay_fit * s.tine_spacing_measured);
      }
    }
  }
  return out;
}

} // namespace spdc
