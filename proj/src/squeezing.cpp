#include "spdc/squeezing.hpp"

#include "spdc/constants.hpp"
#include "spdc/error.hpp"

#include <cmath>
#include <limits>

namespace spdc {

double mean_pump_photons(double power, double omega_p, double length_z, double np) {
  require(power >= 0.0, Err::NonPositiveInput, "power must be >= 0");
  require(omega_p > 0.0 && length_z > 0.0 && np > 0.0, Err::NonPositiveInput,
          "mean_pump_photons needs positive omega_p, L_z, n_p");
  return power / (hbar * omega_p) * length_z * np / c_light;
}

double evolve_pairs(const SqueezeSpec& spec) {
  const auto& g = spec.g_matrix;
  require(g.dim() > 0, Err::NonPositiveInput, "empty coupling matrix");
  const double scale = g.max_abs();
  require(g.max_asymmetry() <= 1e-12 * (scale > 0.0 ? scale : 1.0), Err::AsymmetricMatrix,
          "coupling matrix must be symmetric to 1e-12 relative");
  require(spec.mean_pump_photons >= 0.0 && spec.interaction_time >= 0.0, Err::NonPositiveInput,
          "pump photon number and time must be >= 0");
  if (scale == 0.0) return 0.0;

  const numerics::EigenSym eig = numerics::eigen_symmetric(g);
  const double root_np_t = std::sqrt(spec.mean_pump_photons) * spec.interaction_time;
  double total = 0.0;
  for (double lam : eig.values) {
    const double s = std::sinh(root_np_t * lam);
    total += s * s;
  }
  return total;
}

double tmsv_pmf(double r, int n) {
  require(r >= 0.0, Err::NonPositiveInput, "squeezing parameter must be >= 0");
  require(n >= 0, Err::NonPositiveInput, "photon number must be >= 0");
  if (r == 0.0) return n == 0 ? 1.0 : 0.0;
  // log-space for large n: exp(2n log tanh r - 2 log cosh r)
  const double log_t = std::log(std::tanh(r));
  const double log_c = std::log(std::cosh(r));
  return std::exp(2.0 * n * log_t - 2.0 * log_c);
}

double multi_pair_ratio(double r) {
  require(r >= 0.0, Err::NonPositiveInput, "squeezing parameter must be >= 0");
  const double s = std::sinh(r);
  return s * s;
}

double aggregate_multi_pair_ratio(double n_sm, double kappa, double length_z) {
  require(n_sm >= 0.0, Err::NonPositiveInput, "N_SM must be >= 0");
  require(kappa > 0.0 && length_z > 0.0, Err::NonPositiveInput,
          "kappa and L_z must be > 0");
  // Order 1e-8 per Watt for typical bulk parameters.
  return n_sm * (12.0 / 35.0) * (4.0 - std::sqrt(2.0)) * c_light *
         std::sqrt(kappa * pi / length_z);
}

PoissonPairStats poisson_pair_statistics(double rate, double window) {
  require(rate >= 0.0, Err::NonPositiveInput, "rate must be >= 0");
  require(window > 0.0, Err::NonPositiveInput, "window must be > 0");
  PoissonPairStats s;
  s.mean = rate * window;
  s.variance = s.mean;
  s.p_zero = std::exp(-s.mean);
  s.waiting_time_mean = rate > 0.0 ? 1.0 / rate : std::numeric_limits<double>::infinity();
  return s;
}

DiscretisedCoupling discretise_spdc_coupling(const SpdcConfig& cfg, int n_modes) {
  validate(cfg);
  require(n_modes >= 1 && n_modes <= 512, Err::ConfigError,
          "mode count must lie in [1, 512] for the dense eigensolver");
  require(cfg.degenerate && cfg.type != SpdcType::TypeII, Err::WrongRegime,
          "discretised coupling implements the degenerate type-0/I path");

  DiscretisedCoupling out;
  const double wp = cfg.omega_p();
  const double wc = 0.5 * wp;
  // k spacing 2 pi / L_z maps to omega spacing (2 pi / L_z)(c / n_g).
  out.domega = two_pi / cfg.length_z * c_light / cfg.ng1;
  out.t_dc = cfg.length_z * cfg.n1 / c_light;

  const double np_mean =
      mean_pump_photons(cfg.beam.power, wp, cfg.length_z, cfg.np);
  // Per-mode |G|^2 from the squeezed-vacuum derivation:
  //   N_SM/t^2 = Np sum_i g_i^2
  //            = [2/(pi^2 eps0 c^2)] [ng1 ng2/(np n1^3 n2^2)] overlap
  //              (P d^2 L_z / sigma_p^2) * integral
  // so g_i^2 = K4 * w(omega_i) * domega / Np, with the QPM factor folded in
  // when the medium is poled.
  const double overlap = overlap_factor(cfg.beam.sigma_p, cfg.beam.sigma_1);
  const double k4 = 2.0 / (pi * pi * eps0 * c_light * c_light) * cfg.ng1 * cfg.ng2 /
                    (cfg.np * cfg.n1 * cfg.n1 * cfg.n1 * cfg.n2 * cfg.n2) * overlap *
                    cfg.beam.power * cfg.d_eff * cfg.d_eff * cfg.length_z /
                    (cfg.beam.sigma_p * cfg.beam.sigma_p) * cfg.qpm_factor();

  out.spec.g_matrix = numerics::SymMatrix(static_cast<size_t>(n_modes));
  out.spec.mean_pump_photons = np_mean;
  out.spec.interaction_time = out.t_dc;
  out.omega_1.resize(n_modes);

  for (int i = 0; i < n_modes; ++i) {
    const double w1 = wc + (i - 0.5 * (n_modes - 1)) * out.domega;
    out.omega_1[i] = w1;
    const double w = sm_integrand(cfg, w1); // omega_1 (omega_p - omega_1) Sinc^2
    const double g2 = np_mean > 0.0 ? k4 * w * out.domega / np_mean : 0.0;
    out.spec.g_matrix(static_cast<size_t>(i), static_cast<size_t>(i)) = std::sqrt(g2);
  }
  return out;
}

} // namespace spdc
