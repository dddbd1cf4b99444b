#ifndef SPDC_CAVITY_HPP
#define SPDC_CAVITY_HPP

#include "spdc/numerics/linalg.hpp"
#include "spdc/rates.hpp"

#include <complex>
#include <vector>

namespace spdc {

using cplx = std::complex<double>;

// Single-bus micro-ring resonator. rho/tau are the coupler's self- and
// cross-coupling, Gamma the intrinsic amplitude-squared loss per length.
struct RingConfig {
  cplx rho = 0.0;
  cplx tau = 1.0;
  double gamma = 0.0;     // 1/m
  double length = 0.0;    // m, circumference 2 pi R
  double n_g = 1.0;
  double theta_p = 0.0;   // pump phase, (1/2) Omega_p T_DC
  double buildup_b = 1.0; // pump buildup factor
  double r = 0.0;         // per-pass squeezing |g| L |alpha_p| T_DC

  double alpha() const;   // e^{-Gamma L / 2}
  double t_dc() const;    // n_g L / c
  void check() const;     // unitary coupler, loss bounds
};

RingConfig make_ring(double rho_mag, double gamma, double length, double n_g,
                     double theta_p = 0.0, double buildup_b = 1.0, double r = 0.0);

struct OutputMatrices {
  numerics::Mat2 d;
  numerics::Mat2 j;
  double nu = 0.0; // rad/s detuning from Omega_p/2
};

// Discrete Loudon chain: power transmission (1 - Gamma L / N)^N -> e^{-Gamma L}.
double chain_transmission(double gamma, double length, long n_splitters);

struct RingTransfer {
  cplx g;    // G_out,in
  double h;  // |H| = sqrt(1 - |G|^2)
};

// Closed-form bus transfer G = (rho - alpha e^{i theta})/(1 - rho* alpha e^{i theta}).
RingTransfer ring_transfer(const RingConfig& cfg, double theta);

// Partial trajectory sum over n_terms circulations; oracle for the closed form.
cplx ring_transfer_trajectory_sum(const RingConfig& cfg, double theta, int n_terms);

// Particle-in-a-box coupling constants.
double coupling_g_spdc(double chi2_eff, double ng1, double ng2, double n1, double n2, double np,
                       double omega_p, double v_ring);
double coupling_g_sfwm(double chi3_eff, double ng1, double ng2, double n1, double n2, double np,
                       double omega_p, double v_ring);

struct SqueezeStep {
  numerics::Mat2 propagation; // alpha e^{i theta} [[cosh r, -e^{i theta_p} sinh r], ...]
  numerics::Mat2 noise;       // diag sqrt(1 - alpha^2)
};

// One-circulation propagation under equal loss and group index.
SqueezeStep internal_squeeze_step(const RingConfig& cfg, double theta);

// General unequal-loss propagation over the ring via the 2x2 matrix
// exponential of M L.
numerics::Mat2 propagation_matrix_general(double gamma_a, double gamma_b, double n_g, double nu,
                                          double gain_r, double theta_p, double length);

OutputMatrices output_matrices(const RingConfig& cfg, double nu);

// |psi_ab(nu)|^2 on a frequency grid spanning at least one FSR.
std::vector<double> biphoton_spectrum(const RingConfig& cfg, const std::vector<double>& nu_grid);
cplx biphoton_amplitude(const RingConfig& cfg, double nu);

// Coincidence rate into one pair of resonances (alpha ~ 1, non-critical).
RateResult peak_pair_rate(double chi2_eff, double ng1, double ng2, double n1, double n2,
                          double np, double omega_p, double l_x, double l_y, double length,
                          double rho_mag, double buildup_b, double pump_power);

// Exact |D_bb|^2/(|D_bb|^2 + |J_bb|^2) or the closed approximation
// (1 - rho^2)/(2 - rho^2 - alpha^2).
double heralding_efficiency(const RingConfig& cfg, double nu, bool exact);

// r_thresh = Gamma L / 2 + ln(1/|rho|)
double opo_threshold(double gamma, double length, double rho_mag);

struct TimeCorrelationSummary {
  double tine_spacing_paper;    // T_DC / (2 sqrt(2) pi), as stated
  double tine_spacing_measured; // peak-to-peak from the transform
  double envelope_decay_fit;        // 1/s in t_minus, amplitude envelope
  double envelope_decay_analytic;   // |alpha - rho| sqrt(2) / (T_DC sqrt(alpha rho))
  double tines_to_1_over_e;         // measured count at the measured spacing
  double finesse_conventional;      // pi sqrt(rho alpha) / (1 - rho alpha)
  double tines_finesse_reference;   // finesse_conventional / (8 pi^2)
};

struct TimeCorrelations {
  std::vector<double> t_minus;
  std::vector<double> intensity; // |psi~(t_minus)|^2
  TimeCorrelationSummary summary;
};

// Transform of Sinc(L kappa nu_-/sqrt 8) psi_ab(nu_-/sqrt 2) over many FSRs.
TimeCorrelations time_correlations(const RingConfig& cfg, double kappa, int fsr_count,
                                   int samples_per_fsr);

// B ~ Finesse / (pi/2); finesse from the conventional all-pass expression.
double buildup_from_finesse(double finesse);
// B ~ (2 lambda_p / (n_p L pi)) Q
double buildup_from_q(double q_factor, double lambda_p, double np, double length);

} // namespace spdc

#endif
