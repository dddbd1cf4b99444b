#ifndef SPDC_PHASEMATCH_HPP
#define SPDC_PHASEMATCH_HPP

#include <vector>

namespace spdc {

// Quadratic expansion of Delta k_z about the signal center frequency:
//   dk(x) = linear_coeff * x + quadratic_coeff * x^2,  x = omega_1 - center.
struct PhaseMatchExpansion {
  double center_omega_1 = 0.0; // rad/s
  double linear_coeff = 0.0;   // s/m, |n_g1 - n_g2| / c
  double quadratic_coeff = 0.0; // s^2/m, kappa or (kappa1+kappa2)/2
};

struct PolingConfig {
  bool enabled = false;
  double period = 0.0; // m
  int order = 1;
};

// Sinc(x) = sin(x)/x with the removable singularity handled by series.
double sinc(double x);

// Delta k_z = (n1 w1 + n2 w2 - np wp)/c; enforces w1 + w2 = wp.
double delta_k(double n1, double n2, double np, double omega1, double omega2, double omegap);

// Sinc^2(dk L/2)
double sinc2_weight(double dk, double length_z);

PhaseMatchExpansion expansion_coeffs(double ng1, double ng2, double kappa1, double kappa2,
                                     bool degenerate, double center_omega_1);

// Lambda = 2 pi order / |dk|
double poling_period_for(double dk, int order);

// X_n = Sinc(n pi / 2)
double qpm_fourier_amp(int n);

// X_n^2 = 4/(n^2 pi^2) for odd n; even orders are a configuration error.
double qpm_rate_factor(int n);

struct QpmGrowthPoint {
  double length_over_period;
  double unpoled;          // |int_0^L e^{-i dk z} dz|^2 / Lambda^2
  double poled;            // first-order poling, sign flip every Lambda/2
  double parabolic_approx; // (2 L / (pi Lambda))^2
};

std::vector<QpmGrowthPoint> qpm_growth_curve(const std::vector<double>& length_over_period);

} // namespace spdc

#endif
