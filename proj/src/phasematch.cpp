#include "spdc/phasematch.hpp"

#include "spdc/constants.hpp"
#include "spdc/error.hpp"

#include <cmath>

namespace spdc {

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double delta_k(double n1, double n2, double np, double omega1, double omega2, double omegap) {
  require(omegap > 0.0 && omega1 > 0.0 && omega2 > 0.0, Err::NonPositiveInput,
          "frequencies must be positive");
  require(std::abs(omega1 + omega2 - omegap) <= 1e-12 * omegap, Err::EnergyMismatch,
          "omega1 + omega2 must equal omegap");
  return (n1 * omega1 + n2 * omega2 - np * omegap) / c_light;
}

double sinc2_weight(double dk, double length_z) {
  require(length_z > 0.0, Err::NonPositiveInput, "L_z must be > 0");
  const double s = sinc(0.5 * dk * length_z);
  return s * s;
}

PhaseMatchExpansion expansion_coeffs(double ng1, double ng2, double kappa1, double kappa2,
                                     bool degenerate, double center_omega_1) {
  // For degenerate same-polarization SPDC the two kappas coincide and the
  // mean reduces to the single GVD constant.
  (void)degenerate;
  PhaseMatchExpansion e;
  e.center_omega_1 = center_omega_1;
  e.linear_coeff = std::abs(ng1 - ng2) / c_light;
  e.quadratic_coeff = 0.5 * (kappa1 + kappa2);
  return e;
}

double poling_period_for(double dk, int order) {
  require(dk != 0.0, Err::ZeroMismatch, "poling unnecessary: delta_k is zero");
  require(order >= 1, Err::NonPositiveInput, "poling order must be >= 1");
  return two_pi * order / std::abs(dk);
}

double qpm_fourier_amp(int n) {
  require(n != 0, Err::ZeroOrder, "QPM Fourier component X_0 is zero by construction");
  return sinc(n * pi / 2.0);
}

double qpm_rate_factor(int n) {
  require(n >= 1, Err::NonPositiveInput, "QPM order must be >= 1");
  require(n % 2 == 1, Err::EvenOrder,
          "even QPM order has zero Fourier amplitude; check the poling configuration");
  return 4.0 / (static_cast<double>(n) * n * pi * pi);
}

std::vector<QpmGrowthPoint> qpm_growth_curve(const std::vector<double>& length_over_period) {
  std::vector<QpmGrowthPoint> out;
  out.reserve(length_over_period.size());
  for (double u : length_over_period) {
    require(u >= 0.0, Err::NonPositiveInput, "growth curve grid must be non-negative");
    QpmGrowthPoint p;
    p.length_over_period = u;
    // Unpoled amplitude over length L = u Lambda at dk = 2 pi / Lambda:
    // |(e^{-i dk L} - 1)/dk|^2 / Lambda^2 = sin^2(pi u) / pi^2.
    const double s = std::sin(pi * u);
    p.unpoled = s * s / (pi * pi);
    // First-order poling flips the sign every Lambda/2. Whole half-periods
    // contribute equal in-phase amplitudes 2/dk; the partial segment adds
    // 1 - e^{-i phi} with phi the phase accumulated past the last flip.
    const double j = std::floor(2.0 * u);
    const double phi = two_pi * (u - 0.5 * j);
    const double re = 2.0 * j + 1.0 - std::cos(phi);
    const double im = std::sin(phi);
    p.poled = (re * re + im * im) / (4.0 * pi * pi);
    p.parabolic_approx = 4.0 * u * u / (pi * pi);
    out.push_back(p);
  }
  return out;
}

} // namespace spdc
