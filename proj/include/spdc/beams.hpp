#ifndef SPDC_BEAMS_HPP
#define SPDC_BEAMS_HPP

namespace spdc {

// Gaussian beam geometry. sigma_p and sigma_1 are intensity standard
// deviations; waveguide mode-field diameters convert via sigma_from_mfd.
//
// Waveguides with different effective widths along the two transverse axes
// (rubidium-diffused KTP is the usual offender) would need independent
// sigma_x/sigma_y here; no closed-form rate exists for that case, so the
// radii stay scalar and the asymmetry is annotated rather than modelled.
struct BeamConfig {
  double lambda_p = 0.0; // m, vacuum
  double power = 0.0;    // W
  double sigma_p = 0.0;  // m, pump radius
  double sigma_1 = 0.0;  // m, collection-mode radius
  double n_p = 1.0;      // phase index at the pump
};

// z_R = 4 pi sigma_p^2 / lambda_p
double rayleigh_range(double sigma_p, double lambda_p);

// Inverts P = c |D|^2 pi sigma_p^2 / (n^3 eps0); returns |D_p^0| in SI.
double peak_field_from_power(double power, double sigma_p, double n);
double power_from_peak_field(double field, double sigma_p, double n);

// (sigma_p^2 / (sigma_1^2 + 2 sigma_p^2))^2
double overlap_factor(double sigma_p, double sigma_1);

// xi = L_z / (2 z_R)
double focal_parameter(double length_z, double rayleigh);

// sigma = MFD / 4 for hermite-gaussian waveguide mode approximations
double sigma_from_mfd(double mode_field_diameter);

} // namespace spdc

#endif
