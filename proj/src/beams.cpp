#include "spdc/beams.hpp"

#include "spdc/constants.hpp"
#include "spdc/error.hpp"

#include <cmath>

namespace spdc {

double rayleigh_range(double sigma_p, double lambda_p) {
  require(sigma_p > 0.0 && lambda_p > 0.0, Err::NonPositiveInput,
          "rayleigh_range needs sigma_p > 0 and lambda_p > 0");
  return 4.0 * pi * sigma_p * sigma_p / lambda_p;
}

double peak_field_from_power(double power, double sigma_p, double n) {
  require(power >= 0.0, Err::NonPositiveInput, "power must be >= 0");
  require(sigma_p > 0.0 && n > 0.0, Err::NonPositiveInput,
          "peak_field_from_power needs sigma_p > 0 and n > 0");
  return std::sqrt(power * n * n * n * eps0 / (c_light * pi * sigma_p * sigma_p));
}

double power_from_peak_field(double field, double sigma_p, double n) {
  require(field >= 0.0, Err::NonPositiveInput, "field must be >= 0");
  require(sigma_p > 0.0 && n > 0.0, Err::NonPositiveInput,
          "power_from_peak_field needs sigma_p > 0 and n > 0");
  return c_light * field * field * pi * sigma_p * sigma_p / (n * n * n * eps0);
}

double overlap_factor(double sigma_p, double sigma_1) {
  require(sigma_p > 0.0, Err::NonPositiveInput, "sigma_p must be > 0");
  require(sigma_1 >= 0.0, Err::NonPositiveInput, "sigma_1 must be >= 0");
  const double r = sigma_p * sigma_p / (sigma_1 * sigma_1 + 2.0 * sigma_p * sigma_p);
  return r * r;
}

double focal_parameter(double length_z, double rayleigh) {
  require(length_z > 0.0 && rayleigh > 0.0, Err::NonPositiveInput,
          "focal_parameter needs positive lengths");
  return length_z / (2.0 * rayleigh);
}

double sigma_from_mfd(double mode_field_diameter) {
  require(mode_field_diameter > 0.0, Err::NonPositiveInput, "MFD must be > 0");
  return mode_field_diameter / 4.0;
}

} // namespace spdc
