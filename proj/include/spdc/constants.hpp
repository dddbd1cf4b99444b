#ifndef SPDC_CONSTANTS_HPP
#define SPDC_CONSTANTS_HPP

namespace spdc {

// CODATA 2018 values, SI units throughout.
inline constexpr double c_light = 299792458.0;          // m/s
inline constexpr double eps0 = 8.8541878128e-12;        // F/m
inline constexpr double hbar = 1.054571817e-34;         // J s
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline double omega_from_lambda(double lambda_m) { return two_pi * c_light / lambda_m; }
inline double lambda_from_omega(double omega) { return two_pi * c_light / omega; }

} // namespace spdc

#endif
