#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spdc/beams.hpp"
#include "spdc/error.hpp"

#include <cmath>

using namespace spdc;

TEST_CASE("rayleigh range") {
  // 0.4 mm pump at 404 nm
  CHECK(rayleigh_range(0.4e-3, 404e-9) == doctest::Approx(4.9768).epsilon(1e-3));
  // quadratic scaling in sigma_p
  CHECK(rayleigh_range(2.0 * 0.4e-3, 404e-9) ==
        doctest::Approx(4.0 * rayleigh_range(0.4e-3, 404e-9)).epsilon(1e-12));
  // 52.6 um pump at 782.09 nm stays collimated over a 40 mm crystal
  const double zr = rayleigh_range(52.6e-6, 782.09e-9);
  CHECK(zr == doctest::Approx(44.455e-3).epsilon(1e-3));
  CHECK(zr > 40e-3);
  CHECK_THROWS_AS(rayleigh_range(0.0, 404e-9), Error);
}

TEST_CASE("peak field and power round trip") {
  CHECK(peak_field_from_power(0.0, 52.6e-6, 2.195) == doctest::Approx(0.0));
  // direct evaluation cross-check of the closed form
  const double f = peak_field_from_power(1e-3, 52.6e-6, 2.195);
  const double expected =
      std::sqrt(1e-3 * 2.195 * 2.195 * 2.195 * 8.8541878128e-12 /
                (299792458.0 * M_PI * 52.6e-6 * 52.6e-6));
  CHECK(f == doctest::Approx(expected).epsilon(1e-12));

  // P -> field -> P identity over six decades of power
  for (double p = 1e-6; p <= 1.0; p *= 10.0) {
    const double field = peak_field_from_power(p, 30e-6, 1.8);
    CHECK(power_from_peak_field(field, 30e-6, 1.8) == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("overlap factor limits and monotonicity") {
  CHECK(overlap_factor(10e-6, 0.0) == doctest::Approx(0.25));
  CHECK(overlap_factor(10e-6, 10e-6) == doctest::Approx(1.0 / 9.0));
  // PPLN beam geometry, direct evaluation
  CHECK(overlap_factor(52.6e-6, 55.1e-6) == doctest::Approx(0.1042387).epsilon(1e-5));

  // monotone increasing in sigma_p at fixed sigma_1, bounded by 1/4
  double prev = 0.0;
  for (double sp = 5e-6; sp < 500e-6; sp *= 1.3) {
    const double v = overlap_factor(sp, 40e-6);
    CHECK(v > prev);
    CHECK(v <= 0.25);
    prev = v;
  }
}

TEST_CASE("focal parameter") {
  CHECK(focal_parameter(2.0, 1.0) == doctest::Approx(1.0));
  const double zr = rayleigh_range(52.6e-6, 782.09e-9);
  CHECK(focal_parameter(40e-3, zr) == doctest::Approx(0.4499).epsilon(1e-3));
  CHECK(focal_parameter(1e-3, 1e9) < 1e-9); // collimated limit
  CHECK_THROWS_AS(focal_parameter(-1.0, 1.0), Error);
}

TEST_CASE("waveguide sigma from mode field diameter") {
  CHECK(sigma_from_mfd(7.5e-6) == doctest::Approx(1.875e-6));
  CHECK(sigma_from_mfd(3.5e-6) == doctest::Approx(0.875e-6));
  CHECK_THROWS_AS(sigma_from_mfd(0.0), Error);
}
