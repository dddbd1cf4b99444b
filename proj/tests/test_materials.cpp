#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spdc/constants.hpp"
#include "spdc/error.hpp"
#include "spdc/materials.hpp"

#include <cctype>
#include <cmath>
#include <string>

using namespace spdc;

namespace {
const std::string data_dir = SPDC_DATA_DIR;

Material test_glass() {
  // fused-silica-like three-pole set, standard variant
  Material m;
  m.name = "test_glass";
  m.tabulated_model = false;
  m.valid_lo_m = 300e-9;
  m.valid_hi_m = 2000e-9;
  MaterialAxis ax;
  ax.tabulated = false;
  ax.sellmeier.variant = SellmeierVariant::Standard;
  ax.sellmeier.constant = 1.0;
  ax.sellmeier.b = {0.6961663, 0.4079426, 0.8974794};
  ax.sellmeier.c_um2 = {0.0684043 * 0.0684043, 0.1162414 * 0.1162414, 9.896161 * 9.896161};
  m.axes["o"] = ax;
  return m;
}
} // namespace

TEST_CASE("tabulated PPLN reproduces the table entries") {
  const Material m = builtin_material("PPLN");
  CHECK(phase_index(m, {1564.18e-9, "z", {}}) == doctest::Approx(2.155));
  CHECK(phase_index(m, {782.09e-9, "z", {}}) == doctest::Approx(2.195));
  CHECK(group_index(m, {1564.18e-9, "z", {}}) == doctest::Approx(2.200));
  CHECK(gvd(m, {1564.18e-9, "z", {}}) == doctest::Approx(96.75e-27));
  // repeated queries bit-identical (pure function)
  const double a = phase_index(m, {1564.18e-9, "z", {}});
  const double b = phase_index(m, {1564.18e-9, "z", {}});
  CHECK(a == b);
}

TEST_CASE("vacuum and trivial sellmeier") {
  const Material vac = Material::vacuum();
  CHECK(phase_index(vac, {532e-9, "", {}}) == doctest::Approx(1.0));
  CHECK(phase_index(vac, {1550e-9, "", {}}) == doctest::Approx(1.0));
  CHECK(group_index(vac, {800e-9, "", {}}) == doctest::Approx(1.0));

  Material flat;
  flat.name = "constant_nsq_2.25";
  flat.tabulated_model = false;
  flat.valid_lo_m = 200e-9;
  flat.valid_hi_m = 3000e-9;
  MaterialAxis ax;
  ax.tabulated = false;
  ax.sellmeier.constant = 2.25;
  flat.axes["o"] = ax;
  CHECK(phase_index(flat, {700e-9, "o", {}}) == doctest::Approx(1.5));
  // dispersionless: n_g = n
  CHECK(group_index(flat, {700e-9, "o", {}}) == doctest::Approx(1.5));
  CHECK(gvd(flat, {700e-9, "o", {}}) == doctest::Approx(0.0));
}

TEST_CASE("errors: out of range, unknown axis, missing data") {
  const Material m = builtin_material("PPLN");
  CHECK_THROWS_AS(phase_index(m, {2000e-9, "z", {}}), Error);
  CHECK_THROWS_AS(phase_index(m, {1564.18e-9, "x", {}}), Error);
  CHECK_THROWS_AS(phase_index(m, {-1.0, "z", {}}), Error);
  // no kappa stored at the pump entry
  CHECK_THROWS_AS(gvd(m, {782.09e-9, "z", {}}), Error);
  // between entries: no tabulated point
  CHECK_THROWS_AS(phase_index(m, {1000e-9, "z", {}}), Error);

  try {
    phase_index(m, {1564.18e-9, "x", {}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Err::UnknownAxis);
  }
}

TEST_CASE("sellmeier group index against central finite difference") {
  const Material m = test_glass();
  for (double lam : {400e-9, 633e-9, 1064e-9, 1550e-9}) {
    const OpticalQuery q{lam, "o", {}};
    const double h = 1e-12; // m
    const double n_plus = phase_index(m, {lam + h, "o", {}});
    const double n_minus = phase_index(m, {lam - h, "o", {}});
    const double ng_fd = phase_index(m, q) - lam * (n_plus - n_minus) / (2.0 * h);
    CHECK(group_index(m, q) == doctest::Approx(ng_fd).epsilon(1e-6));
  }
}

TEST_CASE("sellmeier gvd against finite difference of k(omega)") {
  const Material m = test_glass();
  for (double lam : {500e-9, 800e-9, 1300e-9}) {
    const double w = omega_from_lambda(lam);
    auto k_of_omega = [&](double omega) {
      const double l = two_pi * c_light / omega;
      return phase_index(m, {l, "o", {}}) * omega / c_light;
    };
    const double dw = w * 1e-5;
    const double kpp = (k_of_omega(w + dw) - 2.0 * k_of_omega(w) + k_of_omega(w - dw)) / (dw * dw);
    CHECK(gvd(m, {lam, "o", {}}) == doctest::Approx(kpp).epsilon(1e-4));
  }
}

TEST_CASE("shipped sellmeier file matches the PPLN table to quoted precision") {
  const Material ln = load_material(data_dir + "/materials/ln_mgo_e_107c.mat");
  const OpticalQuery q_dc{1564.18e-9, "e", {}};
  const OpticalQuery q_p{782.09e-9, "e", {}};
  CHECK(std::abs(phase_index(ln, q_dc) - 2.155) < 0.001);
  CHECK(std::abs(phase_index(ln, q_p) - 2.195) < 0.001);
  CHECK(std::abs(group_index(ln, q_dc) - 2.200) < 0.001);
  CHECK(std::abs(gvd(ln, q_dc) - 96.75e-27) < 0.2e-27);
}

TEST_CASE("shipped tabulated files equal the builtins") {
  for (const char* name : {"PPLN", "BiBO", "PPKTP"}) {
    std::string lower = name;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const Material file = load_material(data_dir + "/materials/" + lower + ".mat");
    const Material built = builtin_material(name);
    CHECK(serialize_material(file) == serialize_material(built));
  }
}

TEST_CASE("material files round-trip exactly") {
  for (const char* rel : {"/materials/ppln.mat", "/materials/bibo.mat", "/materials/ppktp.mat",
                          "/materials/ln_mgo_e_107c.mat"}) {
    const Material m = load_material(data_dir + rel);
    const std::string once = serialize_material(m);
    const Material reparsed = parse_material(once);
    const std::string twice = serialize_material(reparsed);
    CHECK(once == twice); // byte-identical after one canonicalisation

    // representative values bit-identical through the round trip
    const auto& ax0 = m.axes.begin()->second;
    const auto& ax1 = reparsed.axes.begin()->second;
    if (ax0.tabulated) {
      REQUIRE(ax0.entries.size() == ax1.entries.size());
      for (size_t i = 0; i < ax0.entries.size(); ++i) {
        CHECK(ax0.entries[i].lambda_m == ax1.entries[i].lambda_m);
        CHECK(ax0.entries[i].n == ax1.entries[i].n);
      }
    } else {
      CHECK(ax0.sellmeier.constant == ax1.sellmeier.constant);
      for (size_t i = 0; i < ax0.sellmeier.b.size(); ++i)
        CHECK(ax0.sellmeier.b[i] == ax1.sellmeier.b[i]);
    }
  }
}

TEST_CASE("load validation rejects bad files") {
  CHECK_THROWS_AS(parse_material("name = x\nmodel = nonsense\nvalid_range_nm = [1, 2]\n"), Error);
  CHECK_THROWS_AS(parse_material("name = x\nmodel = tabulated\nvalid_range_nm = [500, 400]\n"
                                 "[axis z]\nentry = { lambda_nm = 450, n = 1.5 }\n"),
                  Error);
  // n < 1 rejected
  CHECK_THROWS_AS(parse_material("name = x\nmodel = tabulated\nvalid_range_nm = [400, 500]\n"
                                 "[axis z]\nentry = { lambda_nm = 450, n = 0.5 }\n"),
                  Error);
  // flagged normal dispersion with n_g < n rejected
  CHECK_THROWS_AS(parse_material("name = x\nmodel = tabulated\nvalid_range_nm = [400, 500]\n"
                                 "[axis z]\nnormal_dispersion = true\n"
                                 "entry = { lambda_nm = 450, n = 1.5, n_g = 1.2 }\n"),
                  Error);
}
