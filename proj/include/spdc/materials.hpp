#ifndef SPDC_MATERIALS_HPP
#define SPDC_MATERIALS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spdc {

// One tabulated dispersion point. n_g and kappa are optional; queries that
// need a missing field raise Err::MissingData.
struct TabulatedEntry {
  double lambda_m = 0.0;
  double n = 0.0;
  std::optional<double> n_g;
  std::optional<double> kappa_s2_per_m; // d^2 k / d omega^2 at this wavelength
};

enum class SellmeierVariant {
  Standard, // n^2 = A + sum B_i u^2/(u^2 - C_i) - D u^2,  u = lambda in um
  Offset,   // n^2 = A + sum B_i /(u^2 - C_i) - D u^2
};

struct SellmeierSet {
  SellmeierVariant variant = SellmeierVariant::Standard;
  double constant = 1.0; // A
  std::vector<double> b;
  std::vector<double> c_um2;
  double d = 0.0;
};

struct MaterialAxis {
  bool tabulated = true;
  bool normal_dispersion = false;
  std::vector<TabulatedEntry> entries;
  SellmeierSet sellmeier;
};

struct Material {
  std::string name;
  bool tabulated_model = true;
  double valid_lo_m = 0.0;
  double valid_hi_m = 0.0;
  std::optional<double> temperature_reference_k;
  std::map<std::string, MaterialAxis> axes;

  static Material vacuum();
};

struct OpticalQuery {
  double wavelength_m = 0.0;
  std::string axis; // empty picks the sole axis when unambiguous
  std::optional<double> temperature_k;
};

// Wavelength window around a tabulated entry that still counts as "the"
// named wavelength.
inline constexpr double tabulated_lookup_window_m = 0.5e-9;

double phase_index(const Material& m, const OpticalQuery& q);
double group_index(const Material& m, const OpticalQuery& q); // n - lambda dn/dlambda
double gvd(const Material& m, const OpticalQuery& q);         // kappa = d^2k/domega^2, s^2/m

Material parse_material(const std::string& text);
Material load_material(const std::string& path);
std::string serialize_material(const Material& m);
void save_material(const Material& m, const std::string& path);

// The three tabulated experiment materials plus vacuum, identical to the
// shipped data files.
Material builtin_material(const std::string& name);

} // namespace spdc

#endif
