#include "spdc/materials.hpp"

#include "spdc/config.hpp"
#include "spdc/constants.hpp"
#include "spdc/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace spdc {

namespace {

struct SellmeierEval {
  double n;
  double dn_dlam;   // per metre
  double d2n_dlam2; // per metre^2
};

SellmeierEval evaluate_sellmeier(const SellmeierSet& s, double lambda_m) {
  const double u = lambda_m * 1e6; // um
  const double u2 = u * u;
  double f = s.constant - s.d * u2;
  double fp = -2.0 * s.d * u;  // d f / d u
  double fpp = -2.0 * s.d;     // d^2 f / d u^2
  for (size_t i = 0; i < s.b.size(); ++i) {
    const double c = s.c_um2[i];
    const double den = u2 - c;
    require(den != 0.0, Err::OutOfRange, "wavelength sits on a Sellmeier resonance");
    if (s.variant == SellmeierVariant::Standard) {
      f += s.b[i] * u2 / den;
      fp += -2.0 * u * c * s.b[i] / (den * den);
      fpp += s.b[i] * c * (6.0 * u2 + 2.0 * c) / (den * den * den);
    } else {
      f += s.b[i] / den;
      fp += -2.0 * u * s.b[i] / (den * den);
      fpp += s.b[i] * (6.0 * u2 + 2.0 * c) / (den * den * den);
    }
  }
  require(f > 0.0, Err::OutOfRange, "Sellmeier n^2 is non-positive at this wavelength");
  const double n = std::sqrt(f);
  const double np = fp / (2.0 * n);
  const double npp = fpp / (2.0 * n) - fp * fp / (4.0 * n * n * n);
  return {n, np * 1e6, npp * 1e12};
}

const MaterialAxis& find_axis(const Material& m, const OpticalQuery& q) {
  if (q.axis.empty()) {
    require(m.axes.size() == 1, Err::UnknownAxis,
            "material '" + m.name + "' has several axes; query must name one");
    return m.axes.begin()->second;
  }
  const auto it = m.axes.find(q.axis);
  require(it != m.axes.end(), Err::UnknownAxis,
          "axis '" + q.axis + "' not in data for material '" + m.name + "'");
  return it->second;
}

const TabulatedEntry& find_entry(const Material& m, const MaterialAxis& ax, double lambda_m) {
  for (const auto& e : ax.entries)
    if (std::abs(e.lambda_m - lambda_m) <= tabulated_lookup_window_m) return e;
  fail(Err::OutOfRange, "no tabulated entry near " + cfg::format_double(lambda_m * 1e9) +
                            " nm for material '" + m.name + "'");
}

void check_range(const Material& m, const OpticalQuery& q) {
  require(q.wavelength_m > 0.0, Err::NonPositiveInput, "wavelength must be positive");
  require(q.wavelength_m >= m.valid_lo_m && q.wavelength_m <= m.valid_hi_m, Err::OutOfRange,
          "wavelength " + cfg::format_double(q.wavelength_m * 1e9) + " nm outside [" +
              cfg::format_double(m.valid_lo_m * 1e9) + ", " +
              cfg::format_double(m.valid_hi_m * 1e9) + "] nm for '" + m.name + "'");
}

} // namespace

Material Material::vacuum() {
  Material m;
  m.name = "vacuum";
  m.tabulated_model = false;
  m.valid_lo_m = 1e-12;
  m.valid_hi_m = 1.0;
  MaterialAxis ax;
  ax.tabulated = false;
  ax.sellmeier.constant = 1.0;
  m.axes["o"] = ax;
  return m;
}

double phase_index(const Material& m, const OpticalQuery& q) {
  check_range(m, q);
  const MaterialAxis& ax = find_axis(m, q);
  if (ax.tabulated) return find_entry(m, ax, q.wavelength_m).n;
  return evaluate_sellmeier(ax.sellmeier, q.wavelength_m).n;
}

double group_index(const Material& m, const OpticalQuery& q) {
  check_range(m, q);
  const MaterialAxis& ax = find_axis(m, q);
  if (ax.tabulated) {
    const TabulatedEntry& e = find_entry(m, ax, q.wavelength_m);
    require(e.n_g.has_value(), Err::MissingData,
            "no group-index entry at this wavelength for '" + m.name + "'");
    return *e.n_g;
  }
  const SellmeierEval ev = evaluate_sellmeier(ax.sellmeier, q.wavelength_m);
  return ev.n - q.wavelength_m * ev.dn_dlam;
}

double gvd(const Material& m, const OpticalQuery& q) {
  check_range(m, q);
  const MaterialAxis& ax = find_axis(m, q);
  if (ax.tabulated) {
    const TabulatedEntry& e = find_entry(m, ax, q.wavelength_m);
    require(e.kappa_s2_per_m.has_value(), Err::MissingData,
            "no GVD entry at this wavelength for '" + m.name + "'");
    return *e.kappa_s2_per_m;
  }
  // kappa = d^2k/domega^2 = lambda^3 n'' / (2 pi c^2)
  const SellmeierEval ev = evaluate_sellmeier(ax.sellmeier, q.wavelength_m);
  const double lam = q.wavelength_m;
  return lam * lam * lam * ev.d2n_dlam2 / (two_pi * c_light * c_light);
}

Material parse_material(const std::string& text) {
  const cfg::Document doc = cfg::parse_text(text);
  Material m;
  const cfg::Section& root = doc.root();
  m.name = root.get("name");
  const std::string model = root.get("model");
  require(model == "tabulated" || model == "sellmeier", Err::ConfigError,
          "model must be 'tabulated' or 'sellmeier', got '" + model + "'");
  m.tabulated_model = model == "tabulated";
  const auto range = cfg::parse_number_list(root.get("valid_range_nm"));
  require(range.size() == 2 && range[0] > 0.0 && range[1] > range[0], Err::ConfigError,
          "valid_range_nm must be [lo, hi] with 0 < lo < hi");
  m.valid_lo_m = range[0] * 1e-9;
  m.valid_hi_m = range[1] * 1e-9;
  if (root.has("temperature_reference_k"))
    m.temperature_reference_k = cfg::parse_quantity(root.get("temperature_reference_k"));

  for (const auto& sec : doc.sections) {
    if (sec.name.rfind("axis ", 0) != 0) continue;
    const std::string axis_name = sec.name.substr(5);
    require(!axis_name.empty(), Err::ConfigError, "axis section needs a name");
    MaterialAxis ax;
    ax.tabulated = m.tabulated_model;
    ax.normal_dispersion = sec.has("normal_dispersion") && cfg::parse_bool(sec.get("normal_dispersion"));
    if (m.tabulated_model) {
      for (const std::string& raw : sec.get_all("entry")) {
        TabulatedEntry e;
        for (const auto& [k, v] : cfg::parse_inline_table(raw)) {
          if (k == "lambda_nm") e.lambda_m = cfg::parse_quantity(v) * 1e-9;
          else if (k == "n") e.n = cfg::parse_quantity(v);
          else if (k == "n_g") e.n_g = cfg::parse_quantity(v);
          else if (k == "kappa_s2_per_m") e.kappa_s2_per_m = cfg::parse_quantity(v);
          else fail(Err::ConfigError, "unknown entry field '" + k + "'");
        }
        require(e.lambda_m > 0.0 && e.n >= 1.0, Err::ConfigError,
                "entry needs lambda_nm and n >= 1");
        if (ax.normal_dispersion && e.n_g)
          require(*e.n_g >= e.n, Err::ConfigError,
                  "normal dispersion flagged but n_g < n at " +
                      cfg::format_double(e.lambda_m * 1e9) + " nm");
        if (ax.normal_dispersion && e.kappa_s2_per_m)
          require(*e.kappa_s2_per_m > 0.0 && std::isfinite(*e.kappa_s2_per_m), Err::ConfigError,
                  "normal dispersion flagged but kappa not finite positive");
        ax.entries.push_back(e);
      }
      require(!ax.entries.empty(), Err::ConfigError, "tabulated axis has no entries");
    } else {
      SellmeierSet s;
      const std::string variant = sec.get_or("variant", "standard");
      if (variant == "standard") s.variant = SellmeierVariant::Standard;
      else if (variant == "offset") s.variant = SellmeierVariant::Offset;
      else fail(Err::ConfigError, "unknown Sellmeier variant '" + variant + "'");
      s.constant = cfg::parse_quantity(sec.get_or("constant", "1"));
      if (sec.has("b")) s.b = cfg::parse_number_list(sec.get("b"));
      if (sec.has("c_um2")) s.c_um2 = cfg::parse_number_list(sec.get("c_um2"));
      s.d = cfg::parse_quantity(sec.get_or("d", "0"));
      require(s.b.size() == s.c_um2.size(), Err::ConfigError,
              "Sellmeier b and c_um2 lists must have equal length");
      ax.sellmeier = s;
    }
    m.axes[axis_name] = ax;
  }
  require(!m.axes.empty(), Err::ConfigError, "material has no [axis ...] sections");

  // n >= 1 across the valid range (sampled) for Sellmeier materials.
  for (const auto& [axis_name, ax] : m.axes) {
    if (ax.tabulated) continue;
    for (int i = 0; i <= 64; ++i) {
      const double lam = m.valid_lo_m + (m.valid_hi_m - m.valid_lo_m) * i / 64.0;
      const SellmeierEval ev = evaluate_sellmeier(ax.sellmeier, lam);
      require(ev.n >= 1.0, Err::ConfigError,
              "n < 1 within valid range on axis '" + axis_name + "'");
      if (ax.normal_dispersion) {
        const double ng = ev.n - lam * ev.dn_dlam;
        require(ng >= ev.n, Err::ConfigError,
                "normal dispersion flagged but n_g < n on axis '" + axis_name + "'");
        const double kap = lam * lam * lam * ev.d2n_dlam2 / (two_pi * c_light * c_light);
        require(std::isfinite(kap) && kap > 0.0, Err::ConfigError,
                "normal dispersion flagged but kappa not finite positive on axis '" +
                    axis_name + "'");
      }
    }
  }
  return m;
}

Material load_material(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::ConfigError, "cannot open material file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_material(ss.str());
}

std::string serialize_material(const Material& m) {
  std::ostringstream out;
  out << "name = " << m.name << "\n";
  out << "model = " << (m.tabulated_model ? "tabulated" : "sellmeier") << "\n";
  out << "valid_range_nm = [" << cfg::format_double_scaled(m.valid_lo_m, 1e-9) << ", "
      << cfg::format_double_scaled(m.valid_hi_m, 1e-9) << "]\n";
  if (m.temperature_reference_k)
    out << "temperature_reference_k = " << cfg::format_double(*m.temperature_reference_k) << "\n";
  for (const auto& [axis_name, ax] : m.axes) {
    out << "\n[axis " << axis_name << "]\n";
    if (ax.normal_dispersion) out << "normal_dispersion = true\n";
    if (ax.tabulated) {
      for (const auto& e : ax.entries) {
        out << "entry = { lambda_nm = " << cfg::format_double_scaled(e.lambda_m, 1e-9)
            << ", n = " << cfg::format_double(e.n);
        if (e.n_g) out << ", n_g = " << cfg::format_double(*e.n_g);
        if (e.kappa_s2_per_m)
          out << ", kappa_s2_per_m = " << cfg::format_double(*e.kappa_s2_per_m);
        out << " }\n";
      }
    } else {
      const SellmeierSet& s = ax.sellmeier;
      out << "variant = " << (s.variant == SellmeierVariant::Standard ? "standard" : "offset")
          << "\n";
      out << "constant = " << cfg::format_double(s.constant) << "\n";
      out << "b = [";
      for (size_t i = 0; i < s.b.size(); ++i)
        out << (i ? ", " : "") << cfg::format_double(s.b[i]);
      out << "]\n";
      out << "c_um2 = [";
      for (size_t i = 0; i < s.c_um2.size(); ++i)
        out << (i ? ", " : "") << cfg::format_double(s.c_um2[i]);
      out << "]\n";
      out << "d = " << cfg::format_double(s.d) << "\n";
    }
  }
  return out.str();
}

void save_material(const Material& m, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), Err::ConfigError, "cannot write material file '" + path + "'");
  out << serialize_material(m);
}

Material builtin_material(const std::string& name) {
  auto tab = [](const std::string& n, double lo_nm, double hi_nm, std::optional<double> temp_k) {
    Material m;
    m.name = n;
    m.tabulated_model = true;
    m.valid_lo_m = lo_nm * 1e-9;
    m.valid_hi_m = hi_nm * 1e-9;
    m.temperature_reference_k = temp_k;
    return m;
  };
  if (name == "vacuum") return Material::vacuum();
  if (name == "PPLN") {
    // Type-0 experiment: degenerate 782.09 nm -> 2 x 1564.18 nm, everything
    // on the z (extraordinary) axis, crystal held at 107.2 C.
    Material m = tab("PPLN", 700.0, 1700.0, 380.35);
    MaterialAxis ax;
    ax.normal_dispersion = true;
    ax.entries.push_back({782.09 * 1e-9, 2.195, std::nullopt, std::nullopt});
    ax.entries.push_back({1564.18 * 1e-9, 2.155, 2.200, 9.675e-26});
    m.axes["z"] = ax;
    return m;
  }
  if (name == "BiBO") {
    // Type-I experiment: 405 nm -> 2 x 810 nm; pump and pair indices happen
    // to coincide at phase matching.
    Material m = tab("BiBO", 380.0, 900.0, std::nullopt);
    MaterialAxis ax;
    ax.normal_dispersion = true;
    ax.entries.push_back({405.0 * 1e-9, 1.822, std::nullopt, std::nullopt});
    ax.entries.push_back({810.0 * 1e-9, 1.822, 1.866, 1.609e-25});
    m.axes["o"] = ax;
    return m;
  }
  if (name == "PPKTP") {
    // Type-II experiment: 773 nm -> 2 x 1546 nm, signal on y, idler on z.
    Material m = tab("PPKTP", 700.0, 1700.0, std::nullopt);
    MaterialAxis ay;
    ay.normal_dispersion = true;
    ay.entries.push_back({773.0 * 1e-9, 1.759, std::nullopt, std::nullopt});
    ay.entries.push_back({1546.0 * 1e-9, 1.736, 1.765, std::nullopt});
    m.axes["y"] = ay;
    MaterialAxis az;
    az.normal_dispersion = true;
    az.entries.push_back({1546.0 * 1e-9, 1.783, 1.815, std::nullopt});
    m.axes["z"] = az;
    return m;
  }
  fail(Err::ConfigError, "no builtin material named '" + name + "'");
}

} // namespace spdc
