// Command-line front end: rate, mrr, deplete, squeeze, extract, qpm.
// Exit codes: 0 success, 2 configuration error, 3 numerical convergence failure.

#include "spdc/cavity.hpp"
#include "spdc/config.hpp"
#include "spdc/constants.hpp"
#include "spdc/depletion.hpp"
#include "spdc/detection.hpp"
#include "spdc/error.hpp"
#include "spdc/materials.hpp"
#include "spdc/phasematch.hpp"
#include "spdc/rates.hpp"
#include "spdc/squeezing.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using spdc::cfg::format_double;

struct Options {
  std::string command;
  std::string config_path;
  std::string output_path;
  std::string record_path;
  std::string model_path;
  std::string format = "keyvalue";
  uint64_t seed = 12345;
  long samples = 20000;
  bool oracle = false;
  std::string sweep_param;
  double sweep_lo = 0.0, sweep_hi = 0.0;
  int sweep_steps = 0;
};

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n"
            << "usage: spdctool <rate|mrr|deplete|squeeze|extract|qpm> [options]\n"
               "  --config PATH        configuration file\n"
               "  --output PATH        write CSV/summary here instead of stdout\n"
               "  --format csv|keyvalue\n"
               "  --seed N             RNG seed for stochastic commands\n"
               "  --samples N          Monte Carlo samples (extract)\n"
               "  --oracle             also run the quadrature oracle (rate)\n"
               "  --sweep P LO..HI N   sweep parameter P over N steps (rate)\n"
               "  --record PATH        detection record file (extract)\n"
               "  --model PATH         detection model file (extract)\n";
  std::exit(2);
}

Options parse_args(int argc, char** argv) {
  if (argc < 2) usage_error("missing subcommand");
  Options o;
  o.command = argv[1];
  for (int i = 2; i < argc; ++i) {
    const std::string a = argv[i];
    auto next = [&](const char* what) -> std::string {
      if (i + 1 >= argc) usage_error(std::string("missing value for ") + what);
      return argv[++i];
    };
    if (a == "--config") o.config_path = next("--config");
    else if (a == "--output") o.output_path = next("--output");
    else if (a == "--record") o.record_path = next("--record");
    else if (a == "--model") o.model_path = next("--model");
    else if (a == "--format") o.format = next("--format");
    else if (a == "--seed") o.seed = std::stoull(next("--seed"));
    else if (a == "--samples") o.samples = std::stol(next("--samples"));
    else if (a == "--oracle") o.oracle = true;
    else if (a == "--sweep") {
      o.sweep_param = next("--sweep");
      const std::string range = next("range");
      const size_t dots = range.find("..");
      if (dots == std::string::npos) usage_error("sweep range must look like LO..HI");
      o.sweep_lo = spdc::cfg::parse_quantity(range.substr(0, dots));
      o.sweep_hi = spdc::cfg::parse_quantity(range.substr(dots + 2));
      o.sweep_steps = std::stoi(next("steps"));
      if (o.sweep_steps < 2) usage_error("sweep needs at least 2 steps");
    } else {
      usage_error("unknown flag '" + a + "'");
    }
  }
  return o;
}

std::string dir_of(const std::string& path) {
  const size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

class Output {
public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      spdc::require(file_.good(), spdc::Err::ConfigError, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

double get_qty(const spdc::cfg::Section& sec, const std::string& key) {
  return spdc::cfg::parse_quantity(sec.get(key));
}

double get_qty_or(const spdc::cfg::Section& sec, const std::string& key, double def) {
  return sec.has(key) ? spdc::cfg::parse_quantity(sec.get(key)) : def;
}

struct RateSetup {
  spdc::SpdcConfig cfg;
  bool multimode_total = false;
};

RateSetup load_rate_setup(const spdc::cfg::Document& doc, const std::string& config_dir) {
  const spdc::cfg::Section& sec = doc.section("spdc");
  RateSetup setup;
  spdc::SpdcConfig& cfg = setup.cfg;

  const std::string type = sec.get("type");
  if (type == "type0") cfg.type = spdc::SpdcType::Type0;
  else if (type == "type1") cfg.type = spdc::SpdcType::TypeI;
  else if (type == "type2") cfg.type = spdc::SpdcType::TypeII;
  else spdc::fail(spdc::Err::ConfigError, "spdc.type must be type0|type1|type2");

  cfg.degenerate = !sec.has("degenerate") || spdc::cfg::parse_bool(sec.get("degenerate"));
  setup.multimode_total = sec.has("multimode_total") && spdc::cfg::parse_bool(sec.get("multimode_total"));

  cfg.beam.lambda_p = get_qty(sec, "lambda_p");
  cfg.beam.power = get_qty_or(sec, "power", 1e-3);
  cfg.beam.sigma_p = get_qty_or(sec, "sigma_p", 1e-3);
  cfg.beam.sigma_1 = get_qty_or(sec, "sigma_1", cfg.beam.sigma_p);
  cfg.d_eff = get_qty(sec, "d_eff");
  cfg.length_z = get_qty(sec, "L_z");
  cfg.phi_multimode = get_qty_or(sec, "phi", 0.335);
  cfg.d_eff_includes_qpm =
      sec.has("d_eff_includes_qpm") && spdc::cfg::parse_bool(sec.get("d_eff_includes_qpm"));

  if (sec.has("material")) {
    std::string mat_path = sec.get("material");
    if (!mat_path.empty() && mat_path.front() != '/') mat_path = config_dir + "/" + mat_path;
    const spdc::Material mat = spdc::load_material(mat_path);
    const double lambda_dc = 2.0 * cfg.beam.lambda_p; // degenerate pair wavelength
    spdc::OpticalQuery qp{cfg.beam.lambda_p, sec.get_or("axis_pump", ""), {}};
    spdc::OpticalQuery q1{lambda_dc, sec.get_or("axis_signal", ""), {}};
    spdc::OpticalQuery q2{lambda_dc, sec.get_or("axis_idler", ""), {}};
    cfg.np = spdc::phase_index(mat, qp);
    cfg.n1 = spdc::phase_index(mat, q1);
    cfg.n2 = spdc::phase_index(mat, q2);
    cfg.ng1 = spdc::group_index(mat, q1);
    cfg.ng2 = spdc::group_index(mat, q2);
    if (cfg.type != spdc::SpdcType::TypeII) cfg.kappa = spdc::gvd(mat, q1);
  }
  // direct numeric overrides win over material resolution
  if (sec.has("n1")) cfg.n1 = get_qty(sec, "n1");
  if (sec.has("n2")) cfg.n2 = get_qty(sec, "n2");
  if (sec.has("np")) cfg.np = get_qty(sec, "np");
  if (sec.has("ng1")) cfg.ng1 = get_qty(sec, "ng1");
  if (sec.has("ng2")) cfg.ng2 = get_qty(sec, "ng2");
  if (sec.has("kappa")) cfg.kappa = get_qty(sec, "kappa");
  cfg.beam.n_p = cfg.np;

  cfg.poling.enabled = sec.has("poling") && spdc::cfg::parse_bool(sec.get("poling"));
  if (cfg.poling.enabled) {
    cfg.poling.order = static_cast<int>(get_qty_or(sec, "poling_order", 1));
    cfg.poling.period = get_qty_or(sec, "poling_period", 0.0);
  }
  spdc::validate(cfg);
  return setup;
}

spdc::RateResult run_rate(const RateSetup& setup) {
  if (setup.multimode_total) return spdc::rate_total_type1(setup.cfg);
  if (setup.cfg.type == spdc::SpdcType::TypeII) return spdc::rate_sm_type2(setup.cfg);
  return spdc::rate_sm_type01(setup.cfg);
}

const char* regime_name(spdc::RateRegime r) {
  switch (r) {
    case spdc::RateRegime::SingleMode: return "single_mode";
    case spdc::RateRegime::MultiModeTotal: return "multimode_total";
    case spdc::RateRegime::NarrowFiltered: return "narrow_filtered";
    case spdc::RateRegime::PeakResonance: return "peak_resonance";
  }
  return "unknown";
}

void apply_sweep_value(spdc::SpdcConfig& cfg, const std::string& param, double value) {
  if (param == "L_z") cfg.length_z = value;
  else if (param == "power") cfg.beam.power = value;
  else if (param == "sigma_p") cfg.beam.sigma_p = value;
  else if (param == "sigma_1") cfg.beam.sigma_1 = value;
  else if (param == "d_eff") cfg.d_eff = value;
  else if (param == "lambda_p") cfg.beam.lambda_p = value;
  else spdc::fail(spdc::Err::ConfigError, "unknown sweep parameter '" + param + "'");
}

int cmd_rate(const Options& opt) {
  spdc::require(!opt.config_path.empty(), spdc::Err::ConfigError, "rate needs --config");
  const auto doc = spdc::cfg::parse_file(opt.config_path);
  RateSetup setup = load_rate_setup(doc, dir_of(opt.config_path));
  Output out(opt.output_path);

  if (!opt.sweep_param.empty()) {
    out.stream() << "parameter,value,rate_pairs_per_s_per_mW,regime,provenance\n";
    for (int i = 0; i < opt.sweep_steps; ++i) {
      const double v = opt.sweep_lo + (opt.sweep_hi - opt.sweep_lo) * i / (opt.sweep_steps - 1);
      RateSetup point = setup;
      apply_sweep_value(point.cfg, opt.sweep_param, v);
      const spdc::RateResult r = run_rate(point);
      out.stream() << opt.sweep_param << ',' << format_double(v) << ','
                   << format_double(r.per_milliwatt) << ',' << regime_name(r.regime) << ",\""
                   << r.provenance << "\"\n";
    }
    return 0;
  }

  const spdc::RateResult r = run_rate(setup);
  std::ostream& os = out.stream();
  if (opt.format == "csv") {
    os << "parameter,value,rate_pairs_per_s_per_mW,regime,provenance\n";
    os << "none,0," << format_double(r.per_milliwatt) << ',' << regime_name(r.regime) << ",\""
       << r.provenance << "\"\n";
    return 0;
  }
  spdc::require(opt.format == "keyvalue", spdc::Err::ConfigError,
                "--format must be csv or keyvalue");
  os << "pairs_per_second = " << format_double(r.pairs_per_second) << "\n";
  os << "pairs_per_second_per_mw = " << format_double(r.per_milliwatt) << "\n";
  os << "regime = " << regime_name(r.regime) << "\n";
  os << "provenance = " << r.provenance << "\n";
  if (r.upper_bound) os << "upper_bound = true\n";
  for (const auto& w : r.warnings) os << "warning = " << w << "\n";
  if (opt.oracle) {
    const spdc::RateResult q = spdc::rate_sm_quadrature(setup.cfg);
    os << "oracle_pairs_per_second = " << format_double(q.pairs_per_second) << "\n";
    os << "closed_over_oracle = "
       << format_double(r.pairs_per_second / q.pairs_per_second) << "\n";
  }
  return 0;
}

int cmd_mrr(const Options& opt) {
  spdc::require(!opt.config_path.empty(), spdc::Err::ConfigError, "mrr needs --config");
  const auto doc = spdc::cfg::parse_file(opt.config_path);
  const spdc::cfg::Section& sec = doc.section("ring");

  const double rho = get_qty(sec, "rho");
  double length = 0.0;
  if (sec.has("length")) length = get_qty(sec, "length");
  else length = spdc::two_pi * get_qty(sec, "radius");
  const double ng = get_qty_or(sec, "n_g1", get_qty_or(sec, "n_g", 2.0));
  double gamma = 0.0;
  if (sec.has("gamma")) gamma = get_qty(sec, "gamma");
  else if (sec.has("alpha")) {
    const double alpha = get_qty(sec, "alpha");
    spdc::require(alpha > 0.0 && alpha <= 1.0, spdc::Err::ConfigError, "alpha must be in (0, 1]");
    gamma = -2.0 * std::log(alpha) / length;
  }
  const double theta_p = get_qty_or(sec, "theta_p", 0.0);
  const double buildup = get_qty_or(sec, "buildup_B", 1.0);
  const double squeeze_r = get_qty_or(sec, "r", 0.0);
  const spdc::RingConfig ring =
      spdc::make_ring(rho, gamma, length, ng, theta_p, buildup, squeeze_r);

  const double lambda_p = get_qty(sec, "lambda_p");
  const double omega_p = spdc::omega_from_lambda(lambda_p);
  const double d_eff = get_qty(sec, "d_eff");
  const double lx = get_qty(sec, "L_x");
  const double ly = get_qty(sec, "L_y");
  const double n1 = get_qty(sec, "n_1");
  const double n2 = get_qty(sec, "n_2");
  const double np = get_qty(sec, "n_p");
  const double ng1 = get_qty_or(sec, "n_g1", ng);
  const double ng2 = get_qty_or(sec, "n_g2", ng);
  const double power = get_qty_or(sec, "power", 1e-3);

  const spdc::RateResult peak = spdc::peak_pair_rate(2.0 * d_eff, ng1, ng2, n1, n2, np, omega_p,
                                                     lx, ly, length, rho, buildup, power);

  const double t_dc = ring.t_dc();
  if (!opt.output_path.empty()) {
    int spf = 512, fsrs = 1;
    if (doc.has_section("output")) {
      const auto& osec = doc.section("output");
      spf = static_cast<int>(get_qty_or(osec, "spectrum_samples_per_fsr", 512));
      fsrs = static_cast<int>(get_qty_or(osec, "spectrum_fsr_count", 1));
    }
    const double fsr_theta = spdc::two_pi;
    std::vector<double> nu_grid(static_cast<size_t>(spf) * fsrs + 1);
    for (size_t i = 0; i < nu_grid.size(); ++i) {
      const double theta = -0.5 * fsr_theta * fsrs + fsr_theta * fsrs * static_cast<double>(i) /
                                                        (nu_grid.size() - 1);
      nu_grid[i] = theta / t_dc;
    }
    const std::vector<double> spectrum = spdc::biphoton_spectrum(ring, nu_grid);
    Output csv(opt.output_path);
    csv.stream() << "theta,psi_ab_sq\n";
    for (size_t i = 0; i < nu_grid.size(); ++i)
      csv.stream() << format_double(nu_grid[i] * t_dc) << ',' << format_double(spectrum[i])
                   << "\n";
  }

  std::cout << "peak_pair_rate_per_s = " << format_double(peak.pairs_per_second) << "\n";
  std::cout << "peak_pair_rate_per_s_per_mw = " << format_double(peak.per_milliwatt) << "\n";
  std::cout << "eta_r = " << format_double(spdc::heralding_efficiency(ring, 0.0, false)) << "\n";
  try {
    // the numeric D/J ratio diverges 0/0 exactly at critical coupling on
    // resonance, where only the closed-form limit applies
    std::cout << "eta_r_exact_on_resonance = "
              << format_double(spdc::heralding_efficiency(ring, 0.0, true)) << "\n";
  } catch (const spdc::Error&) {
  }
  std::cout << "r_thresh = " << format_double(spdc::opo_threshold(gamma, length, rho)) << "\n";
  std::cout << "alpha = " << format_double(ring.alpha()) << "\n";
  std::cout << "t_dc_s = " << format_double(t_dc) << "\n";
  const spdc::RingTransfer on_res = spdc::ring_transfer(ring, 0.0);
  std::cout << "transmission_on_resonance = " << format_double(std::abs(on_res.g)) << "\n";

  if (doc.has_section("output") && doc.section("output").has("transmission_csv") &&
      spdc::cfg::parse_bool(doc.section("output").get("transmission_csv")) &&
      !opt.output_path.empty()) {
    Output csv(opt.output_path + ".transmission.csv");
    csv.stream() << "theta,g_mag\n";
    const int points = 512;
    for (int i = 0; i <= points; ++i) {
      const double theta = -spdc::pi + spdc::two_pi * i / points;
      csv.stream() << format_double(theta) << ','
                   << format_double(std::abs(spdc::ring_transfer(ring, theta).g)) << "\n";
    }
  }

  if (doc.has_section("output") && doc.section("output").has("time_correlations") &&
      spdc::cfg::parse_bool(doc.section("output").get("time_correlations"))) {
    const auto& osec = doc.section("output");
    const double kappa = get_qty_or(osec, "kappa", 1e-25);
    const int fsrs = static_cast<int>(get_qty_or(osec, "timecorr_fsr_count", 64));
    const int spf = static_cast<int>(get_qty_or(osec, "timecorr_samples_per_fsr", 1024));
    const spdc::TimeCorrelations tc = spdc::time_correlations(ring, kappa, fsrs, spf);
    if (!opt.output_path.empty()) {
      Output csv(opt.output_path + ".timecorr.csv");
      csv.stream() << "t_minus,psi_sq\n";
      for (size_t i = 0; i < tc.t_minus.size(); ++i)
        csv.stream() << format_double(tc.t_minus[i]) << ',' << format_double(tc.intensity[i])
                     << "\n";
    }
    std::cout << "tine_spacing_paper_s = " << format_double(tc.summary.tine_spacing_paper)
              << "\n";
    std::cout << "tine_spacing_measured_s = "
              << format_double(tc.summary.tine_spacing_measured) << "\n";
    std::cout << "envelope_decay_fit_per_s = " << format_double(tc.summary.envelope_decay_fit)
              << "\n";
    std::cout << "envelope_decay_analytic_per_s = "
              << format_double(tc.summary.envelope_decay_analytic) << "\n";
    std::cout << "tines_to_1_over_e = " << format_double(tc.summary.tines_to_1_over_e) << "\n";
  }
  return 0;
}

int cmd_deplete(const Options& opt) {
  spdc::require(!opt.config_path.empty(), spdc::Err::ConfigError, "deplete needs --config");
  const auto doc = spdc::cfg::parse_file(opt.config_path);
  const spdc::cfg::Section& sec = doc.section("depletion");

  spdc::DepletionSpec spec;
  spec.g_squared = get_qty(sec, "g_squared");
  spec.n_p0 = get_qty(sec, "n_p0");
  spec.tolerance = get_qty_or(sec, "tolerance", 1e-10);

  const spdc::DepletionTime td = spdc::depletion_time(spec);
  spec.t_max = td.quadrature * get_qty_or(sec, "t_max_over_td", 1.1);
  const spdc::DepletionTrajectory traj = spdc::integrate_depletion(spec);

  if (!opt.output_path.empty()) {
    Output csv(opt.output_path);
    csv.stream() << "t_over_TD,N1_ode,sinh_approx,sech_approx,hybrid\n";
    const int points = static_cast<int>(get_qty_or(sec, "trajectory_points", 200));
    size_t cursor = 0;
    for (int i = 0; i <= points; ++i) {
      const double t = spec.t_max * i / points;
      while (cursor + 1 < traj.t.size() && traj.t[cursor + 1] <= t) ++cursor;
      // linear interpolation between accepted steps
      double n1 = traj.n1[cursor];
      if (cursor + 1 < traj.t.size() && traj.t[cursor + 1] > traj.t[cursor]) {
        const double w = (t - traj.t[cursor]) / (traj.t[cursor + 1] - traj.t[cursor]);
        n1 = traj.n1[cursor] + w * (traj.n1[cursor + 1] - traj.n1[cursor]);
      }
      const spdc::RegimeValues rv = spdc::regime_approximations(spec, t, td.quadrature);
      csv.stream() << format_double(t / td.quadrature) << ',' << format_double(n1) << ','
                   << format_double(rv.sinh_approx) << ',' << format_double(rv.sech_approx)
                   << ',' << format_double(rv.hybrid) << "\n";
    }
  }

  std::cout << "t_depletion_quadrature_s = " << format_double(td.quadrature) << "\n";
  std::cout << "t_depletion_elliptic_s = " << format_double(td.elliptic) << "\n";
  std::cout << "n1_max = " << format_double(traj.n1_max) << "\n";
  std::cout << "n1_ceiling_np_over_2 = " << format_double(0.5 * spec.n_p0 + 0.5) << "\n";
  return 0;
}

int cmd_squeeze(const Options& opt) {
  spdc::require(!opt.config_path.empty(), spdc::Err::ConfigError, "squeeze needs --config");
  const auto doc = spdc::cfg::parse_file(opt.config_path);
  const spdc::cfg::Section& sec = doc.section("squeezing");
  const double r = get_qty(sec, "r");
  const int n_max = static_cast<int>(get_qty_or(sec, "n_max", 20));

  if (!opt.output_path.empty()) {
    Output csv(opt.output_path);
    csv.stream() << "n,p\n";
    for (int n = 0; n <= n_max; ++n)
      csv.stream() << n << ',' << format_double(spdc::tmsv_pmf(r, n)) << "\n";
  }
  std::cout << "r = " << format_double(r) << "\n";
  std::cout << "mean_pairs = " << format_double(std::sinh(r) * std::sinh(r)) << "\n";
  std::cout << "multi_pair_ratio = " << format_double(spdc::multi_pair_ratio(r)) << "\n";
  if (sec.has("power") && sec.has("lambda_p") && sec.has("L_z") && sec.has("n_p")) {
    const double np_mean = spdc::mean_pump_photons(
        get_qty(sec, "power"), spdc::omega_from_lambda(get_qty(sec, "lambda_p")),
        get_qty(sec, "L_z"), get_qty(sec, "n_p"));
    std::cout << "mean_pump_photons = " << format_double(np_mean) << "\n";
  }
  return 0;
}

int cmd_extract(const Options& opt) {
  spdc::require(!opt.record_path.empty() && !opt.model_path.empty(), spdc::Err::ConfigError,
                "extract needs --record and --model");
  const spdc::DetectionRecord rec = spdc::load_record(opt.record_path);
  const spdc::DetectionModel model = spdc::load_model(opt.model_path);
  if (!spdc::record_is_consistent(rec))
    std::cout << "warning = coincidences exceed a singles channel after background subtraction\n";
  const spdc::Measured n =
      spdc::extract_pair_rate(rec, model, static_cast<int>(opt.samples), opt.seed);
  std::cout << "pair_rate_hz = " << format_double(n.value) << "\n";
  std::cout << "pair_rate_sigma_hz = " << format_double(n.sigma) << "\n";
  return 0;
}

int cmd_qpm(const Options& opt) {
  spdc::require(!opt.config_path.empty(), spdc::Err::ConfigError, "qpm needs --config");
  const auto doc = spdc::cfg::parse_file(opt.config_path);
  const spdc::cfg::Section& sec = doc.section("qpm");
  const int order = static_cast<int>(get_qty_or(sec, "order", 1));

  std::cout << "order = " << order << "\n";
  std::cout << "fourier_amp = " << format_double(spdc::qpm_fourier_amp(order)) << "\n";
  std::cout << "rate_factor = " << format_double(spdc::qpm_rate_factor(order)) << "\n";
  if (sec.has("delta_k"))
    std::cout << "poling_period_m = "
              << format_double(spdc::poling_period_for(get_qty(sec, "delta_k"), order)) << "\n";

  if (!opt.output_path.empty()) {
    const double grid_max = get_qty_or(sec, "grid_max", 6.0);
    const int points = static_cast<int>(get_qty_or(sec, "grid_points", 600));
    std::vector<double> grid(static_cast<size_t>(points) + 1);
    for (size_t i = 0; i < grid.size(); ++i)
      grid[i] = grid_max * static_cast<double>(i) / points;
    const auto curve = spdc::qpm_growth_curve(grid);
    Output csv(opt.output_path);
    csv.stream() << "L_over_Lambda,unpoled,poled,parabolic_approx\n";
    for (const auto& p : curve)
      csv.stream() << format_double(p.length_over_period) << ',' << format_double(p.unpoled)
                   << ',' << format_double(p.poled) << ',' << format_double(p.parabolic_approx)
                   << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  try {
    const Options opt = parse_args(argc, argv);
    if (opt.command == "rate") return cmd_rate(opt);
    if (opt.command == "mrr") return cmd_mrr(opt);
    if (opt.command == "deplete") return cmd_deplete(opt);
    if (opt.command == "squeeze") return cmd_squeeze(opt);
    if (opt.command == "extract") return cmd_extract(opt);
    if (opt.command == "qpm") return cmd_qpm(opt);
    usage_error("unknown subcommand '" + opt.command + "'");
  } catch (const spdc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const spdc::Err c = e.code();
    if (c == spdc::Err::QuadratureNonConvergent || c == spdc::Err::ToleranceNotMet) return 3;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
