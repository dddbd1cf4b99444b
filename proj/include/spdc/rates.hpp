#ifndef SPDC_RATES_HPP
#define SPDC_RATES_HPP

#include "spdc/beams.hpp"
#include "spdc/phasematch.hpp"

#include <string>
#include <vector>

namespace spdc {

enum class SpdcType { Type0, TypeI, TypeII };
enum class RateRegime { SingleMode, MultiModeTotal, NarrowFiltered, PeakResonance };

struct SpdcConfig {
  double n1 = 0.0, n2 = 0.0, np = 0.0;
  double ng1 = 0.0, ng2 = 0.0;
  double kappa = 0.0; // s^2/m, GVD at the down-conversion center
  double d_eff = 0.0; // m/V
  // Published d_eff for periodically poled media sometimes already folds in
  // the 2/(n pi) Fourier factor; refuse to apply it twice.
  bool d_eff_includes_qpm = false;
  double length_z = 0.0; // m
  BeamConfig beam;
  PolingConfig poling;
  SpdcType type = SpdcType::Type0;
  bool degenerate = true;
  double phi_multimode = 0.335; // biphoton broadening constant, configurable

  double delta_ng() const { return ng1 > ng2 ? ng1 - ng2 : ng2 - ng1; }
  double omega_p() const;
  double qpm_factor() const; // X_n^2 or 1, honouring d_eff_includes_qpm
};

struct RateResult {
  double pairs_per_second = 0.0;
  double per_milliwatt = 0.0;
  RateRegime regime = RateRegime::SingleMode;
  std::string provenance;
  bool upper_bound = false;
  std::vector<std::string> warnings;
};

void validate(const SpdcConfig& cfg);

// Closed form for degenerate type-0/type-I collection into one gaussian mode.
RateResult rate_sm_type01(const SpdcConfig& cfg);

// Closed form for degenerate type-II; a documented upper bound.
RateResult rate_sm_type2(const SpdcConfig& cfg);

// Adaptive quadrature of the underlying frequency integral; the oracle the
// closed forms are checked against.
RateResult rate_sm_quadrature(const SpdcConfig& cfg);

struct MultimodeRatio {
  double exact;
  double thin_crystal_approx; // L lambda_p / (4 pi n_p sigma_p^2)
};
MultimodeRatio multimode_ratio(double sigma_p, double length_z, double lambda_p, double np);

// Total rate over all transverse modes for collinear type-0/I.
RateResult rate_total_type1(const SpdcConfig& cfg);

// Narrowband spectral filter around degeneracy: Sinc^2 -> 1 over the passband.
RateResult rate_narrowband_filtered(const SpdcConfig& cfg, double filter_bandwidth_rad_s);

// Tan^-1(xi): relative single-mode brightness versus pump focal parameter,
// normalised so the factor approaches xi itself in the collimated limit.
double focused_relative_factor(double xi);

// Bulk formulas with waveguide mode sizes sigma = MFD/4.
RateResult waveguide_rate(const SpdcConfig& cfg, double mfd_pump, double mfd_collect);

// Internals shared with the squeezing consistency check: the single-mode
// rate is prefactor * integral(omega_1 w(omega_1) d omega_1).
double sm_rate_prefactor(const SpdcConfig& cfg); // units: rate per integral unit
double sm_integrand(const SpdcConfig& cfg, double omega_1);
double natural_bandwidth(const SpdcConfig& cfg); // FWHM of the Sinc^2 weight, rad/s

struct SweepPoint {
  std::string parameter;
  double value;
  RateResult rate;
};

} // namespace spdc

#endif
