#ifndef SPDC_DETECTION_HPP
#define SPDC_DETECTION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace spdc {

enum class SplitterKind { FiftyFifty, Asymmetric, Polarizing };

struct Splitter {
  SplitterKind kind = SplitterKind::FiftyFifty;
  double gamma_t = 0.5; // transmitted fraction (asymmetric only)
  double gamma_r = 0.5;
};

struct SplitterEfficiencies {
  double beta1;  // P(at least one photon of the pair exits arm 1)
  double beta2;
  double beta12; // P(the pair splits across both arms)
};

SplitterEfficiencies splitter_efficiencies(const Splitter& s);

struct DetectionModel {
  double coupling_c = 1.0;  // C
  double heralding = 1.0;   // eta, coincidence coupling C12 = eta C
  double e1 = 1.0, e2 = 1.0;
  double phi1 = 0.0, phi2 = 0.0; // uncorrelated background rates, 1/s
  double a12 = 0.0;              // accidental coincidence rate, 1/s
  Splitter splitter;

  void check() const;
};

struct Measured {
  double value = 0.0;
  double sigma = 0.0;
};

struct DetectionRecord {
  Measured n1, n2, n12;    // measured rates, 1/s
  Measured phi1, phi2, a12;
};

struct PredictedCounts {
  double n1, n2, n12;
};

// N1 = N E1 C b1 + Phi1;  N2 = N E2 C b2 + Phi2;  N12 = N E1 E2 eta C b12 + A12
PredictedCounts predict_counts(double pair_rate, const DetectionModel& model);

// Closed-form inverse; sigma via Gaussian resampling of the record.
Measured extract_pair_rate(const DetectionRecord& rec, const DetectionModel& model,
                           int mc_samples = 20000, uint64_t seed = 20240117);
double extract_pair_rate_central(const DetectionRecord& rec, const DetectionModel& model);

// Poisson pair arrivals routed photon-by-photon through the splitter with
// correlated coupling; deterministic for a given seed.
DetectionRecord monte_carlo_coincidences(double pair_rate, const DetectionModel& model,
                                         double duration, uint64_t seed);

// Gaussian-input Monte Carlo through an arbitrary scalar formula.
Measured propagate_uncertainty(const std::vector<Measured>& inputs,
                               const std::function<double(const std::vector<double>&)>& formula,
                               long samples, uint64_t seed);

// false when background-subtracted coincidences exceed a singles channel
bool record_is_consistent(const DetectionRecord& rec);

std::string serialize_record(const DetectionRecord& rec);
DetectionRecord parse_record(const std::string& text);
DetectionRecord load_record(const std::string& path);
std::string serialize_model(const DetectionModel& model);
DetectionModel parse_model(const std::string& text);
DetectionModel load_model(const std::string& path);

} // namespace spdc

#endif
