#ifndef SPDC_EXPERIMENTS_HPP
#define SPDC_EXPERIMENTS_HPP

#include "spdc/detection.hpp"
#include "spdc/rates.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spdc::experiments {

// Central values and standard uncertainties for the three benchmark sources,
// plus their measured count records. These mirror the shipped data files.
struct RateInput {
  Measured lambda_p;  // m
  Measured d_eff;     // m/V
  Measured length_z;  // m
  Measured sigma_p;   // m (zero for the multimode source)
  Measured sigma_1;   // m
  Measured n1, n2, np;
  Measured ng1, ng2;
  Measured kappa;     // s^2/m
  SpdcType type = SpdcType::Type0;
  bool poled = false;
  double power = 1e-3; // rates are quoted per mW
};

struct Benchmark {
  std::string name;
  RateInput input;
  double rate_published;       // 1/s/mW
  double rate_sigma_published; // 1/s/mW
  DetectionRecord record;
  DetectionModel model;
  double extracted_published;       // 1/s/mW
  double extracted_sigma_published; // 1/s/mW
};

Benchmark ppln_type0();
Benchmark bibo_type1();
Benchmark ppktp_type2();

// Central-value SpdcConfig for a benchmark.
SpdcConfig make_config(const RateInput& in);

// The closed-form rate as a function of the perturbed input vector, in the
// order lambda_p, d_eff, L_z, sigma_p, sigma_1, n1, n2, np, ng1, ng2, kappa.
std::vector<Measured> rate_input_vector(const RateInput& in);
double rate_from_vector(const RateInput& base, const std::vector<double>& v);

} // namespace spdc::experiments

#endif
