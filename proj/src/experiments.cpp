#include "spdc/experiments.hpp"

#include "spdc/error.hpp"

namespace spdc::experiments {

SpdcConfig make_config(const RateInput& in) {
  SpdcConfig cfg;
  cfg.n1 = in.n1.value;
  cfg.n2 = in.n2.value;
  cfg.np = in.np.value;
  cfg.ng1 = in.ng1.value;
  cfg.ng2 = in.ng2.value;
  cfg.kappa = in.kappa.value;
  cfg.d_eff = in.d_eff.value;
  cfg.length_z = in.length_z.value;
  cfg.beam.lambda_p = in.lambda_p.value;
  cfg.beam.power = in.power;
  cfg.beam.sigma_p = in.sigma_p.value > 0.0 ? in.sigma_p.value : 1e-3;
  cfg.beam.sigma_1 = in.sigma_1.value > 0.0 ? in.sigma_1.value : 1e-3;
  cfg.beam.n_p = in.np.value;
  cfg.type = in.type;
  cfg.degenerate = true;
  cfg.poling.enabled = in.poled;
  cfg.poling.order = 1;
  return cfg;
}

std::vector<Measured> rate_input_vector(const RateInput& in) {
  return {in.lambda_p, in.d_eff, in.length_z, in.sigma_p, in.sigma_1,
          in.n1,       in.n2,    in.np,       in.ng1,     in.ng2,   in.kappa};
}

double rate_from_vector(const RateInput& base, const std::vector<double>& v) {
  require(v.size() == 11, Err::ConfigError, "rate input vector needs 11 entries");
  RateInput in = base;
  in.lambda_p.value = v[0];
  in.d_eff.value = v[1];
  in.length_z.value = v[2];
  in.sigma_p.value = v[3];
  in.sigma_1.value = v[4];
  in.n1.value = v[5];
  in.n2.value = v[6];
  in.np.value = v[7];
  in.ng1.value = v[8];
  in.ng2.value = v[9];
  in.kappa.value = v[10];
  const SpdcConfig cfg = make_config(in);
  RateResult r;
  switch (in.type) {
    case SpdcType::Type0:
      r = rate_sm_type01(cfg);
      break;
    case SpdcType::TypeI:
      r = rate_total_type1(cfg);
      break;
    case SpdcType::TypeII:
      r = rate_sm_type2(cfg);
      break;
  }
  return r.per_milliwatt;
}

Benchmark ppln_type0() {
  Benchmark b;
  b.name = "ppln_type0";
  b.input.lambda_p = {782.09e-9, 0.1e-9};
  b.input.d_eff = {23.95e-12, 1.20e-12};
  b.input.length_z = {40.0e-3, 0.001e-3};
  b.input.sigma_p = {52.6e-6, 2.0e-6};
  b.input.sigma_1 = {55.1e-6, 2.0e-6};
  b.input.n1 = {2.155, 0.001};
  b.input.n2 = {2.155, 0.001};
  b.input.np = {2.195, 0.001};
  b.input.ng1 = {2.200, 0.001};
  b.input.ng2 = {2.200, 0.001};
  b.input.kappa = {96.75e-27, 0.2e-27};
  b.input.type = SpdcType::Type0;
  b.input.poled = true;
  b.rate_published = 94.86e6;
  b.rate_sigma_published = 10.89e6;

  b.record.n1 = {16.00e6, 0.21e6};
  b.record.n2 = {17.99e6, 0.22e6};
  b.record.n12 = {2.93e6, 0.05e6};
  b.record.phi1 = {0.05e6, 0.0};
  b.record.phi2 = {0.06e6, 0.0};
  b.record.a12 = {0.02e6, 0.0};
  b.model.coupling_c = 0.807;
  b.model.heralding = 0.862;
  b.model.splitter.kind = SplitterKind::FiftyFifty;
  b.extracted_published = 95.63e6;
  b.extracted_sigma_published = 2.71e6;
  return b;
}

Benchmark bibo_type1() {
  Benchmark b;
  b.name = "bibo_type1";
  b.input.lambda_p = {405.0e-9, 1.0e-9};
  b.input.d_eff = {3.70e-12, 0.18e-12};
  b.input.length_z = {1.0e-3, 0.001e-3};
  b.input.sigma_p = {0.0, 0.0}; // multimode: no collection-mode radii
  b.input.sigma_1 = {0.0, 0.0};
  b.input.n1 = {1.822, 0.001};
  b.input.n2 = {1.822, 0.001};
  b.input.np = {1.822, 0.001};
  b.input.ng1 = {1.866, 0.001};
  b.input.ng2 = {1.866, 0.001};
  b.input.kappa = {160.9e-27, 0.2e-27};
  b.input.type = SpdcType::TypeI;
  b.input.poled = false;
  b.rate_published = 53.87e6;
  b.rate_sigma_published = 10.87e6;

  b.record.n1 = {6.16e5, 0.05e5};
  b.record.n2 = {6.02e5, 0.05e5};
  b.record.n12 = {2.71e3, 0.06e3};
  b.record.phi1 = {6.04e4, 0.15e4};
  b.record.phi2 = {6.40e4, 0.10e4};
  b.record.a12 = {4.39, 2.79};
  b.model.coupling_c = 1.0;
  b.model.heralding = 1.0;
  b.model.splitter.kind = SplitterKind::FiftyFifty;
  b.extracted_published = 64.68e6;
  b.extracted_sigma_published = 1.69e6;
  return b;
}

Benchmark ppktp_type2() {
  Benchmark b;
  b.name = "ppktp_type2";
  b.input.lambda_p = {773.0e-9, 1.0e-9};
  b.input.d_eff = {3.18e-12, 0.32e-12};
  b.input.length_z = {21.2e-3, 0.01e-3};
  b.input.sigma_p = {0.875e-6, 0.125e-6};
  b.input.sigma_1 = {1.875e-6, 0.125e-6};
  b.input.n1 = {1.736, 0.002};
  b.input.n2 = {1.783, 0.002};
  b.input.np = {1.759, 0.002};
  b.input.ng1 = {1.765, 0.002};
  b.input.ng2 = {1.815, 0.002};
  b.input.kappa = {0.0, 0.0}; // linear mismatch dominates; GVD not quoted
  b.input.type = SpdcType::TypeII;
  b.input.poled = true;
  b.rate_published = 23.58e6;
  b.rate_sigma_published = 5.60e6;

  b.record.n1 = {3.71e6, 0.05e6};
  b.record.n2 = {4.51e6, 0.05e6};
  b.record.n12 = {4.71e5, 0.07e5};
  b.record.phi1 = {0.0, 0.0};
  b.record.phi2 = {0.0, 0.0};
  b.record.a12 = {0.0, 0.0};
  b.model.coupling_c = 1.0;
  b.model.heralding = 1.0;
  b.model.splitter.kind = SplitterKind::Polarizing;
  b.extracted_published = 35.5e6;
  b.extracted_sigma_published = 0.8e6;
  return b;
}

} // namespace spdc::experiments
