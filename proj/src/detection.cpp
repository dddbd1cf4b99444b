#include "spdc/detection.hpp"

#include "spdc/config.hpp"
#include "spdc/error.hpp"
#include "spdc/numerics/rng.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace spdc {

SplitterEfficiencies splitter_efficiencies(const Splitter& s) {
  switch (s.kind) {
    case SplitterKind::Polarizing:
      return {1.0, 1.0, 1.0};
    case SplitterKind::FiftyFifty:
      return {0.75, 0.75, 0.5};
    case SplitterKind::Asymmetric: {
      require(s.gamma_t >= 0.0 && s.gamma_r >= 0.0 &&
                  std::abs(s.gamma_t + s.gamma_r - 1.0) <= 1e-12,
              Err::ConfigError, "asymmetric splitter needs gamma_t + gamma_r = 1");
      const double gt = s.gamma_t, gr = s.gamma_r;
      return {gt * gt + 2.0 * gt * gr, gr * gr + 2.0 * gt * gr, 2.0 * gt * gr};
    }
  }
  fail(Err::ConfigError, "unknown splitter kind");
}

void DetectionModel::check() const {
  auto unit = [](double v, const char* what) {
    require(v >= 0.0 && v <= 1.0, Err::ConfigError, std::string(what) + " must lie in [0, 1]");
  };
  unit(coupling_c, "C");
  unit(heralding, "eta");
  unit(e1, "E1");
  unit(e2, "E2");
  require(phi1 >= 0.0 && phi2 >= 0.0 && a12 >= 0.0, Err::ConfigError,
          "background rates must be >= 0");
  if (splitter.kind == SplitterKind::Asymmetric)
    require(std::abs(splitter.gamma_t + splitter.gamma_r - 1.0) <= 1e-12, Err::ConfigError,
            "gamma_t + gamma_r must equal 1");
  // Conditional coupling P(2nd | 1st failed) = C(1 - eta)/(1 - C) must be a
  // probability for the correlated-coupling decomposition to exist.
  if (coupling_c < 1.0)
    require(coupling_c * (1.0 - heralding) <= 1.0 - coupling_c, Err::ConfigError,
            "C and eta incompatible: C (1 - eta) > 1 - C");
}

PredictedCounts predict_counts(double pair_rate, const DetectionModel& model) {
  require(pair_rate >= 0.0, Err::NonPositiveInput, "pair rate must be >= 0");
  model.check();
  const SplitterEfficiencies b = splitter_efficiencies(model.splitter);
  PredictedCounts c;
  c.n1 = pair_rate * model.e1 * model.coupling_c * b.beta1 + model.phi1;
  c.n2 = pair_rate * model.e2 * model.coupling_c * b.beta2 + model.phi2;
  c.n12 = pair_rate * model.e1 * model.e2 * model.heralding * model.coupling_c * b.beta12 +
          model.a12;
  return c;
}

double extract_pair_rate_central(const DetectionRecord& rec, const DetectionModel& model) {
  model.check();
  const SplitterEfficiencies b = splitter_efficiencies(model.splitter);
  const double coinc = rec.n12.value - rec.a12.value;
  require(coinc > 0.0, Err::NoCoincidences, "N12 does not exceed the accidental rate");
  require(model.coupling_c > 0.0, Err::ConfigError, "C must be positive to invert");
  return (rec.n1.value - rec.phi1.value) * (rec.n2.value - rec.phi2.value) / coinc *
         (b.beta12 / (b.beta1 * b.beta2)) * (model.heralding / model.coupling_c);
}

Measured extract_pair_rate(const DetectionRecord& rec, const DetectionModel& model,
                           int mc_samples, uint64_t seed) {
  Measured out;
  out.value = extract_pair_rate_central(rec, model);
  if (mc_samples <= 1) return out;

  const SplitterEfficiencies b = splitter_efficiencies(model.splitter);
  const double geometry = (b.beta12 / (b.beta1 * b.beta2)) * (model.heralding / model.coupling_c);
  numerics::Rng rng(seed);
  double sum = 0.0, sum2 = 0.0;
  long used = 0;
  for (int s = 0; s < mc_samples; ++s) {
    const double n1 = rng.normal(rec.n1.value, rec.n1.sigma) - rng.normal(rec.phi1.value, rec.phi1.sigma);
    const double n2 = rng.normal(rec.n2.value, rec.n2.sigma) - rng.normal(rec.phi2.value, rec.phi2.sigma);
    const double nc = rng.normal(rec.n12.value, rec.n12.sigma) - rng.normal(rec.a12.value, rec.a12.sigma);
    if (nc <= 0.0) continue;
    const double n = n1 * n2 / nc * geometry;
    sum += n;
    sum2 += n * n;
    ++used;
  }
  if (used > 1) {
    const double mean = sum / static_cast<double>(used);
    out.sigma = std::sqrt(std::max(0.0, sum2 / static_cast<double>(used) - mean * mean));
  }
  return out;
}

DetectionRecord monte_carlo_coincidences(double pair_rate, const DetectionModel& model,
                                         double duration, uint64_t seed) {
  require(pair_rate >= 0.0 && duration > 0.0, Err::NonPositiveInput,
          "need rate >= 0 and duration > 0");
  model.check();
  numerics::Rng rng(seed);

  const bool polarizing = model.splitter.kind == SplitterKind::Polarizing;
  double gt = 0.5;
  if (model.splitter.kind == SplitterKind::Asymmetric) gt = model.splitter.gamma_t;

  const double c = model.coupling_c;
  const double eta = model.heralding;
  // Correlated pair coupling: marginals C for each photon, joint eta C.
  const double second_given_first = eta;
  const double second_given_not_first = c < 1.0 ? c * (1.0 - eta) / (1.0 - c) : 1.0;

  const uint64_t n_pairs = rng.poisson(pair_rate * duration);
  uint64_t count1 = 0, count2 = 0, count12 = 0;
  for (uint64_t e = 0; e < n_pairs; ++e) {
    int arm_a, arm_b; // arm of each photon of the pair
    if (polarizing) {
      arm_a = 1;
      arm_b = 2;
    } else {
      arm_a = rng.bernoulli(gt) ? 1 : 2;
      arm_b = rng.bernoulli(gt) ? 1 : 2;
    }
    if (arm_a == arm_b) {
      // both photons share one arm: the detector sees the mode once
      const bool coupled = rng.bernoulli(c);
      if (!coupled) continue;
      const bool survives = rng.bernoulli(arm_a == 1 ? model.e1 : model.e2);
      if (!survives) continue;
      if (arm_a == 1)
        ++count1;
      else
        ++count2;
    } else {
      const bool coupled_a = rng.bernoulli(c);
      const bool coupled_b = rng.bernoulli(coupled_a ? second_given_first : second_given_not_first);
      const bool hit1 = coupled_a && rng.bernoulli(model.e1);
      const bool hit2 = coupled_b && rng.bernoulli(model.e2);
      if (hit1) ++count1;
      if (hit2) ++count2;
      if (hit1 && hit2) ++count12;
    }
  }
  const uint64_t bg1 = rng.poisson(model.phi1 * duration);
  const uint64_t bg2 = rng.poisson(model.phi2 * duration);
  const uint64_t acc = rng.poisson(model.a12 * duration);

  auto as_rate = [duration](uint64_t counts) {
    Measured m;
    m.value = static_cast<double>(counts) / duration;
    m.sigma = std::sqrt(static_cast<double>(counts)) / duration;
    return m;
  };
  DetectionRecord rec;
  rec.n1 = as_rate(count1 + bg1);
  rec.n2 = as_rate(count2 + bg2);
  rec.n12 = as_rate(count12 + acc);
  rec.phi1 = as_rate(bg1);
  rec.phi2 = as_rate(bg2);
  rec.a12 = as_rate(acc);
  return rec;
}

Measured propagate_uncertainty(const std::vector<Measured>& inputs,
                               const std::function<double(const std::vector<double>&)>& formula,
                               long samples, uint64_t seed) {
  require(samples >= 2, Err::NonPositiveInput, "need at least two samples");
  numerics::Rng rng(seed);
  std::vector<double> draw(inputs.size());
  double sum = 0.0, sum2 = 0.0;
  for (long s = 0; s < samples; ++s) {
    for (size_t i = 0; i < inputs.size(); ++i)
      draw[i] = rng.normal(inputs[i].value, inputs[i].sigma);
    const double v = formula(draw);
    sum += v;
    sum2 += v * v;
  }
  Measured out;
  out.value = sum / static_cast<double>(samples);
  out.sigma = std::sqrt(std::max(0.0, sum2 / static_cast<double>(samples) - out.value * out.value));
  return out;
}

namespace {

void write_measured(std::ostringstream& out, const char* key, const Measured& m) {
  out << key << " = [" << cfg::format_double(m.value) << ", " << cfg::format_double(m.sigma)
      << "]\n";
}

Measured read_measured(const cfg::Section& sec, const char* key) {
  const auto list = cfg::parse_number_list(sec.get(key));
  require(list.size() == 2, Err::ConfigError,
          std::string(key) + " must be [value, sigma]");
  require(list[0] >= 0.0 && list[1] >= 0.0, Err::ConfigError,
          std::string(key) + " needs non-negative value and sigma");
  return {list[0], list[1]};
}

} // namespace

std::string serialize_record(const DetectionRecord& rec) {
  std::ostringstream out;
  write_measured(out, "n1_hz", rec.n1);
  write_measured(out, "n2_hz", rec.n2);
  write_measured(out, "n12_hz", rec.n12);
  write_measured(out, "phi1_hz", rec.phi1);
  write_measured(out, "phi2_hz", rec.phi2);
  write_measured(out, "a12_hz", rec.a12);
  return out.str();
}

DetectionRecord parse_record(const std::string& text) {
  const cfg::Document doc = cfg::parse_text(text);
  const cfg::Section& root = doc.root();
  DetectionRecord rec;
  rec.n1 = read_measured(root, "n1_hz");
  rec.n2 = read_measured(root, "n2_hz");
  rec.n12 = read_measured(root, "n12_hz");
  rec.phi1 = read_measured(root, "phi1_hz");
  rec.phi2 = read_measured(root, "phi2_hz");
  rec.a12 = read_measured(root, "a12_hz");
  return rec;
}

bool record_is_consistent(const DetectionRecord& rec) {
  // background-subtracted coincidences cannot exceed either singles channel
  const double coinc = rec.n12.value - rec.a12.value;
  return coinc <= rec.n1.value - rec.phi1.value && coinc <= rec.n2.value - rec.phi2.value;
}

DetectionRecord load_record(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::ConfigError, "cannot open record file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_record(ss.str());
}

std::string serialize_model(const DetectionModel& model) {
  std::ostringstream out;
  out << "c = " << cfg::format_double(model.coupling_c) << "\n";
  out << "eta = " << cfg::format_double(model.heralding) << "\n";
  out << "e1 = " << cfg::format_double(model.e1) << "\n";
  out << "e2 = " << cfg::format_double(model.e2) << "\n";
  out << "phi1_hz = " << cfg::format_double(model.phi1) << "\n";
  out << "phi2_hz = " << cfg::format_double(model.phi2) << "\n";
  out << "a12_hz = " << cfg::format_double(model.a12) << "\n";
  switch (model.splitter.kind) {
    case SplitterKind::FiftyFifty: out << "splitter = fifty_fifty\n"; break;
    case SplitterKind::Polarizing: out << "splitter = polarizing\n"; break;
    case SplitterKind::Asymmetric:
      out << "splitter = asymmetric\n";
      out << "gamma_t = " << cfg::format_double(model.splitter.gamma_t) << "\n";
      break;
  }
  return out.str();
}

DetectionModel parse_model(const std::string& text) {
  const cfg::Document doc = cfg::parse_text(text);
  const cfg::Section& root = doc.root();
  DetectionModel m;
  m.coupling_c = cfg::parse_quantity(root.get_or("c", "1"));
  m.heralding = cfg::parse_quantity(root.get_or("eta", "1"));
  m.e1 = cfg::parse_quantity(root.get_or("e1", "1"));
  m.e2 = cfg::parse_quantity(root.get_or("e2", "1"));
  m.phi1 = cfg::parse_quantity(root.get_or("phi1_hz", "0"));
  m.phi2 = cfg::parse_quantity(root.get_or("phi2_hz", "0"));
  m.a12 = cfg::parse_quantity(root.get_or("a12_hz", "0"));
  const std::string kind = root.get_or("splitter", "fifty_fifty");
  if (kind == "fifty_fifty") {
    m.splitter.kind = SplitterKind::FiftyFifty;
  } else if (kind == "polarizing") {
    m.splitter.kind = SplitterKind::Polarizing;
  } else if (kind == "asymmetric") {
    m.splitter.kind = SplitterKind::Asymmetric;
    m.splitter.gamma_t = cfg::parse_quantity(root.get("gamma_t"));
    m.splitter.gamma_r = 1.0 - m.splitter.gamma_t;
  } else {
    fail(Err::ConfigError, "unknown splitter '" + kind + "'");
  }
  m.check();
  return m;
}

DetectionModel load_model(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::ConfigError, "cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

} // namespace spdc
