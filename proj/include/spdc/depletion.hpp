#ifndef SPDC_DEPLETION_HPP
#define SPDC_DEPLETION_HPP

#include <vector>

namespace spdc {

struct DepletionSpec {
  double g_squared = 0.0;  // |g|^2, 1/s^2
  double n_p0 = 0.0;       // initial mean pump photons in the medium
  double t_max = 0.0;      // s
  double tolerance = 1e-9; // relative ODE tolerance
};

// |g|^2 = 8 hbar pi^2 c^3 d^2 / (eps0 n1^2 n2^2 np^2 L lambda_p^3 sigma_p^2) * overlap
double g_squared(double d_eff, double n1, double n2, double np, double length_z,
                 double lambda_p, double sigma_p, double sigma_1);

struct DepletionTrajectory {
  std::vector<double> t;
  std::vector<double> n1; // signal photon number
  double n1_max = 0.0;
  double t_at_max = 0.0;
};

// Semiclassical d^2N1/dt^2 = 2|g|^2 (Np(2N1+1) - N1(6N1+4)), vacuum start.
DepletionTrajectory integrate_depletion(const DepletionSpec& spec);

struct DepletionTime {
  double quadrature; // implicit integral with endpoint substitutions
  double elliptic;   // closed form via complex elliptic integrals
};

DepletionTime depletion_time(const DepletionSpec& spec);

struct RegimeValues {
  double sinh_approx;  // sinh^2(sqrt(Np) |g| t)
  double first_order;  // Np |g|^2 t^2
  double sech_approx;  // (Np/2) sech^2(sqrt(Np |g|^2)(t - T_D))
  double hybrid;       // sinh branch below T_D/2, sech branch above
};

// t_depletion defaults to the quadrature T_D when not supplied.
RegimeValues regime_approximations(const DepletionSpec& spec, double t, double t_depletion);
RegimeValues regime_approximations(const DepletionSpec& spec, double t);

enum class PumpKind { Fock, Coherent, Thermal };

struct PumpDistribution {
  PumpKind kind = PumpKind::Coherent;
  double mean = 0.0;
};

// N_SM(t) = sum_n P(n) sinh^2(sqrt(n) g t), truncated at n_cutoff with
// tail mass below 1e-12.
double pump_statistics_yield(const PumpDistribution& dist, double g, double t, long n_cutoff);

} // namespace spdc

#endif
