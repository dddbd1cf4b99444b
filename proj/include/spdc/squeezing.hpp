#ifndef SPDC_SQUEEZING_HPP
#define SPDC_SQUEEZING_HPP

#include "spdc/numerics/linalg.hpp"
#include "spdc/rates.hpp"

#include <vector>

namespace spdc {

// Discretised coupling kernel G_{k1 k2} plus the pump scale; the number of
// generated pairs follows from sinh^2 evolution of its eigenmodes.
struct SqueezeSpec {
  numerics::SymMatrix g_matrix;    // 1/s per sqrt(pump photon)
  double mean_pump_photons = 0.0;  // <N_p>
  double interaction_time = 0.0;   // s, typically T_DC
};

// <N_p> = (P / hbar omega_p) (L_z n_p / c)
double mean_pump_photons(double power, double omega_p, double length_z, double np);

// N_SM(t) = sum_i sinh^2(sqrt(N_p) lambda_i t) over eigenvalues of G.
double evolve_pairs(const SqueezeSpec& spec);

// Two-mode squeezed vacuum number distribution P(n) = tanh^{2n}(r)/cosh^2(r).
double tmsv_pmf(double r, int n);

// P(2 or more)/P(1) = sinh^2(r)
double multi_pair_ratio(double r);

// Second moment of the per-mode geometric (thermal) pair distribution,
// <N^2> = 2 <N>^2 + <N>; the closure the semiclassical depletion model uses.
inline double geometric_second_moment(double mean_pairs) {
  return 2.0 * mean_pairs * mean_pairs + mean_pairs;
}

// N_SM(T_DC) * (12/35)(4 - sqrt 2) c sqrt(kappa pi / L_z)
double aggregate_multi_pair_ratio(double n_sm, double kappa, double length_z);

struct PoissonPairStats {
  double mean;
  double variance;
  double p_zero;
  double waiting_time_mean;
};

// Biphoton emissions form a Poisson point process at rate R.
PoissonPairStats poisson_pair_statistics(double rate, double window);

// Uniform omega_1 grid with k spacing 2 pi / L_z, centred on degeneracy,
// carrying the per-mode coupling amplitudes implied by cfg. Feeding the
// result to evolve_pairs and dividing by T_DC reproduces the perturbative
// single-mode rate on the same grid.
struct DiscretisedCoupling {
  SqueezeSpec spec;
  std::vector<double> omega_1;
  double domega;
  double t_dc;
};
DiscretisedCoupling discretise_spdc_coupling(const SpdcConfig& cfg, int n_modes);

} // namespace spdc

#endif
