#include "spdc/depletion.hpp"

#include "spdc/beams.hpp"
#include "spdc/constants.hpp"
#include "spdc/error.hpp"
#include "spdc/numerics/elliptic.hpp"
#include "spdc/numerics/ode.hpp"
#include "spdc/numerics/quadrature.hpp"
#include "spdc/squeezing.hpp"

#include <algorithm>
#include <cmath>

namespace spdc {

double g_squared(double d_eff, double n1, double n2, double np, double length_z,
                 double lambda_p, double sigma_p, double sigma_1) {
  require(d_eff >= 0.0, Err::NonPositiveInput, "d_eff must be >= 0");
  require(n1 > 0.0 && n2 > 0.0 && np > 0.0, Err::NonPositiveInput, "indices must be positive");
  require(length_z > 0.0 && lambda_p > 0.0 && sigma_p > 0.0, Err::NonPositiveInput,
          "lengths must be positive");
  const double overlap = overlap_factor(sigma_p, sigma_1);
  return 8.0 * hbar * pi * pi * std::pow(c_light, 3) * d_eff * d_eff /
         (eps0 * n1 * n1 * n2 * n2 * np * np * length_z * std::pow(lambda_p, 3) * sigma_p *
          sigma_p) *
         overlap;
}

static void check_spec(const DepletionSpec& spec) {
  require(spec.g_squared > 0.0, Err::NonPositiveInput, "|g|^2 must be > 0");
  require(spec.n_p0 > 0.0, Err::NonPositiveInput, "N_p^(0) must be > 0");
}

DepletionTrajectory integrate_depletion(const DepletionSpec& spec) {
  require(spec.g_squared >= 0.0, Err::NonPositiveInput, "|g|^2 must be >= 0");
  require(spec.n_p0 > 0.0, Err::NonPositiveInput, "N_p^(0) must be > 0");
  require(spec.t_max > 0.0, Err::NonPositiveInput, "t_max must be > 0");
  if (spec.g_squared == 0.0) {
    // no coupling, the fields stay in vacuum
    DepletionTrajectory flat;
    flat.t = {0.0, spec.t_max};
    flat.n1 = {0.0, 0.0};
    return flat;
  }
  const double g2 = spec.g_squared;
  const double np = spec.n_p0;

  // d^2 N1/dt^2 = 2|g|^2 (<Np> + 2 <N1 Np> - <N1^2>) with Np = Np0 - N1 and
  // the thermal closure <N1^2> = 2 N1^2 + N1; expands to
  // 2|g|^2 (Np0 (2 N1 + 1) - N1 (6 N1 + 4)).
  numerics::OdeRhs rhs = [g2, np](double, const std::vector<double>& y,
                                  std::vector<double>& dy) {
    const double n1 = y[0];
    const double m2 = geometric_second_moment(n1);
    dy[0] = y[1];
    dy[1] = 2.0 * g2 * ((np - n1) + 2.0 * (np * n1 - m2) - m2);
  };

  numerics::OdeOptions opt;
  opt.rel_tol = spec.tolerance;
  opt.abs_tol = spec.tolerance * std::max(1.0, np);
  const numerics::OdeSolution sol = numerics::integrate_ode(rhs, {0.0, 0.0}, 0.0, spec.t_max, opt);

  DepletionTrajectory out;
  out.t.reserve(sol.t.size());
  out.n1.reserve(sol.t.size());
  for (size_t i = 0; i < sol.t.size(); ++i) {
    out.t.push_back(sol.t[i]);
    out.n1.push_back(sol.y[i][0]);
    if (sol.y[i][0] > out.n1_max) {
      out.n1_max = sol.y[i][0];
      out.t_at_max = sol.t[i];
    }
  }
  return out;
}

DepletionTime depletion_time(const DepletionSpec& spec) {
  check_spec(spec);
  const double g = std::sqrt(spec.g_squared);
  const double np = spec.n_p0; // closed form assumes Np >> 2; both paths evaluate regardless

  // P(x) = -2 x^3 + (Np + 2) x^2 + Np x; the turning point is its positive root.
  const double half = 0.25 * (np + 2.0 + std::sqrt((np + 2.0) * (np + 2.0) + 8.0 * np));
  auto poly = [np](double x) { return x * (np + x * (np + 2.0 - 2.0 * x)); };

  // Integrable endpoint singularities: substitute x = u^2 near zero and
  // x = x_max - v^2 near the turning point.
  const double mid = 0.5 * half;
  const double i_lo = numerics::integrate_or_throw(
      [&](double u) {
        const double x = u * u;
        return 2.0 * u / std::sqrt(poly(x));
      },
      1e-30, std::sqrt(mid), 1e-10);
  const double i_hi = numerics::integrate_or_throw(
      [&](double v) {
        const double x = half - v * v;
        const double p = poly(x);
        return p > 0.0 ? 2.0 * v / std::sqrt(p) : 0.0;
      },
      1e-30, std::sqrt(half - mid), 1e-10);

  DepletionTime out;
  out.quadrature = (i_lo + i_hi) / (2.0 * g);

  // Elliptic closed form (valid for Np >> 1):
  // T_D = -sqrt(2) (F[i csch^-1(sqrt(Np/2)), -Np/2] - i K[Np/2])
  //        / (|g| sqrt(-Np + sqrt(Np(Np+8))))
  const numerics::cplx i_unit(0.0, 1.0);
  const numerics::cplx phi = i_unit * std::asinh(std::sqrt(2.0 / np));
  const numerics::cplx f_term = numerics::elliptic_f(phi, -0.5 * np);
  const numerics::cplx k_term = numerics::elliptic_k(0.5 * np);
  const double denom = g * std::sqrt(-np + std::sqrt(np * (np + 8.0)));
  const numerics::cplx td = -std::sqrt(2.0) * (f_term - i_unit * k_term) / denom;
  // The printed closed form is an Np >> 1 simplification and leaves an
  // intrinsic imaginary residue of order 0.35/Np; the gate only catches
  // genuine branch mistakes.
  require(std::abs(td.imag()) <= 1e-3 * std::abs(td.real()), Err::ToleranceNotMet,
          "elliptic depletion time has a non-negligible imaginary residue");
  out.elliptic = td.real();
  return out;
}

RegimeValues regime_approximations(const DepletionSpec& spec, double t, double t_depletion) {
  check_spec(spec);
  require(t >= 0.0, Err::NonPositiveInput, "time must be >= 0");
  const double g = std::sqrt(spec.g_squared);
  const double np = spec.n_p0;
  RegimeValues v;
  const double sh = std::sinh(std::sqrt(np) * g * t);
  v.sinh_approx = sh * sh;
  v.first_order = np * spec.g_squared * t * t;
  const double sech = 1.0 / std::cosh(std::sqrt(np) * g * (t - t_depletion));
  v.sech_approx = 0.5 * np * sech * sech;
  v.hybrid = t < 0.5 * t_depletion ? v.sinh_approx : v.sech_approx;
  return v;
}

RegimeValues regime_approximations(const DepletionSpec& spec, double t) {
  return regime_approximations(spec, t, depletion_time(spec).quadrature);
}

double pump_statistics_yield(const PumpDistribution& dist, double g, double t, long n_cutoff) {
  require(g >= 0.0 && t >= 0.0, Err::NonPositiveInput, "g and t must be >= 0");
  require(dist.mean >= 0.0, Err::NonPositiveInput, "mean photon number must be >= 0");
  require(n_cutoff >= 0, Err::NonPositiveInput, "cutoff must be >= 0");

  auto pair_yield = [g, t](double n) {
    const double s = std::sinh(std::sqrt(n) * g * t);
    return s * s;
  };

  switch (dist.kind) {
    case PumpKind::Fock: {
      const double n = std::round(dist.mean);
      require(n <= static_cast<double>(n_cutoff), Err::CutoffTooSmall,
              "Fock photon number exceeds the cutoff");
      return pair_yield(n);
    }
    case PumpKind::Coherent: {
      if (dist.mean == 0.0) return 0.0;
      // Weights by recurrence from the mode, normalised at the end; lgamma
      // would lose ~1e-11 at large means, too coarse for the tail gate.
      const double mu = dist.mean;
      const long mode = std::max(0L, static_cast<long>(std::floor(mu)));
      const long lo = std::max(0L, static_cast<long>(std::floor(mu - 45.0 * std::sqrt(mu))) - 45);
      const long hi = std::min(n_cutoff,
                               static_cast<long>(std::ceil(mu + 45.0 * std::sqrt(mu))) + 45);
      require(mode <= n_cutoff, Err::CutoffTooSmall, "cutoff below the Poisson mode");
      double norm = 0.0, total = 0.0;
      double q = 1.0; // q_mode
      for (long n = mode; n <= hi; ++n) {
        norm += q;
        total += q * pair_yield(static_cast<double>(n));
        q *= mu / static_cast<double>(n + 1);
        if (q < 1e-280) break;
      }
      const double q_last = q;
      const double ratio_up = mu / static_cast<double>(hi + 1);
      q = 1.0;
      for (long n = mode - 1; n >= lo; --n) {
        q *= static_cast<double>(n + 1) / mu;
        norm += q;
        total += q * pair_yield(static_cast<double>(n));
        if (q < 1e-280) break;
      }
      // geometric bound on the truncated upper tail relative to the window
      if (hi == n_cutoff) {
        require(ratio_up < 1.0, Err::CutoffTooSmall, "cutoff sits below the Poisson bulk");
        const double tail = q_last * ratio_up / (1.0 - ratio_up) / norm;
        require(tail < 1e-12, Err::CutoffTooSmall,
                "coherent tail mass above the cutoff exceeds 1e-12");
      }
      return total / norm;
    }
    case PumpKind::Thermal: {
      if (dist.mean == 0.0) return 0.0;
      const double mu = dist.mean;
      const double q = mu / (1.0 + mu); // P(n) = q^n (1 - q)
      // analytic geometric tail: sum_{n > N} P(n) = q^{N+1}
      const double tail = std::exp((n_cutoff + 1.0) * std::log(q));
      require(tail < 1e-12, Err::CutoffTooSmall,
              "thermal tail mass above the cutoff exceeds 1e-12");
      const double log_q = std::log(q);
      double total = 0.0;
      for (long n = 0; n <= n_cutoff; ++n) {
        const double p = std::exp(n * log_q) * (1.0 - q);
        if (p == 0.0) break;
        total += p * pair_yield(static_cast<double>(n));
      }
      return total;
    }
  }
  return 0.0;
}

} // namespace spdc
