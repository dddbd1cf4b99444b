#ifndef SPDC_NUMERICS_ODE_HPP
#define SPDC_NUMERICS_ODE_HPP

#include <functional>
#include <vector>

namespace spdc::numerics {

// Right-hand side of y' = f(t, y) for small fixed-size systems.
using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

struct OdeOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double initial_step = 0.0; // 0 = auto
  size_t max_steps = 2000000;
};

struct OdeSolution {
  std::vector<double> t;
  std::vector<std::vector<double>> y; // y[i] is the state at t[i]
};

// Dormand-Prince 5(4) with step-size control. Stores every accepted step.
OdeSolution integrate_ode(const OdeRhs& rhs, std::vector<double> y0, double t0, double t1,
                          const OdeOptions& opt = {});

} // namespace spdc::numerics

#endif
