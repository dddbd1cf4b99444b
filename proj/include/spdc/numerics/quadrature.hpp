#ifndef SPDC_NUMERICS_QUADRATURE_HPP
#define SPDC_NUMERICS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace spdc::numerics {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0; // estimated
  int evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  int max_intervals = 20000;
};

// Adaptive Gauss-Kronrod (G7,K15) over [a,b]. Optional interior breakpoints
// seed the subdivision; useful for sharply peaked or oscillatory integrands.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {},
                           const std::vector<double>& breakpoints = {});

// Convenience wrapper that throws Err::QuadratureNonConvergent when the
// error estimate misses rel_tol.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, const std::vector<double>& breakpoints = {},
                          int max_intervals = 20000);

} // namespace spdc::numerics

#endif
