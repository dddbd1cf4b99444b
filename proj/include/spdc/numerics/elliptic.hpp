#ifndef SPDC_NUMERICS_ELLIPTIC_HPP
#define SPDC_NUMERICS_ELLIPTIC_HPP

#include <complex>

namespace spdc::numerics {

using cplx = std::complex<double>;

// Carlson symmetric integral R_F(x,y,z) by the duplication algorithm.
// Works for complex arguments off the negative real axis (principal sqrt).
cplx carlson_rf(cplx x, cplx y, cplx z);

// Complete elliptic integral of the first kind, parameter convention
// K(m) = F(pi/2 | m); complex-valued for m > 1.
cplx elliptic_k(cplx m);

// Incomplete elliptic integral of the first kind F(phi | m), complex phi allowed.
cplx elliptic_f(cplx phi, cplx m);

} // namespace spdc::numerics

#endif
