#ifndef SPDC_NUMERICS_FFT_HPP
#define SPDC_NUMERICS_FFT_HPP

#include <complex>
#include <vector>

namespace spdc::numerics {

// In-place radix-2 FFT; size must be a power of two.
// sign = -1: forward (e^{-i 2 pi k n / N}); sign = +1: inverse without the 1/N.
void fft_radix2(std::vector<std::complex<double>>& data, int sign);

} // namespace spdc::numerics

#endif
