#pragma once

#include <complex>
#include <vector>

namespace uavc {

using cplx = std::complex<double>;

// In-place radix-2 FFT; n must be a power of two.
void fft(std::vector<cplx>& a, bool inverse);

// Real-input transform, returns n/2+1 bins.
std::vector<cplx> rfft(const std::vector<double>& x);

// Inverse of rfft; n is the original even length.
std::vector<double> irfft(const std::vector<cplx>& bins, size_t n);

bool is_pow2(size_t n);

} // namespace uavc
