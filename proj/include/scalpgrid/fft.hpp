#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace scalpgrid {

// In-place iterative radix-2 FFT. n must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& a, bool inverse);

// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

}  // namespace scalpgrid
