#pragma once

#include <complex>
#include <cstddef>

namespace edq::detail {

// In-place unnormalized DFT, forward = sum_j f_j e^{-2 pi i j k / M}.
// Power-of-two lengths only; backed by FFTW with a mutex-guarded plan cache.
void dft_pow2(std::complex<double>* data, std::size_t n, bool forward);

}  // namespace edq::detail
