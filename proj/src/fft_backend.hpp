// Internal n-dimensional complex FFT wrapper (FFTW). Plans are cached per
// shape/direction and reused; execution is thread-safe, plan creation is
// serialized.

#pragma once

#include <complex>
#include <vector>

namespace clw::fft {

// In-place unnormalized complex DFT over a row-major array with the given
// per-axis sizes. sign = -1: sum z[i] e^{-2pi i m.i/N} (forward);
// sign = +1: sum z[i] e^{+2pi i m.i/N} (backward, unnormalized).
void transform(std::vector<std::complex<double>>& data,
               const std::vector<int>& shape, int sign);

}  // namespace clw::fft
