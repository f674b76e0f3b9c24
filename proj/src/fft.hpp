#pragma once

#include <complex>
#include <vector>

#include "grid.hpp"

namespace chemoflow {

// Discrete transforms backing to_spectral / to_physical. Plans are cached per
// grid size behind a mutex; execution is re-entrant, so concurrent callers on
// independent buffers are safe.
namespace fft {

// coeff(m) = (1/N^2) sum_x samples(x) e^{-2 pi i m.x/L}
void forward(const SpectralGrid& g, const std::vector<double>& samples,
             std::vector<std::complex<double>>& coeff);

// samples(x) = sum_m coeff(m) e^{+2 pi i m.x/L}, real part
void backward(const SpectralGrid& g, const std::vector<std::complex<double>>& coeff,
              std::vector<double>& samples);

}  // namespace fft

SpectralField to_spectral(const Field& f);
Field to_physical(const SpectralField& f);

}  // namespace chemoflow
