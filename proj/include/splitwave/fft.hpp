#pragma once

#include <complex>
#include <vector>

namespace splitwave::fft {

// Forward transform of real samples with the 1/n normalization:
// coeff[i] = (1/n) * sum_j u_j * exp(-i k_i x_j), bins in natural layout.
std::vector<std::complex<double>> forward(const std::vector<double>& samples);

// Inverse transform, the plain synthesis sum u_j = sum_i coeff[i] * exp(+i k_i x_j),
// returning the real part. No scaling: forward . inverse is the identity.
std::vector<double> inverse(const std::vector<std::complex<double>>& spectrum);

}  // namespace splitwave::fft
