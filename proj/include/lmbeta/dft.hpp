#pragma once

#include <complex>
#include <vector>

namespace lmbeta {

/// Unnormalized forward transform: X[k] = sum_t x[t] * exp(-2*pi*i*k*t/n).
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& x);

/// Unnormalized inverse transform: X[t] = sum_k x[k] * exp(+2*pi*i*k*t/n).
/// No 1/n factor, so idft(dft(x)) == n * x.
std::vector<std::complex<double>> idft(const std::vector<std::complex<double>>& x);

}  // namespace lmbeta
