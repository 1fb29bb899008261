#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lmbeta/sequence.hpp"

namespace lmbeta {

struct ArfimaParams {
  double dfrac = 0.0;  // fractional differencing order, |dfrac| < 0.5
  int dint = 0;        // integer differencing order, >= 0
  double sigma2 = 1.0; // innovation variance, > 0
};

/// Validated constructor; throws std::invalid_argument on bad parameters.
ArfimaParams make_arfima_params(double dfrac, int dint, double sigma2);

/// First m MA(infinity) weights of (1-B)^(-dfrac):
/// psi[0] = 1, psi[j] = psi[j-1] * (j-1+dfrac) / j.
/// Accepts |dfrac| < 0.5, plus dfrac == 1 (cumulative-sum weights).
std::vector<double> psi_coefficients(double dfrac, std::size_t m);

/// Fractionally differenced noise: value[t] = sum_{j<=t} psi[j]*eps[t-j]
/// with eps = normal_deviates(seed, n).
Sequence fractional_noise(double dfrac, std::size_t n, std::uint64_t seed);

/// Applies the cumulative sum `times` times; length is preserved.
Sequence integrate(const Sequence& x, int times);
std::vector<double> integrate(std::vector<double> x, int times);

/// ARFIMA(0, dint + dfrac, 0): fractional noise scaled by sqrt(sigma2),
/// then integrated dint times.
Sequence simulate_arfima(const ArfimaParams& p, std::size_t n,
                         std::uint64_t seed);

/// Spectral power-law noise: Fourier amplitudes sqrt(0.5 * f^(-beta)) times
/// standard-normal pairs at frequencies j/n, Hermitian-symmetrized (Nyquist
/// real, zero frequency zero), inverse transformed. n must be even and >= 8.
Sequence simulate_tk95(double beta, std::size_t n, std::uint64_t seed);

}  // namespace lmbeta
