#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lmbeta/sequence.hpp"

namespace lmbeta {

/// Circulant matrix C[i][j] = column[(i - j) mod m], held as its first
/// column plus the Fourier eigenvalues (the DFT of the column). Immutable
/// after construction and safe to share across threads.
class CirculantOperator {
 public:
  explicit CirculantOperator(std::vector<double> column);

  const std::vector<double>& column() const { return column_; }
  const std::vector<std::complex<double>>& eigenvalues() const {
    return eigenvalues_;
  }
  std::size_t size() const { return column_.size(); }

 private:
  std::vector<double> column_;
  std::vector<std::complex<double>> eigenvalues_;
};

struct TransformResult {
  std::vector<double> y_grid;
  std::vector<double> cdf_values;  // all in [0, 1]
};

/// Convolution kernel of the power-law model: the spectral amplitude
/// |f|^(-beta/2) is evaluated on the n+1 frequencies
///   -1/2, ..., -1/n, 1e-5, 1/n, ..., 1/2
/// (the zero frequency is regularized to 1e-5), inverse transformed without
/// normalization, scaled by n^(-1/2), and returned as moduli. n must be even.
std::vector<double> build_wold_column(double beta, std::size_t n);

/// C * x via eigenvalue multiplication in the Fourier domain; matches the
/// direct matrix product to better than 1e-8.
std::vector<double> circulant_apply(const CirculantOperator& op,
                                    const std::vector<double>& x);

/// C^{-1} * y via eigenvalue reciprocals. Throws SingularOperatorError if
/// any |eigenvalue| <= tol. The two-argument form uses
/// tol = 1e-12 * max |eigenvalue|.
std::vector<double> circulant_solve(const CirculantOperator& op,
                                    const std::vector<double>& y, double tol);
std::vector<double> circulant_solve(const CirculantOperator& op,
                                    const std::vector<double>& y);

/// Long-memory sequence y = C * eps with C built from build_wold_column and
/// eps = normal_deviates(seed, n+1); output length is n+1.
Sequence simulate_wold(double beta, std::size_t n, std::uint64_t seed);

/// Equispaced grid of n+1 points from -1000 to 1000 (step 2 when n = 1000).
std::vector<double> default_transform_grid(std::size_t n);

/// Distribution transformation: cdf_values = Phi(C^{-1} * y_grid), the
/// normal distribution function applied to the inverse-circulant image of
/// the grid. y_grid must have n+1 points.
TransformResult transform_cdf(double beta, std::size_t n,
                              const std::vector<double>& y_grid);

/// Standard normal distribution function, absolute error below 1e-7.
double normal_cdf(double z);

}  // namespace lmbeta
