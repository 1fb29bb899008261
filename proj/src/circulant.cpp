#include "lmbeta/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmbeta/dft.hpp"
#include "lmbeta/errors.hpp"
#include "lmbeta/rng.hpp"

namespace lmbeta {

namespace {

std::vector<std::complex<double>> to_complex(const std::vector<double>& x) {
  std::vector<std::complex<double>> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = {x[i], 0.0};
  return out;
}

}  // namespace

CirculantOperator::CirculantOperator(std::vector<double> column)
    : column_(std::move(column)) {
  if (column_.empty()) {
    throw std::invalid_argument("circulant column must be nonempty");
  }
  eigenvalues_ = dft(to_complex(column_));
}

std::vector<double> build_wold_column(double beta, std::size_t n) {
  if (!(beta >= 0.0)) {
    throw std::invalid_argument("wold column requires beta >= 0");
  }
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("wold column requires even n >= 2");
  }
  const std::size_t m = n + 1;
  const std::size_t half = n / 2;

  // Frequencies -1/2, ..., -1/n, then 1e-5 in place of zero, then
  // 1/n, ..., 1/2. The 1e-5 regularization is deliberate: it makes the DC
  // amplitude finite (and dominant for large beta).
  std::vector<double> amplitude(m);
  for (std::size_t j = 0; j < half; ++j) {
    const double f =
        (static_cast<double>(j) - static_cast<double>(half)) /
        static_cast<double>(n);
    amplitude[j] = std::pow(std::fabs(f), -beta / 2.0);
  }
  amplitude[half] = std::pow(1e-5, -beta / 2.0);
  for (std::size_t j = 1; j <= half; ++j) {
    const double f = static_cast<double>(j) / static_cast<double>(n);
    amplitude[half + j] = std::pow(f, -beta / 2.0);
  }

  const std::vector<std::complex<double>> transformed =
      idft(to_complex(amplitude));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> column(m);
  for (std::size_t t = 0; t < m; ++t) column[t] = scale * std::abs(transformed[t]);
  return column;
}

std::vector<double> circulant_apply(const CirculantOperator& op,
                                    const std::vector<double>& x) {
  const std::size_t m = op.size();
  if (x.size() != m) {
    throw std::invalid_argument("circulant_apply: vector length " +
                                std::to_string(x.size()) +
                                " does not match operator size " +
                                std::to_string(m));
  }
  std::vector<std::complex<double>> xhat = dft(to_complex(x));
  for (std::size_t k = 0; k < m; ++k) xhat[k] *= op.eigenvalues()[k];
  const std::vector<std::complex<double>> y = idft(xhat);
  std::vector<double> out(m);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = y[i].real() * inv_m;
  return out;
}

std::vector<double> circulant_solve(const CirculantOperator& op,
                                    const std::vector<double>& y, double tol) {
  const std::size_t m = op.size();
  if (y.size() != m) {
    throw std::invalid_argument("circulant_solve: vector length " +
                                std::to_string(y.size()) +
                                " does not match operator size " +
                                std::to_string(m));
  }
  if (!(tol > 0.0)) throw std::invalid_argument("circulant_solve: tol must be > 0");
  for (std::size_t k = 0; k < m; ++k) {
    const double mag = std::abs(op.eigenvalues()[k]);
    if (mag <= tol) throw SingularOperatorError(k, mag);
  }
  std::vector<std::complex<double>> yhat = dft(to_complex(y));
  for (std::size_t k = 0; k < m; ++k) yhat[k] /= op.eigenvalues()[k];
  const std::vector<std::complex<double>> x = idft(yhat);
  std::vector<double> out(m);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = x[i].real() * inv_m;
  return out;
}

std::vector<double> circulant_solve(const CirculantOperator& op,
                                    const std::vector<double>& y) {
  double max_mag = 0.0;
  for (const auto& lambda : op.eigenvalues()) {
    max_mag = std::max(max_mag, std::abs(lambda));
  }
  return circulant_solve(op, y, 1e-12 * max_mag);
}

Sequence simulate_wold(double beta, std::size_t n, std::uint64_t seed) {
  const CirculantOperator op(build_wold_column(beta, n));
  const std::vector<double> eps = normal_deviates(seed, n + 1);
  Sequence s;
  s.values = circulant_apply(op, eps);
  s.meta = {"wold", {{"beta", beta}}, seed, n + 1};
  validate(s);
  return s;
}

std::vector<double> default_transform_grid(std::size_t n) {
  std::vector<double> grid(n + 1);
  const double step = 2000.0 / static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    grid[k] = -1000.0 + static_cast<double>(k) * step;
  }
  return grid;
}

TransformResult transform_cdf(double beta, std::size_t n,
                              const std::vector<double>& y_grid) {
  if (y_grid.size() != n + 1) {
    throw std::invalid_argument("transform_cdf: grid must have n+1 points");
  }
  const CirculantOperator op(build_wold_column(beta, n));
  const std::vector<double> x = circulant_solve(op, y_grid);
  TransformResult result;
  result.y_grid = y_grid;
  result.cdf_values.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    result.cdf_values[i] = normal_cdf(x[i]);
  }
  return result;
}

double normal_cdf(double z) {
  if (!std::isfinite(z)) throw std::invalid_argument("normal_cdf: z must be finite");
  return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

}  // namespace lmbeta
