#include "lmbeta/generators.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "lmbeta/dft.hpp"
#include "lmbeta/rng.hpp"

namespace lmbeta {

ArfimaParams make_arfima_params(double dfrac, int dint, double sigma2) {
  if (!(std::fabs(dfrac) < 0.5)) {
    throw std::invalid_argument("arfima requires |dfrac| < 0.5");
  }
  if (dint < 0) throw std::invalid_argument("arfima requires dint >= 0");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("arfima requires sigma2 > 0");
  return ArfimaParams{dfrac, dint, sigma2};
}

std::vector<double> psi_coefficients(double dfrac, std::size_t m) {
  if (m < 1) throw std::invalid_argument("psi_coefficients requires m >= 1");
  if (!(std::fabs(dfrac) < 0.5) && dfrac != 1.0) {
    throw std::invalid_argument(
        "psi_coefficients requires |dfrac| < 0.5 (or dfrac == 1)");
  }
  std::vector<double> psi(m);
  psi[0] = 1.0;
  for (std::size_t j = 1; j < m; ++j) {
    psi[j] = psi[j - 1] * (static_cast<double>(j) - 1.0 + dfrac) /
             static_cast<double>(j);
  }
  return psi;
}

Sequence fractional_noise(double dfrac, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("fractional_noise requires n >= 1");
  if (!(std::fabs(dfrac) < 0.5)) {
    throw std::invalid_argument("fractional_noise requires |dfrac| < 0.5");
  }
  const std::vector<double> psi = psi_coefficients(dfrac, n);
  const std::vector<double> eps = normal_deviates(seed, n);

  std::vector<double> values(n);
  for (std::size_t t = 0; t < n; ++t) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= t; ++j) acc += psi[j] * eps[t - j];
    values[t] = acc;
  }

  Sequence s;
  s.values = std::move(values);
  s.meta = {"fractional_noise", {{"dfrac", dfrac}}, seed, n};
  validate(s);
  return s;
}

std::vector<double> integrate(std::vector<double> x, int times) {
  if (times < 0) throw std::invalid_argument("integrate requires times >= 0");
  for (int k = 0; k < times; ++k) {
    double acc = 0.0;
    for (double& v : x) {
      acc += v;
      v = acc;
    }
  }
  return x;
}

Sequence integrate(const Sequence& x, int times) {
  Sequence out = x;
  out.values = integrate(out.values, times);
  return out;
}

Sequence simulate_arfima(const ArfimaParams& p, std::size_t n,
                         std::uint64_t seed) {
  make_arfima_params(p.dfrac, p.dint, p.sigma2);
  Sequence s = fractional_noise(p.dfrac, n, seed);
  const double scale = std::sqrt(p.sigma2);
  for (double& v : s.values) v *= scale;
  s.values = integrate(std::move(s.values), p.dint);
  s.meta = {"arfima",
            {{"dfrac", p.dfrac},
             {"dint", static_cast<double>(p.dint)},
             {"sigma2", p.sigma2}},
            seed,
            n};
  validate(s);
  return s;
}

Sequence simulate_tk95(double beta, std::size_t n, std::uint64_t seed) {
  if (!(beta >= 0.0)) throw std::invalid_argument("tk95 requires beta >= 0");
  if (n % 2 != 0) throw std::invalid_argument("tk95 requires even n");
  if (n < 8) throw std::invalid_argument("tk95 requires n >= 8");

  const PsdTrend trend{1.0, beta};
  const std::vector<double> g = normal_deviates(seed, n);
  const std::size_t half = n / 2;

  // Zero frequency stays zero so the output has (numerically) zero mean;
  // the Nyquist coefficient must be real for a real series.
  std::vector<std::complex<double>> spectrum(n, {0.0, 0.0});
  for (std::size_t j = 1; j <= half; ++j) {
    const double f = static_cast<double>(j) / static_cast<double>(n);
    const double amp = std::sqrt(0.5 * trend.value(f));
    const double g1 = g[2 * (j - 1)];
    const double g2 = g[2 * (j - 1) + 1];
    if (j == half) {
      spectrum[j] = {amp * g1, 0.0};
    } else {
      spectrum[j] = {amp * g1, amp * g2};
      spectrum[n - j] = std::conj(spectrum[j]);
    }
  }

  const std::vector<std::complex<double>> x = idft(spectrum);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<double> values(n);
  for (std::size_t t = 0; t < n; ++t) values[t] = scale * x[t].real();

  Sequence s;
  s.values = std::move(values);
  s.meta = {"tk95", {{"beta", beta}}, seed, n};
  validate(s);
  return s;
}

}  // namespace lmbeta
