#include "lmbeta/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <thread>

#include "lmbeta/circulant.hpp"
#include "lmbeta/dft.hpp"
#include "lmbeta/errors.hpp"
#include "lmbeta/generators.hpp"

namespace lmbeta {

std::string to_string(VarianceMode mode) {
  return mode == VarianceMode::sample ? "sample" : "population";
}

std::vector<double> min_max_normalize(const std::vector<double>& x) {
  if (x.empty()) {
    throw std::invalid_argument("min_max_normalize: empty sequence");
  }
  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (!(hi > lo)) {
    throw ConstantSequenceError("min_max_normalize: sequence has zero range");
  }
  const double span = hi - lo;
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] - lo) / span;
  return out;
}

Sequence min_max_normalize(const Sequence& x) {
  Sequence out = x;
  out.values = min_max_normalize(x.values);
  return out;
}

double variance(const std::vector<double>& x, VarianceMode mode) {
  const std::size_t n = x.size();
  if (mode == VarianceMode::sample && n < 2) {
    throw std::invalid_argument("variance: sample mode requires n >= 2");
  }
  if (n < 1) throw std::invalid_argument("variance: empty sequence");

  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);

  double ss = 0.0;
  for (double v : x) {
    const double d = v - mean;
    ss += d * d;
  }
  const double denom =
      mode == VarianceMode::sample ? static_cast<double>(n - 1)
                                   : static_cast<double>(n);
  return ss / denom;
}

double range(const std::vector<double>& x) {
  if (x.empty()) throw std::invalid_argument("range: empty sequence");
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  return *hi - *lo;
}

double ratio_var_range2(const std::vector<double>& x, VarianceMode mode) {
  const double r = range(x);
  if (!(r > 0.0)) {
    throw ConstantSequenceError("ratio_var_range2: sequence has zero range");
  }
  return variance(x, mode) / (r * r);
}

double alpha_from_ratio(double r) {
  if (!(r > 0.0) || r > 0.25) throw RatioOutOfRangeError(r);
  return (1.0 / r - 4.0) / 8.0;
}

double ratio_from_alpha(double alpha) {
  if (!(alpha >= 0.0)) {
    throw std::invalid_argument("ratio_from_alpha: alpha must be >= 0");
  }
  return 1.0 / (8.0 * alpha + 4.0);
}

BetaShapeReport beta_shape_report(const std::vector<double>& x,
                                  VarianceMode mode) {
  BetaShapeReport report;
  report.variance_mode = mode;
  report.range = range(x);
  if (!(report.range > 0.0)) {
    throw ConstantSequenceError("beta_shape_report: sequence has zero range");
  }
  report.variance = variance(x, mode);
  report.ratio = report.variance / (report.range * report.range);
  const double population_ratio =
      variance(x, VarianceMode::population) / (report.range * report.range);
  report.popoviciu_ok = population_ratio <= 0.25 + 1e-12;
  report.alpha_hat = (report.ratio > 0.0 && report.ratio <= 0.25)
                         ? alpha_from_ratio(report.ratio)
                         : std::numeric_limits<double>::quiet_NaN();
  return report;
}

KernelDensity kde(const std::vector<double>& data, double bandwidth,
                  std::size_t grid_points) {
  if (data.empty()) throw std::invalid_argument("kde: empty data");
  if (!(bandwidth > 0.0)) throw std::invalid_argument("kde: bandwidth must be > 0");
  if (grid_points < 2) throw std::invalid_argument("kde: need >= 2 grid points");

  const auto [lo_it, hi_it] = std::minmax_element(data.begin(), data.end());
  const double lo = *lo_it - 3.0 * bandwidth;
  const double hi = *hi_it + 3.0 * bandwidth;
  const double step = (hi - lo) / static_cast<double>(grid_points - 1);

  KernelDensity density;
  density.bandwidth = bandwidth;
  density.grid.resize(grid_points);
  for (std::size_t g = 0; g < grid_points; ++g) {
    density.grid[g] = lo + static_cast<double>(g) * step;
  }

  density.values.assign(grid_points, 0.0);
  const double inv_bw = 1.0 / bandwidth;
  for (double x : data) {
    for (std::size_t g = 0; g < grid_points; ++g) {
      const double u = (density.grid[g] - x) * inv_bw;
      density.values[g] += std::exp(-0.5 * u * u);
    }
  }
  const double norm =
      1.0 / (static_cast<double>(data.size()) * bandwidth * std::sqrt(2.0 * M_PI));
  for (double& v : density.values) v *= norm;
  return density;
}

double trapezoid_integral(const KernelDensity& density) {
  double acc = 0.0;
  for (std::size_t i = 1; i < density.grid.size(); ++i) {
    acc += 0.5 * (density.values[i] + density.values[i - 1]) *
           (density.grid[i] - density.grid[i - 1]);
  }
  return acc;
}

std::vector<std::size_t> density_modes(const KernelDensity& density) {
  std::vector<std::size_t> modes;
  for (std::size_t i = 1; i + 1 < density.values.size(); ++i) {
    if (density.values[i] > density.values[i - 1] &&
        density.values[i] > density.values[i + 1]) {
      modes.push_back(i);
    }
  }
  return modes;
}

double periodogram_slope(const std::vector<double>& x) {
  const std::size_t n = x.size();
  if (n < 64) throw std::invalid_argument("periodogram_slope: requires n >= 64");

  std::vector<std::complex<double>> cx(n);
  for (std::size_t t = 0; t < n; ++t) cx[t] = {x[t], 0.0};
  const std::vector<std::complex<double>> spectrum = dft(cx);

  // Least squares of log I(f_j) on log f_j over j = 1..n/2; frequency zero
  // is excluded (log singularity).
  const std::size_t half = n / 2;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t j = 1; j <= half; ++j) {
    const double f = static_cast<double>(j) / static_cast<double>(n);
    const double power = std::norm(spectrum[j]);
    const double lx = std::log(f);
    const double ly = std::log(power);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double count = static_cast<double>(half);
  return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

double periodogram_slope(const Sequence& x) {
  return periodogram_slope(x.values);
}

Sequence generate_replicate(const EnsembleSpec& spec, std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(spec.n);
  switch (spec.model) {
    case Model::arfima: {
      const auto params = make_arfima_params(
          spec.params.at("dfrac"),
          static_cast<int>(spec.params.at("dint")),
          spec.params.count("sigma2") ? spec.params.at("sigma2") : 1.0);
      return simulate_arfima(params, n, seed);
    }
    case Model::tk95:
      return simulate_tk95(spec.params.at("beta"), n, seed);
    case Model::wold:
      return simulate_wold(spec.params.at("beta"), n, seed);
  }
  throw std::invalid_argument("invalid model enum value");
}

namespace {

// Normalized replicates are produced into per-index slots so the
// concatenation order (and therefore every downstream statistic) does not
// depend on the thread schedule.
std::vector<std::vector<double>> normalized_replicates(
    const EnsembleSpec& spec, std::vector<unsigned char>& skipped,
    unsigned threads) {
  const int count = spec.replicates;
  std::vector<std::vector<double>> slots(count);
  skipped.assign(count, 0);

  auto work = [&](int i) {
    const std::uint64_t seed =
        spec.seeds.seed_for(static_cast<std::uint64_t>(i) + 1);
    const Sequence replicate = generate_replicate(spec, seed);
    try {
      slots[i] = min_max_normalize(replicate.values);
    } catch (const ConstantSequenceError&) {
      skipped[i] = 1;
    }
  };

  if (threads <= 1 || count < 2) {
    for (int i = 0; i < count; ++i) work(i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        work(i);
      }
    };
    const unsigned pool_size =
        std::min<unsigned>(threads, static_cast<unsigned>(count));
    std::vector<std::thread> pool;
    pool.reserve(pool_size);
    for (unsigned t = 0; t < pool_size; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return slots;
}

}  // namespace

std::vector<double> ensemble_concatenate(const EnsembleSpec& spec,
                                         std::size_t* skipped_out,
                                         unsigned threads) {
  validate(spec);
  std::vector<unsigned char> skipped;
  const auto slots = normalized_replicates(spec, skipped, threads);

  std::size_t total = 0;
  std::size_t skip_count = 0;
  for (int i = 0; i < spec.replicates; ++i) {
    total += slots[i].size();
    skip_count += skipped[i];
  }
  if (skipped_out != nullptr) *skipped_out = skip_count;
  if (total == 0) {
    throw ConstantSequenceError("ensemble: every replicate was degenerate");
  }

  std::vector<double> data;
  data.reserve(total);
  for (const auto& slot : slots) data.insert(data.end(), slot.begin(), slot.end());
  return data;
}

EnsembleResult run_ensemble(const EnsembleSpec& spec, double bandwidth,
                            unsigned threads) {
  if (!(bandwidth > 0.0)) {
    throw std::invalid_argument("run_ensemble: bandwidth must be > 0");
  }
  EnsembleResult result;
  const std::vector<double> data =
      ensemble_concatenate(spec, &result.skipped_replicates, threads);
  result.report = beta_shape_report(data, VarianceMode::sample);
  result.density = kde(data, bandwidth);
  return result;
}

}  // namespace lmbeta
