#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lmbeta/sequence.hpp"

namespace lmbeta {

enum class VarianceMode { sample, population };

std::string to_string(VarianceMode mode);

/// Moment summary of a bounded sequence: the variance-to-squared-range
/// ratio and the symmetric-beta shape it implies. alpha_hat is NaN when the
/// ratio falls outside (0, 1/4]. popoviciu_ok always refers to the
/// population-variance ratio, whatever variance_mode is.
struct BetaShapeReport {
  double ratio = 0.0;
  double alpha_hat = 0.0;
  double variance = 0.0;
  double range = 0.0;
  bool popoviciu_ok = false;
  VarianceMode variance_mode = VarianceMode::sample;
};

struct KernelDensity {
  std::vector<double> grid;
  std::vector<double> values;
  double bandwidth = 0.0;
};

struct EnsembleResult {
  BetaShapeReport report;
  KernelDensity density;
  std::size_t skipped_replicates = 0;
};

/// (x - min) / (max - min); the minimum maps to exactly 0 and the maximum to
/// exactly 1. Throws ConstantSequenceError when max == min.
std::vector<double> min_max_normalize(const std::vector<double>& x);
Sequence min_max_normalize(const Sequence& x);

/// Sample mode divides by n-1 (needs n >= 2), population mode by n.
double variance(const std::vector<double>& x, VarianceMode mode);

double range(const std::vector<double>& x);

/// variance(x, mode) / range(x)^2; scale- and location-invariant.
double ratio_var_range2(const std::vector<double>& x, VarianceMode mode);

/// Shape from ratio: alpha = (1/r - 4) / 8. Throws RatioOutOfRangeError
/// unless 0 < r <= 1/4.
double alpha_from_ratio(double r);

/// Ratio from shape: 1 / (8*alpha + 4); exact inverse of alpha_from_ratio.
double ratio_from_alpha(double alpha);

BetaShapeReport beta_shape_report(const std::vector<double>& x,
                                  VarianceMode mode);

/// Gaussian-kernel density estimate on an equispaced grid spanning
/// [min(data) - 3*bandwidth, max(data) + 3*bandwidth].
KernelDensity kde(const std::vector<double>& data, double bandwidth,
                  std::size_t grid_points = 512);

/// Trapezoid integral of the density over its grid.
double trapezoid_integral(const KernelDensity& density);

/// Indices of strict local maxima of the density values.
std::vector<std::size_t> density_modes(const KernelDensity& density);

/// Least-squares slope of log periodogram versus log frequency over the
/// Fourier frequencies j/n, j = 1..n/2; estimates -beta of the spectral
/// trend. Requires n >= 64.
double periodogram_slope(const std::vector<double>& x);
double periodogram_slope(const Sequence& x);

/// One replicate of the ensemble model with an explicit seed.
Sequence generate_replicate(const EnsembleSpec& spec, std::uint64_t seed);

/// The ensemble pipeline: generate `replicates` sequences with seeds
/// seed_rule(i), min-max normalize each, concatenate in replicate order, and
/// summarize with a sample-variance BetaShapeReport plus a kernel density.
/// Degenerate (constant) replicates are skipped and counted. `threads`
/// only parallelizes replicate generation; results are identical for any
/// thread count.
EnsembleResult run_ensemble(const EnsembleSpec& spec, double bandwidth,
                            unsigned threads = 1);

/// The concatenation of min-max-normalized replicates that run_ensemble
/// summarizes, exposed for distribution-level checks.
std::vector<double> ensemble_concatenate(const EnsembleSpec& spec,
                                         std::size_t* skipped = nullptr,
                                         unsigned threads = 1);

}  // namespace lmbeta
