#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "lmbeta/analysis.hpp"
#include "lmbeta/circulant.hpp"
#include "lmbeta/errors.hpp"
#include "lmbeta/generators.hpp"
#include "lmbeta/rng.hpp"

using namespace lmbeta;

TEST_CASE("min-max normalization maps onto the unit interval") {
  const auto u = min_max_normalize(std::vector<double>{2.0, 4.0, 6.0});
  CHECK(u == std::vector<double>{0.0, 0.5, 1.0});

  CHECK_THROWS_AS(min_max_normalize(std::vector<double>{1.0, 1.0, 1.0}),
                  ConstantSequenceError);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(-5.0, 5.0);
  std::vector<double> x(400);
  for (double& v : x) v = d(rng);
  const auto n = min_max_normalize(x);
  double lo = 1.0, hi = 0.0;
  for (double v : n) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
  }
  CHECK(lo == 0.0);
  CHECK(hi == 1.0);
}

TEST_CASE("min-max normalization is exactly affine-invariant") {
  // Dyadic data keeps a + t*x exactly representable, so the invariance is
  // bitwise rather than approximate.
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(0, (1 << 20) - 1);
  std::vector<double> x(300);
  for (double& v : x) v = static_cast<double>(d(rng)) * 0x1.0p-20;

  const auto base = min_max_normalize(x);
  for (const auto& [a, t] : {std::pair{3.0, 5.0}, std::pair{-7.0, 2.0},
                             std::pair{0.25, 1024.0}, std::pair{100.0, 0.125}}) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = a + t * x[i];
    CHECK(min_max_normalize(y) == base);
  }
}

TEST_CASE("variance in both modes") {
  const std::vector<double> two{0.0, 1.0};
  CHECK(variance(two, VarianceMode::population) == 0.25);
  CHECK(variance(two, VarianceMode::sample) == 0.5);
  CHECK_THROWS_AS(variance({1.0}, VarianceMode::sample), std::invalid_argument);
  CHECK_THROWS_AS(variance({}, VarianceMode::population), std::invalid_argument);
}

TEST_CASE("variance of a large uniform sample is near 1/12") {
  // Phi maps standard normal draws to independent uniforms.
  const auto z = normal_deviates(99, 1000000);
  std::vector<double> u(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) u[i] = normal_cdf(z[i]);
  CHECK(std::fabs(variance(u, VarianceMode::sample) - 1.0 / 12.0) < 0.001);
}

TEST_CASE("ratio of variance to squared range") {
  CHECK(ratio_var_range2({0.0, 1.0}, VarianceMode::population) == 0.25);
  CHECK_THROWS_AS(ratio_var_range2({3.0, 3.0}, VarianceMode::population),
                  ConstantSequenceError);
}

TEST_CASE("ratio is scale- and location-invariant") {
  const auto x = normal_deviates(5, 500);
  const double base = ratio_var_range2(x, VarianceMode::population);
  for (double t : {1e-6, 2.0, 1e6}) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = t * x[i];
    CHECK(std::fabs(ratio_var_range2(y, VarianceMode::population) - base) <=
          1e-10 * base);
  }
  for (double c : {-100.0, 0.5, 1e4}) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + c;
    CHECK(std::fabs(ratio_var_range2(y, VarianceMode::population) - base) <=
          1e-9 * base);
  }
}

TEST_CASE("shape from ratio: reference family values") {
  CHECK(alpha_from_ratio(1.0 / 8.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(alpha_from_ratio(1.0 / 12.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(alpha_from_ratio(1.0 / 16.0) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(alpha_from_ratio(0.25) == 0.0);
  CHECK_THROWS_AS(alpha_from_ratio(0.0), RatioOutOfRangeError);
  CHECK_THROWS_AS(alpha_from_ratio(-0.1), RatioOutOfRangeError);
  CHECK_THROWS_AS(alpha_from_ratio(0.2500001), RatioOutOfRangeError);
}

TEST_CASE("ratio from shape and the roundtrip identity") {
  CHECK(ratio_from_alpha(0.0) == 0.25);
  CHECK(ratio_from_alpha(1.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-15));
  for (double alpha = 0.0; alpha <= 100.0; alpha += 0.37) {
    CHECK(alpha_from_ratio(ratio_from_alpha(alpha)) ==
          doctest::Approx(alpha).epsilon(1e-12));
  }
  CHECK_THROWS_AS(ratio_from_alpha(-1.0), std::invalid_argument);
}

TEST_CASE("beta shape report flags and values") {
  const auto report =
      beta_shape_report({0.0, 1.0}, VarianceMode::population);
  CHECK(report.ratio == 0.25);
  CHECK(report.alpha_hat == 0.0);
  CHECK(report.popoviciu_ok);
  CHECK(report.range == 1.0);

  // Sample mode on two points exceeds the Popoviciu range, so no shape
  // estimate exists, but the population flag still holds.
  const auto sample = beta_shape_report({0.0, 1.0}, VarianceMode::sample);
  CHECK(sample.ratio == 0.5);
  CHECK(std::isnan(sample.alpha_hat));
  CHECK(sample.popoviciu_ok);
}

TEST_CASE("kde: a single kernel peaks at its center") {
  const auto density = kde({0.5}, 0.01, 513);
  REQUIRE(density.grid.size() == 513);
  CHECK(density.grid.front() == doctest::Approx(0.47));
  CHECK(density.grid.back() == doctest::Approx(0.53));
  const double peak = 1.0 / (0.01 * std::sqrt(2.0 * M_PI));
  CHECK(density.values[256] == doctest::Approx(peak).epsilon(1e-12));
  CHECK(std::fabs(trapezoid_integral(density) - 1.0) < 0.01);

  const auto default_grid = kde({0.5}, 0.01);
  double best = 0.0;
  for (double v : default_grid.values) best = std::max(best, v);
  CHECK(best == doctest::Approx(peak).epsilon(1e-2));
}

TEST_CASE("kde of symmetric data is symmetric") {
  const auto density = kde({0.2, 0.8}, 0.01, 512);
  const std::size_t g = density.values.size();
  for (std::size_t i = 0; i < g; ++i) {
    CHECK(std::fabs(density.values[i] - density.values[g - 1 - i]) < 1e-10);
  }
}

TEST_CASE("kde input validation") {
  CHECK_THROWS_AS(kde({}, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(kde({1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("periodogram slope needs at least 64 points") {
  CHECK_THROWS_AS(periodogram_slope(std::vector<double>(63, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("replicate generation dispatches on the model") {
  EnsembleSpec spec;
  spec.model = Model::tk95;
  spec.params = {{"beta", 1.0}};
  spec.n = 64;
  CHECK(generate_replicate(spec, 7).values ==
        simulate_tk95(1.0, 64, 7).values);

  spec.model = Model::wold;
  CHECK(generate_replicate(spec, 7).values.size() == 65);

  spec.model = Model::arfima;
  spec.params = {{"dfrac", 0.22}, {"dint", 2.0}, {"sigma2", 1.0}};
  CHECK(generate_replicate(spec, 7).values ==
        simulate_arfima(make_arfima_params(0.22, 2, 1.0), 64, 7).values);
}

TEST_CASE("a one-replicate ensemble reports single-replicate statistics") {
  EnsembleSpec spec;
  spec.model = Model::tk95;
  spec.params = {{"beta", 2.0}};
  spec.n = 256;
  spec.replicates = 1;
  spec.seeds = {0, 7};

  const auto result = run_ensemble(spec, 0.01);
  const auto direct = min_max_normalize(simulate_tk95(2.0, 256, 7).values);
  const auto expected = beta_shape_report(direct, VarianceMode::sample);
  CHECK(result.report.variance == expected.variance);
  CHECK(result.report.ratio == expected.ratio);
  CHECK(result.skipped_replicates == 0);
}

TEST_CASE("ensemble concatenation preserves replicate order") {
  EnsembleSpec spec;
  spec.model = Model::tk95;
  spec.params = {{"beta", 1.5}};
  spec.n = 64;
  spec.replicates = 5;
  spec.seeds = {0, 7};

  const auto data = ensemble_concatenate(spec);
  REQUIRE(data.size() == 5 * 64);
  for (int i = 0; i < 5; ++i) {
    const auto u = min_max_normalize(
        simulate_tk95(1.5, 64, spec.seeds.seed_for(i + 1)).values);
    for (std::size_t t = 0; t < 64; ++t) {
      CHECK(data[static_cast<std::size_t>(i) * 64 + t] == u[t]);
    }
  }
}

TEST_CASE("ensemble results do not depend on the worker count") {
  EnsembleSpec spec;
  spec.model = Model::wold;
  spec.params = {{"beta", 2.17}};
  spec.n = 128;
  spec.replicates = 12;
  spec.seeds = {200, 7};

  const auto serial = run_ensemble(spec, 0.01, 1);
  const auto parallel = run_ensemble(spec, 0.01, 4);
  CHECK(serial.report.variance == parallel.report.variance);
  CHECK(serial.density.values == parallel.density.values);
}

TEST_CASE("an all-degenerate ensemble raises ConstantSequenceError") {
  EnsembleSpec spec;
  spec.model = Model::arfima;
  spec.params = {{"dfrac", 0.0}, {"dint", 0.0}, {"sigma2", 1.0}};
  spec.n = 1;  // single-point replicates have zero range
  spec.replicates = 3;
  spec.seeds = {0, 7};
  CHECK_THROWS_AS(run_ensemble(spec, 0.01), ConstantSequenceError);
}

TEST_CASE("ensemble validation") {
  EnsembleSpec spec;
  spec.model = Model::tk95;
  spec.params = {{"beta", 1.0}};
  spec.replicates = 0;
  CHECK_THROWS_AS(run_ensemble(spec, 0.01), std::invalid_argument);
  spec.replicates = 2;
  spec.seeds.stride = 0;
  CHECK_THROWS_AS(run_ensemble(spec, 0.01), std::invalid_argument);
  spec.seeds.stride = 7;
  CHECK_THROWS_AS(run_ensemble(spec, -1.0), std::invalid_argument);
}
