#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lmbeta {

struct SequenceMeta {
  std::string model;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  std::size_t n = 0;  // must equal values.size()
};

/// A finite real-valued series plus the metadata that produced it.
struct Sequence {
  std::vector<double> values;
  SequenceMeta meta;

  std::size_t size() const { return values.size(); }
};

/// Throws std::invalid_argument if the sequence is empty, contains a
/// non-finite value, or meta.n disagrees with values.size().
void validate(const Sequence& s);

/// Power-law spectral trend k * |f|^(-beta), k > 0, beta >= 0.
struct PsdTrend {
  double k = 1.0;
  double beta = 0.0;

  double value(double f) const;
};

/// Validated constructor; throws std::invalid_argument on k <= 0 or beta < 0.
PsdTrend make_psd_trend(double k, double beta);

enum class Model { arfima, tk95, wold };

Model model_from_name(const std::string& name);
std::string to_string(Model model);

/// Affine replicate seeding: seed(i) = offset + i * stride (stride != 0, so
/// replicates get distinct seeds). Unsigned wrap-around is intentional.
struct SeedRule {
  std::uint64_t offset = 0;
  std::uint64_t stride = 1;

  std::uint64_t seed_for(std::uint64_t i) const { return offset + i * stride; }
};

struct EnsembleSpec {
  Model model = Model::tk95;
  std::map<std::string, double> params;
  int replicates = 1;
  int n = 1000;
  SeedRule seeds;
};

/// Throws std::invalid_argument on replicates < 1, n < 1, or stride == 0.
void validate(const EnsembleSpec& spec);

}  // namespace lmbeta
