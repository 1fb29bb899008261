#include "lmbeta/sequence.hpp"

#include <cmath>
#include <stdexcept>

namespace lmbeta {

void validate(const Sequence& s) {
  if (s.values.empty()) {
    throw std::invalid_argument("sequence must contain at least one value");
  }
  if (s.meta.n != s.values.size()) {
    throw std::invalid_argument("sequence meta.n does not match length");
  }
  for (double v : s.values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("sequence contains a non-finite value");
    }
  }
}

double PsdTrend::value(double f) const {
  return k * std::pow(std::fabs(f), -beta);
}

PsdTrend make_psd_trend(double k, double beta) {
  if (!(k > 0.0)) throw std::invalid_argument("psd trend requires k > 0");
  if (!(beta >= 0.0)) throw std::invalid_argument("psd trend requires beta >= 0");
  return PsdTrend{k, beta};
}

Model model_from_name(const std::string& name) {
  if (name == "arfima") return Model::arfima;
  if (name == "tk95") return Model::tk95;
  if (name == "wold") return Model::wold;
  throw std::invalid_argument("unknown model '" + name +
                              "' (expected arfima, tk95, or wold)");
}

std::string to_string(Model model) {
  switch (model) {
    case Model::arfima: return "arfima";
    case Model::tk95: return "tk95";
    case Model::wold: return "wold";
  }
  throw std::invalid_argument("invalid model enum value");
}

void validate(const EnsembleSpec& spec) {
  if (spec.replicates < 1) {
    throw std::invalid_argument("ensemble requires replicates >= 1");
  }
  if (spec.n < 1) throw std::invalid_argument("ensemble requires n >= 1");
  if (spec.seeds.stride == 0) {
    throw std::invalid_argument("seed stride must be nonzero");
  }
}

}  // namespace lmbeta
