#include "lmbeta/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "lmbeta/analysis.hpp"
#include "lmbeta/circulant.hpp"
#include "lmbeta/errors.hpp"
#include "lmbeta/generators.hpp"
#include "lmbeta/sequence.hpp"

namespace lmbeta::cli {

namespace {

using json = nlohmann::ordered_json;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

unsigned env_threads() {
  const char* raw = std::getenv("LMBETA_THREADS");
  if (raw == nullptr) return 1;
  const long parsed = std::strtol(raw, nullptr, 10);
  return parsed > 1 ? static_cast<unsigned>(parsed) : 1;
}

void write_values_file(const std::string& path,
                       const std::vector<double>& values) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  for (double v : values) file << g17(v) << '\n';
  if (!file.good()) throw IoError("failed while writing '" + path + "'");
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<double>& col0,
               const std::vector<double>& col1) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << header << '\n';
  for (std::size_t i = 0; i < col0.size(); ++i) {
    file << g17(col0[i]) << ',' << g17(col1[i]) << '\n';
  }
  if (!file.good()) throw IoError("failed while writing '" + path + "'");
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file.good()) throw IoError("failed while writing '" + path + "'");
}

// One numeric value per line. CSV-style lines are accepted too: an initial
// header row is skipped and the last comma-separated field is used.
std::vector<double> read_values_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for reading");
  std::vector<double> values;
  std::string line;
  bool first_content_line = true;
  while (std::getline(file, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    const std::size_t comma = line.rfind(',');
    const std::string field =
        comma == std::string::npos ? line : line.substr(comma + 1);
    try {
      std::size_t used = 0;
      const double v = std::stod(field, &used);
      if (used != field.size() || !std::isfinite(v)) {
        throw std::invalid_argument(field);
      }
      values.push_back(v);
    } catch (const std::exception&) {
      if (first_content_line) {  // header row
        first_content_line = false;
        continue;
      }
      throw std::invalid_argument("unparseable value '" + field + "' in '" +
                                  path + "'");
    }
    first_content_line = false;
  }
  if (values.empty()) {
    throw std::invalid_argument("no numeric values found in '" + path + "'");
  }
  return values;
}

void append_shape_fields(json& report, const BetaShapeReport& shape) {
  report["variance_mode"] = to_string(shape.variance_mode);
  report["variance"] = shape.variance;
  report["range"] = shape.range;
  report["ratio"] = shape.ratio;
  if (std::isnan(shape.alpha_hat)) {
    report["alpha_hat"] = nullptr;
  } else {
    report["alpha_hat"] = shape.alpha_hat;
  }
  report["popoviciu_ok"] = shape.popoviciu_ok;
}

struct GenerateOptions {
  std::string model;
  double beta = -1.0;
  bool beta_set = false;
  double dfrac = 0.22;
  int dint = 2;
  double sigma2 = 1.0;
  int n = 1000;
  std::uint64_t seed = 7;
  std::string out;
};

json model_params_json(Model model, const GenerateOptions& o) {
  json params;
  if (model == Model::arfima) {
    params["dfrac"] = o.dfrac;
    params["dint"] = o.dint;
    params["sigma2"] = o.sigma2;
  } else {
    params["beta"] = o.beta;
  }
  return params;
}

double require_beta(const GenerateOptions& o) {
  if (!o.beta_set) {
    throw std::invalid_argument("--beta is required for model " + o.model);
  }
  if (o.beta < 0.0) {
    throw std::invalid_argument("--beta must be >= 0");
  }
  return o.beta;
}

Sequence generate_sequence(Model model, const GenerateOptions& o) {
  const std::size_t n = static_cast<std::size_t>(o.n);
  switch (model) {
    case Model::arfima:
      return simulate_arfima(make_arfima_params(o.dfrac, o.dint, o.sigma2), n,
                             o.seed);
    case Model::tk95:
      return simulate_tk95(require_beta(o), n, o.seed);
    case Model::wold:
      return simulate_wold(require_beta(o), n, o.seed);
  }
  throw std::invalid_argument("invalid model");
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  if (o.n < 1) throw std::invalid_argument("--n must be >= 1");
  const Model model = model_from_name(o.model);
  const Sequence s = generate_sequence(model, o);
  write_values_file(o.out, s.values);

  json report;
  report["command"] = "generate";
  report["model"] = o.model;
  report["params"] = model_params_json(model, o);
  report["n"] = o.n;
  report["seed"] = o.seed;
  report["length"] = s.values.size();
  append_shape_fields(report, beta_shape_report(s.values, VarianceMode::sample));
  report["out"] = o.out;
  out << report.dump(2) << '\n';
  return 0;
}

struct EnsembleOptions {
  std::string model;
  double beta = -1.0;
  bool beta_set = false;
  double dfrac = 0.22;
  int dint = 2;
  double sigma2 = 1.0;
  int n = 1000;
  int replicates = 0;        // 0: per-model default
  std::uint64_t seed_offset = 0;
  std::uint64_t seed_stride = 7;
  bool offset_set = false;
  bool replicates_set = false;
  double bandwidth = 0.01;
  std::string out_prefix;
};

int cmd_ensemble(const EnsembleOptions& o, std::ostream& out) {
  if (o.n < 1) throw std::invalid_argument("--n must be >= 1");
  EnsembleSpec spec;
  spec.model = model_from_name(o.model);
  spec.n = o.n;

  if (spec.model == Model::arfima) {
    make_arfima_params(o.dfrac, o.dint, o.sigma2);
    spec.params = {{"dfrac", o.dfrac},
                   {"dint", static_cast<double>(o.dint)},
                   {"sigma2", o.sigma2}};
  } else {
    GenerateOptions g;
    g.model = o.model;
    g.beta = o.beta;
    g.beta_set = o.beta_set;
    spec.params = {{"beta", require_beta(g)}};
  }

  // Replicate counts and seed rules default to seeds i*7 over 200
  // replicates, except the wold model which uses 100 replicates with
  // seeds 200 + i*7.
  spec.replicates = o.replicates_set
                        ? o.replicates
                        : (spec.model == Model::wold ? 100 : 200);
  spec.seeds.offset = o.offset_set
                          ? o.seed_offset
                          : (spec.model == Model::wold ? 200u : 0u);
  spec.seeds.stride = o.seed_stride;

  const EnsembleResult result = run_ensemble(spec, o.bandwidth, env_threads());

  const std::string density_path = o.out_prefix + "_density.csv";
  const std::string report_path = o.out_prefix + "_report.json";
  write_csv(density_path, "grid,density", result.density.grid,
            result.density.values);

  json report;
  report["command"] = "ensemble";
  report["model"] = o.model;
  json params;
  if (spec.model == Model::arfima) {
    params["dfrac"] = o.dfrac;
    params["dint"] = o.dint;
    params["sigma2"] = o.sigma2;
  } else {
    params["beta"] = o.beta;
  }
  report["params"] = params;
  report["n"] = o.n;
  report["replicates"] = spec.replicates;
  report["seed_offset"] = spec.seeds.offset;
  report["seed_stride"] = spec.seeds.stride;
  report["bandwidth"] = o.bandwidth;
  append_shape_fields(report, result.report);
  report["skipped_replicates"] = result.skipped_replicates;
  report["outputs"] = {{"density_csv", density_path},
                       {"report_json", report_path}};

  const std::string text = report.dump(2) + "\n";
  write_text_file(report_path, text);
  out << text;
  return 0;
}

struct EstimateOptions {
  std::string in;
  bool with_slope = false;
  std::string mode = "sample";
};

int cmd_estimate(const EstimateOptions& o, std::ostream& out) {
  const VarianceMode mode = o.mode == "population" ? VarianceMode::population
                                                   : VarianceMode::sample;
  const std::vector<double> values = read_values_file(o.in);

  json report;
  report["command"] = "estimate";
  report["in"] = o.in;
  report["length"] = values.size();
  append_shape_fields(report, beta_shape_report(values, mode));
  if (o.with_slope) {
    report["periodogram_slope"] = periodogram_slope(values);
  }
  out << report.dump(2) << '\n';
  return 0;
}

struct TransformOptions {
  double beta = 0.0;
  int n = 1000;
  double grid_min = -1000.0;
  double grid_max = 1000.0;
  std::string out;
};

int cmd_transform(const TransformOptions& o, std::ostream& out) {
  if (o.n < 2) throw std::invalid_argument("--n must be >= 2");
  if (!(o.grid_max > o.grid_min)) {
    throw std::invalid_argument("--grid-max must exceed --grid-min");
  }
  const std::size_t n = static_cast<std::size_t>(o.n);
  std::vector<double> grid(n + 1);
  const double step = (o.grid_max - o.grid_min) / static_cast<double>(n);
  for (std::size_t k = 0; k <= n; ++k) {
    grid[k] = o.grid_min + static_cast<double>(k) * step;
  }

  const TransformResult result = transform_cdf(o.beta, n, grid);
  write_csv(o.out, "y,F_B", result.y_grid, result.cdf_values);

  json report;
  report["command"] = "transform";
  report["beta"] = o.beta;
  report["n"] = o.n;
  report["grid_min"] = o.grid_min;
  report["grid_max"] = o.grid_max;
  report["rows"] = result.y_grid.size();
  report["out"] = o.out;
  out << report.dump(2) << '\n';
  return 0;
}

void add_model_options(CLI::App* cmd, std::string& model, double& beta,
                       bool& beta_set, double& dfrac, int& dint,
                       double& sigma2) {
  cmd->add_option("--model", model, "arfima, tk95, or wold")
      ->required()
      ->check(CLI::IsMember({"arfima", "tk95", "wold"}));
  cmd->add_option("--beta", beta, "spectral exponent (tk95/wold)")
      ->each([&beta_set](const std::string&) { beta_set = true; });
  cmd->add_option("--dfrac", dfrac, "fractional differencing order (arfima)")
      ->capture_default_str();
  cmd->add_option("--dint", dint, "integer differencing order (arfima)")
      ->capture_default_str();
  cmd->add_option("--sigma2", sigma2, "innovation variance (arfima)")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"long-memory sequence generation and beta-shape analysis"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand(
      "generate", "generate one sequence, one value per line");
  add_model_options(generate, gen.model, gen.beta, gen.beta_set, gen.dfrac,
                    gen.dint, gen.sigma2);
  generate->add_option("--n", gen.n, "sequence length parameter")
      ->capture_default_str();
  generate->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  generate->add_option("--out", gen.out, "output file")->required();

  EnsembleOptions ens;
  auto* ensemble = app.add_subcommand(
      "ensemble", "replicated generate + normalize + concatenate pipeline");
  add_model_options(ensemble, ens.model, ens.beta, ens.beta_set, ens.dfrac,
                    ens.dint, ens.sigma2);
  ensemble->add_option("--n", ens.n, "per-replicate length")
      ->capture_default_str();
  ensemble->add_option("--replicates", ens.replicates,
                       "replicate count (default 200; wold 100)")
      ->each([&ens](const std::string&) { ens.replicates_set = true; });
  ensemble->add_option("--seed-offset", ens.seed_offset,
                       "seed(i) = offset + i*stride (default 0; wold 200)")
      ->each([&ens](const std::string&) { ens.offset_set = true; });
  ensemble->add_option("--seed-stride", ens.seed_stride, "seed stride")
      ->capture_default_str();
  ensemble->add_option("--bandwidth", ens.bandwidth, "kernel bandwidth")
      ->capture_default_str();
  ensemble->add_option("--out-prefix", ens.out_prefix,
                       "writes <prefix>_density.csv and <prefix>_report.json")
      ->required();

  EstimateOptions est;
  auto* estimate = app.add_subcommand(
      "estimate", "beta-shape report for a file of values (one per line)");
  estimate->add_option("--in", est.in, "input file")->required();
  estimate->add_flag("--with-slope", est.with_slope,
                     "also fit the periodogram slope");
  estimate->add_option("--mode", est.mode, "variance mode")
      ->capture_default_str()
      ->check(CLI::IsMember({"sample", "population"}));

  TransformOptions tr;
  auto* transform = app.add_subcommand(
      "transform",
      "normal-to-beta distribution function along a grid (CSV of y,F_B); "
      "at beta=0 the transition concentrates near the middle ~10% of rows");
  transform->add_option("--beta", tr.beta, "spectral exponent")
      ->capture_default_str();
  transform->add_option("--n", tr.n, "grid has n+1 rows")
      ->capture_default_str();
  transform->add_option("--grid-min", tr.grid_min, "grid start")
      ->capture_default_str();
  transform->add_option("--grid-max", tr.grid_max, "grid end")
      ->capture_default_str();
  transform->add_option("--out", tr.out, "output CSV")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (generate->parsed()) return cmd_generate(gen, out);
    if (ensemble->parsed()) return cmd_ensemble(ens, out);
    if (estimate->parsed()) return cmd_estimate(est, out);
    if (transform->parsed()) return cmd_transform(tr, out);
    err << "error: no subcommand given\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SingularOperatorError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace lmbeta::cli
