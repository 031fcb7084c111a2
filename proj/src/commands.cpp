#include "ebmono/commands.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ebmono/experiments.hpp"
#include "ebmono/gibbs.hpp"
#include "ebmono/grenander.hpp"
#include "ebmono/prior.hpp"
#include "ebmono/summaries.hpp"

namespace ebmono {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

//! Binary mode keeps line endings LF everywhere.
void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << content;
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

ChainConfig chain_from(const RunConfig& config) {
  return ChainConfig{config.burn_in, config.iterations, config.thin,
                     config.seed};
}

json base_meta(const RunConfig& config) {
  json meta;
  meta["command"] = config.command;
  meta["seed"] = config.seed;
  meta["out_dir"] = config.out_dir;
  meta["chain"] = {{"burn_in", config.burn_in},
                   {"iterations", config.iterations},
                   {"thin", config.thin}};
  meta["c_mult"] = config.c_mult;
  meta["delta_div"] = config.delta_div;
  return meta;
}

std::string grenander_csv(const MixtureOfUniforms& theta_hat) {
  const StepDensityView step = to_step(theta_hat);
  std::string csv = "component,knot,height,weight,location\n";
  for (std::size_t s = 0; s < theta_hat.size(); ++s) {
    csv += std::to_string(s + 1) + "," + fmt(step.knots()[s]) + "," +
           fmt(step.heights()[s]) + "," + fmt(theta_hat.weights()[s]) + "," +
           fmt(theta_hat.locations()[s]) + "\n";
  }
  return csv;
}

std::string band_csv(const CredibleBand& band) {
  std::string csv = "x,mean,lower,upper\n";
  for (std::size_t k = 0; k < band.grid.size(); ++k) {
    csv += fmt(band.grid[k]) + "," + fmt(band.mean[k]) + "," +
           fmt(band.lower[k]) + "," + fmt(band.upper[k]) + "\n";
  }
  return csv;
}

std::string draws_csv(const PosteriorDraws& draws) {
  std::string csv = "draw,component,weight,location\n";
  for (std::size_t d = 0; d < draws.draws.size(); ++d) {
    const auto& theta = draws.draws[d];
    for (std::size_t s = 0; s < theta.size(); ++s) {
      csv += std::to_string(d + 1) + "," + std::to_string(s + 1) + "," +
             fmt(theta.weights()[s]) + "," + fmt(theta.locations()[s]) + "\n";
    }
  }
  return csv;
}

std::string coverage_csv(const CoverageReport& report) {
  std::string csv = "truth,n,x,coverage,mean_length,replications,mc_std_err\n";
  for (const CoverageRow& row : report.rows) {
    csv += report.truth + "," + std::to_string(row.n) + "," + fmt(row.x) +
           "," + fmt(row.coverage) + "," + fmt(row.mean_length) + "," +
           std::to_string(row.replications) + "," + fmt(row.mc_std_err) + "\n";
  }
  return csv;
}

std::string rate_csv(const RateReport& report) {
  std::string csv = "truth,n,epsilon_n,mean_l1,mass_beyond,replications\n";
  for (const RateRow& row : report.rows) {
    csv += report.truth + "," + std::to_string(row.n) + "," +
           fmt(row.epsilon_n) + "," + fmt(row.mean_l1) + "," +
           fmt(row.mass_beyond) + "," + std::to_string(row.replications) +
           "\n";
  }
  return csv;
}

int run_fit(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const Sample data = ingest(config.data_path);
  const MixtureOfUniforms theta_hat = grenander_fit(data);

  json meta = base_meta(config);
  meta["data_path"] = config.data_path;
  meta["n"] = data.size();
  meta["S"] = theta_hat.size();

  // outputs accumulate here and hit disk only once everything succeeded
  std::vector<std::pair<std::string, std::string>> outputs;
  outputs.emplace_back("grenander.csv", grenander_csv(theta_hat));

  if (config.command == "fit") {
    const Hyperparams hp =
        hyperparams(data.size(), config.c_mult, config.delta_div);
    const EmpiricalPrior prior = build_prior(theta_hat, hp);
    const PosteriorDraws draws =
        run_chain(prior, theta_hat, data, chain_from(config));
    std::vector<double> grid = default_band_grid(data.max(), config.grid);
    CredibleBand band;
    if (draws.draws.size() >= 2) {
      band = pointwise_band(draws, std::move(grid), config.level);
    } else {
      // a single retained draw gives a zero-width band
      band.grid = std::move(grid);
      band.level = config.level;
      band.mean = posterior_mean_density(draws, band.grid);
      band.lower = band.mean;
      band.upper = band.mean;
    }

    meta["c"] = hp.c;
    meta["delta"] = hp.delta;
    meta["grid"] = config.grid;
    meta["level"] = config.level;
    meta["emit_draws"] = config.emit_draws;
    meta["draws_retained"] = draws.draws.size();
    outputs.emplace_back("band.csv", band_csv(band));
    if (config.emit_draws) {
      outputs.emplace_back("draws.csv", draws_csv(draws));
    }
  }

  meta["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  fs::create_directories(config.out_dir);
  for (const auto& [name, content] : outputs) {
    write_file(fs::path(config.out_dir) / name, content);
  }
  write_file(fs::path(config.out_dir) / "meta.json", meta.dump(2) + "\n");
  return 0;
}

int run_simulate(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const TruthSpec spec = truth_from_name(config.truth);
  if (config.n_list.empty()) {
    throw std::invalid_argument("simulate needs --n");
  }
  if (config.x_list.empty()) {
    throw std::invalid_argument("simulate needs --x");
  }
  const CoverageReport report = coverage_experiment(
      spec, config.n_list, config.x_list, config.reps, chain_from(config),
      config.seed, config.level, config.c_mult, config.delta_div);

  json meta = base_meta(config);
  meta["truth"] = config.truth;
  meta["n_list"] = config.n_list;
  meta["x_list"] = config.x_list;
  meta["replications"] = config.reps;
  meta["level"] = config.level;
  meta["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  fs::create_directories(config.out_dir);
  write_file(fs::path(config.out_dir) / "coverage.csv", coverage_csv(report));
  write_file(fs::path(config.out_dir) / "meta.json", meta.dump(2) + "\n");
  return 0;
}

int run_rate(const RunConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const TruthSpec spec = truth_from_name(config.truth);
  if (config.n_list.empty()) {
    throw std::invalid_argument("rate needs --n");
  }
  const RateReport report =
      rate_study(spec, config.n_list, config.reps, chain_from(config),
                 config.seed, config.c_mult, config.delta_div);

  json meta = base_meta(config);
  meta["truth"] = config.truth;
  meta["n_list"] = config.n_list;
  meta["replications"] = config.reps;
  meta["calibrated_m"] = report.calibrated_m;
  meta["wall_clock_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  fs::create_directories(config.out_dir);
  write_file(fs::path(config.out_dir) / "rate.csv", rate_csv(report));
  write_file(fs::path(config.out_dir) / "meta.json", meta.dump(2) + "\n");
  return 0;
}

}  // namespace

Sample ingest(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open data file: " + path);
  }

  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    std::string field = line.substr(0, line.find(','));
    const std::size_t begin = field.find_first_not_of(" \t");
    if (begin == std::string::npos) {
      continue;  // blank line
    }
    const std::size_t end = field.find_last_not_of(" \t");
    field = field.substr(begin, end - begin + 1);

    double v = 0.0;
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
      if (header_allowed) {
        header_allowed = false;  // one non-numeric header row is fine
        continue;
      }
      throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                               ": not a number: '" + field + "'");
    }
    header_allowed = false;
    if (!(v > 0.0)) {
      throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                               ": values must be positive, got " + field);
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw std::runtime_error(path + ": no data rows");
  }
  return Sample(std::move(values));
}

int run_command(const RunConfig& config) {
  try {
    if (config.command == "fit" || config.command == "grenander") {
      return run_fit(config);
    }
    if (config.command == "simulate") {
      return run_simulate(config);
    }
    if (config.command == "rate") {
      return run_rate(config);
    }
    throw std::invalid_argument("unknown command: " + config.command);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ebmono
