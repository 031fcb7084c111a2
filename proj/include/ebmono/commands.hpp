#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ebmono/mixture.hpp"

namespace ebmono {

//! Effective configuration of one CLI invocation; everything here lands in
//! meta.json so runs can be reproduced.
struct RunConfig {
  std::string command;  // fit | grenander | simulate | rate
  std::string data_path;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  std::size_t burn_in = 1000;
  std::size_t iterations = 2000;
  std::size_t thin = 1;
  std::size_t grid = 512;
  double level = 0.95;
  std::string truth = "exponential";
  std::vector<std::size_t> n_list;
  std::vector<double> x_list;
  std::size_t reps = 200;
  double c_mult = 0.01;
  double delta_div = 20.0;
  bool emit_draws = false;
};

//! Parse one positive real per line, or the first numeric column of a
//! comma-separated file with an optional header row.  Errors cite the
//! offending line.
Sample ingest(const std::string& path);

//! Dispatch on config.command; returns the process exit code (0 only when
//! every requested output was written).
int run_command(const RunConfig& config);

}  // namespace ebmono
