#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ebmono/gibbs.hpp"
#include "ebmono/mixture.hpp"
#include "ebmono/prior.hpp"
#include "ebmono/rng.hpp"
#include "ebmono/summaries.hpp"

namespace ebmono {

//! Simulation truths: monotone densities with closed-form pdf/cdf/sampler.
enum class TruthFamily { exponential, half_normal };

struct TruthSpec {
  TruthFamily family = TruthFamily::exponential;

  double pdf(double x) const;
  double cdf(double x) const;
  double draw(RngStream& rng) const;
  DensityView density() const;
  std::string name() const;
  std::uint64_t tag() const;
};

TruthSpec truth_from_name(const std::string& name);

//! n iid draws from the truth.
Sample gen_truth(const TruthSpec& spec, std::size_t n, RngStream& rng);

struct CoverageRow {
  std::size_t n = 0;
  double x = 0.0;
  double coverage = 0.0;
  double mean_length = 0.0;
  std::size_t replications = 0;
  double mc_std_err = 0.0;
};

struct CoverageReport {
  std::string truth;
  double level = 0.95;
  std::vector<CoverageRow> rows;
};

struct RateRow {
  std::size_t n = 0;
  double epsilon_n = 0.0;
  double mean_l1 = 0.0;
  double mass_beyond = 0.0;  // posterior mass outside the M * eps_n ball
  std::size_t replications = 0;
};

struct RateReport {
  std::string truth;
  double calibrated_m = 0.0;
  std::vector<RateRow> rows;
};

//! Target contraction rate eps_n = (log n)^{1/3} n^{-1/3}.
double epsilon_n(std::size_t n);

//! Per (n, x): the fraction of replications whose level credible interval
//! covers the true f(x), plus the average interval length.  Each replication
//! runs the full pipeline (fit, prior, chain, interval) on its own stream
//! derived from (master_seed, truth, n, replication), so the report is
//! reproducible bit for bit and replications can run in parallel.
CoverageReport coverage_experiment(const TruthSpec& spec,
                                   const std::vector<std::size_t>& n_list,
                                   const std::vector<double>& x_list,
                                   std::size_t replications,
                                   const ChainConfig& chain,
                                   std::uint64_t master_seed,
                                   double level = 0.95,
                                   double c_mult = kDefaultCMult,
                                   double delta_div = kDefaultDeltaDiv);

//! Per n: average L1 distance between the truth and the posterior mean, and
//! the average posterior mass beyond M * eps_n, with M calibrated at the
//! smallest n so the initial mass is about 0.5.
RateReport rate_study(const TruthSpec& spec,
                      const std::vector<std::size_t>& n_list,
                      std::size_t replications, const ChainConfig& chain,
                      std::uint64_t master_seed,
                      double c_mult = kDefaultCMult,
                      double delta_div = kDefaultDeltaDiv);

}  // namespace ebmono
