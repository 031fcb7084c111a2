#include "ebmono/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "ebmono/grenander.hpp"

namespace ebmono {

namespace {

struct RepOutcome {
  std::vector<double> lower;
  std::vector<double> upper;
};

//! Data seed and chain seed for one replication, so any cell can be re-run
//! in isolation.
std::pair<std::uint64_t, std::uint64_t> rep_seeds(std::uint64_t master,
                                                  const TruthSpec& spec,
                                                  std::size_t n,
                                                  std::size_t rep) {
  return {derive_seed(master, {spec.tag(), n, rep, 1}),
          derive_seed(master, {spec.tag(), n, rep, 2})};
}

PosteriorDraws run_pipeline(const TruthSpec& spec, std::size_t n,
                            std::size_t rep, const ChainConfig& chain,
                            std::uint64_t master_seed, double c_mult,
                            double delta_div) {
  const auto [data_seed, chain_seed] = rep_seeds(master_seed, spec, n, rep);
  RngStream data_rng(data_seed);
  const Sample data = gen_truth(spec, n, data_rng);
  const MixtureOfUniforms theta_hat = grenander_fit(data);
  const EmpiricalPrior prior =
      build_prior(theta_hat, hyperparams(n, c_mult, delta_div));
  ChainConfig cfg = chain;
  cfg.seed = chain_seed;
  return run_chain(prior, theta_hat, data, cfg);
}

//! Run fn(rep) for rep in [0, reps) across a small pool of workers; results
//! must be written to per-rep slots so aggregation stays order-independent.
template <typename Fn>
void parallel_reps(std::size_t reps, Fn fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                            reps);
  if (workers <= 1) {
    for (std::size_t rep = 0; rep < reps; ++rep) {
      fn(rep);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t rep = next.fetch_add(1);
        if (rep >= reps) {
          return;
        }
        fn(rep);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
}

}  // namespace

double TruthSpec::pdf(double x) const {
  if (x < 0.0) {
    return 0.0;
  }
  switch (family) {
    case TruthFamily::exponential:
      return std::exp(-x);
    case TruthFamily::half_normal:
      return std::sqrt(2.0 / std::numbers::pi) * std::exp(-0.5 * x * x);
  }
  return 0.0;
}

double TruthSpec::cdf(double x) const {
  if (x <= 0.0) {
    return 0.0;
  }
  switch (family) {
    case TruthFamily::exponential:
      return -std::expm1(-x);
    case TruthFamily::half_normal:
      return std::erf(x / std::numbers::sqrt2);
  }
  return 0.0;
}

double TruthSpec::draw(RngStream& rng) const {
  switch (family) {
    case TruthFamily::exponential:
      return rng.exponential();
    case TruthFamily::half_normal:
      return std::abs(rng.normal());
  }
  return 0.0;
}

DensityView TruthSpec::density() const {
  const TruthSpec copy = *this;
  return DensityView{[copy](double x) { return copy.pdf(x); },
                     [copy](double x) { return copy.cdf(x); },
                     std::numeric_limits<double>::infinity(),
                     {}};
}

std::string TruthSpec::name() const {
  return family == TruthFamily::exponential ? "exponential" : "halfnormal";
}

std::uint64_t TruthSpec::tag() const {
  return family == TruthFamily::exponential ? 1 : 2;
}

TruthSpec truth_from_name(const std::string& name) {
  if (name == "exponential") {
    return TruthSpec{TruthFamily::exponential};
  }
  if (name == "halfnormal") {
    return TruthSpec{TruthFamily::half_normal};
  }
  throw std::invalid_argument("unknown truth '" + name +
                              "' (valid: exponential, halfnormal)");
}

Sample gen_truth(const TruthSpec& spec, std::size_t n, RngStream& rng) {
  if (n == 0) {
    throw std::invalid_argument("gen_truth requires n >= 1");
  }
  std::vector<double> values(n);
  for (double& v : values) {
    do {
      v = spec.draw(rng);
    } while (v <= 0.0);  // a draw of exactly 0 has probability 0, but guard
  }
  return Sample(std::move(values));
}

double epsilon_n(std::size_t n) {
  const double nd = static_cast<double>(n);
  return std::cbrt(std::log(nd)) / std::cbrt(nd);
}

CoverageReport coverage_experiment(const TruthSpec& spec,
                                   const std::vector<std::size_t>& n_list,
                                   const std::vector<double>& x_list,
                                   std::size_t replications,
                                   const ChainConfig& chain,
                                   std::uint64_t master_seed, double level,
                                   double c_mult, double delta_div) {
  if (replications < 1) {
    throw std::invalid_argument("replications must be >= 1");
  }
  if (n_list.empty() || x_list.empty()) {
    throw std::invalid_argument("n_list and x_list must be non-empty");
  }
  for (double x : x_list) {
    if (!(x > 0.0)) {
      // the estimator is inconsistent at the origin; x = 0 is not a cell
      throw std::invalid_argument("coverage x values must be positive");
    }
  }

  CoverageReport report;
  report.truth = spec.name();
  report.level = level;

  for (std::size_t n : n_list) {
    std::vector<RepOutcome> outcomes(replications);
    parallel_reps(replications, [&](std::size_t rep) {
      const PosteriorDraws draws =
          run_pipeline(spec, n, rep, chain, master_seed, c_mult, delta_div);
      RepOutcome& out = outcomes[rep];
      out.lower.resize(x_list.size());
      out.upper.resize(x_list.size());
      for (std::size_t k = 0; k < x_list.size(); ++k) {
        const auto [lo, hi] = interval_at(draws, x_list[k], level);
        out.lower[k] = lo;
        out.upper[k] = hi;
      }
    });

    for (std::size_t k = 0; k < x_list.size(); ++k) {
      const double truth_at_x = spec.pdf(x_list[k]);
      std::size_t covered = 0;
      double length_sum = 0.0;
      for (const RepOutcome& out : outcomes) {
        if (out.lower[k] <= truth_at_x && truth_at_x <= out.upper[k]) {
          ++covered;
        }
        length_sum += out.upper[k] - out.lower[k];
      }
      const double reps = static_cast<double>(replications);
      const double p = static_cast<double>(covered) / reps;
      report.rows.push_back(CoverageRow{n, x_list[k], p, length_sum / reps,
                                        replications,
                                        std::sqrt(p * (1.0 - p) / reps)});
    }
  }
  return report;
}

RateReport rate_study(const TruthSpec& spec,
                      const std::vector<std::size_t>& n_list,
                      std::size_t replications, const ChainConfig& chain,
                      std::uint64_t master_seed, double c_mult,
                      double delta_div) {
  if (replications < 1) {
    throw std::invalid_argument("replications must be >= 1");
  }
  if (n_list.size() < 3) {
    throw std::invalid_argument("rate study needs at least 3 sample sizes");
  }
  if (!std::is_sorted(n_list.begin(), n_list.end())) {
    throw std::invalid_argument("n_list must be increasing");
  }

  const DensityView truth = spec.density();

  RateReport report;
  report.truth = spec.name();

  // per n: mean posterior-mean error per rep, and every draw's distance
  std::vector<std::vector<double>> mean_errors(n_list.size());
  std::vector<std::vector<std::vector<double>>> draw_dists(n_list.size());

  for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
    const std::size_t n = n_list[ni];
    mean_errors[ni].assign(replications, 0.0);
    draw_dists[ni].assign(replications, {});
    parallel_reps(replications, [&](std::size_t rep) {
      const PosteriorDraws draws =
          run_pipeline(spec, n, rep, chain, master_seed, c_mult, delta_div);
      mean_errors[ni][rep] =
          l1_distance(as_density(posterior_mean_mixture(draws)), truth);
      auto& dists = draw_dists[ni][rep];
      dists.resize(draws.draws.size());
      for (std::size_t d = 0; d < draws.draws.size(); ++d) {
        dists[d] = l1_distance(as_density(draws.draws[d]), truth);
      }
    });
  }

  // calibrate M once at the smallest n: median pooled draw distance sits at
  // M * eps_n, so the initial outside-mass is about one half
  std::vector<double> pooled;
  for (const auto& per_rep : draw_dists[0]) {
    pooled.insert(pooled.end(), per_rep.begin(), per_rep.end());
  }
  report.calibrated_m = empirical_quantile(pooled, 0.5) / epsilon_n(n_list[0]);

  for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
    const std::size_t n = n_list[ni];
    const double radius = report.calibrated_m * epsilon_n(n);
    double err_sum = 0.0;
    double mass_sum = 0.0;
    for (std::size_t rep = 0; rep < replications; ++rep) {
      err_sum += mean_errors[ni][rep];
      const auto& dists = draw_dists[ni][rep];
      std::size_t outside = 0;
      for (double d : dists) {
        if (d > radius) {
          ++outside;
        }
      }
      mass_sum += static_cast<double>(outside) /
                  static_cast<double>(dists.size());
    }
    const double reps = static_cast<double>(replications);
    report.rows.push_back(RateRow{n, epsilon_n(n), err_sum / reps,
                                  mass_sum / reps, replications});
  }
  return report;
}

}  // namespace ebmono
