#include "ebmono/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ebmono {

namespace {

void recount(GibbsState& state, const Sample& data) {
  const std::size_t S = state.theta.size();
  state.counts.assign(S, 0);
  state.cluster_max.assign(S, 0.0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const std::uint32_t s = state.allocations[i];
    ++state.counts[s];
    state.cluster_max[s] = std::max(state.cluster_max[s], data.values()[i]);
  }
}

//! Draw allocations from P(z_i = s) proportional to omega_s / mu_s over the
//! feasible components {s : X_i <= mu_s}.  Probabilities come from
//! log omega_s - log mu_s with max-subtraction before exponentiation.
void draw_allocations(GibbsState& state, const Sample& data, RngStream& rng) {
  const auto& w = state.theta.weights();
  const auto& mu = state.theta.locations();
  const std::size_t S = state.theta.size();

  std::vector<double> log_rate(S);
  double gmax = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < S; ++s) {
    log_rate[s] = std::log(w[s]) - std::log(mu[s]);
    gmax = std::max(gmax, log_rate[s]);
  }
  std::vector<double> rate(S);
  for (std::size_t s = 0; s < S; ++s) {
    rate[s] = std::exp(log_rate[s] - gmax);
  }

  for (std::size_t i = 0; i < data.size(); ++i) {
    const double x = data.values()[i];
    double total = 0.0;
    for (std::size_t s = 0; s < S; ++s) {
      if (x <= mu[s]) {
        total += rate[s];
      }
    }
    if (!(total > 0.0)) {
      throw std::logic_error("infeasible state: no component covers a point");
    }
    const double u = rng.uniform01() * total;
    double cum = 0.0;
    std::uint32_t pick = state.allocations[i];
    for (std::size_t s = 0; s < S; ++s) {
      if (x <= mu[s]) {
        cum += rate[s];
        if (u < cum) {
          pick = static_cast<std::uint32_t>(s);
          break;
        }
      }
    }
    state.allocations[i] = pick;
  }
}

}  // namespace

GibbsState init_state(const EmpiricalPrior& prior,
                      const MixtureOfUniforms& theta_hat, const Sample& data,
                      RngStream& rng) {
  if (prior.size() != theta_hat.size()) {
    throw std::invalid_argument("prior and centering fit dimension mismatch");
  }
  if (data.max() > theta_hat.max_location()) {
    throw std::invalid_argument(
        "centering fit does not cover the data support");
  }
  GibbsState state{theta_hat,
                   std::vector<std::uint32_t>(data.size(), 0),
                   {},
                   {}};
  draw_allocations(state, data, rng);
  recount(state, data);
  return state;
}

void update_allocations(GibbsState& state, const Sample& data,
                        RngStream& rng) {
  draw_allocations(state, data, rng);
  recount(state, data);
}

void update_weights(GibbsState& state, const EmpiricalPrior& prior,
                    RngStream& rng) {
  std::vector<double> post_alpha(prior.size());
  for (std::size_t s = 0; s < prior.size(); ++s) {
    post_alpha[s] =
        prior.alpha()[s] + static_cast<double>(state.counts[s]);
  }
  state.theta = MixtureOfUniforms::labelled(rng.dirichlet(post_alpha),
                                            state.theta.locations());
}

void update_locations(GibbsState& state, const EmpiricalPrior& prior,
                      RngStream& rng) {
  std::vector<double> locations(prior.size());
  for (std::size_t s = 0; s < prior.size(); ++s) {
    const double mu_hat = prior.pareto_scales()[s];
    const double lower =
        state.counts[s] > 0 ? std::max(mu_hat, state.cluster_max[s]) : mu_hat;
    const double shape = prior.delta() + static_cast<double>(state.counts[s]);
    locations[s] = rng.pareto(lower, shape);
  }
  state.theta = MixtureOfUniforms::labelled(state.theta.weights(),
                                            std::move(locations));
}

void gibbs_sweep(GibbsState& state, const EmpiricalPrior& prior,
                 const Sample& data, RngStream& rng) {
  update_allocations(state, data, rng);
  update_weights(state, prior, rng);
  update_locations(state, prior, rng);
}

PosteriorDraws run_chain(const EmpiricalPrior& prior,
                         const MixtureOfUniforms& theta_hat,
                         const Sample& data, const ChainConfig& config) {
  if (config.iterations < 1 || config.thin < 1) {
    throw std::invalid_argument("iterations and thin must be >= 1");
  }
  RngStream rng(config.seed);
  GibbsState state = init_state(prior, theta_hat, data, rng);

  for (std::size_t it = 0; it < config.burn_in; ++it) {
    gibbs_sweep(state, prior, data, rng);
  }

  PosteriorDraws out;
  out.config = config;
  out.draws.reserve(config.iterations / config.thin);
  for (std::size_t it = 1; it <= config.iterations; ++it) {
    gibbs_sweep(state, prior, data, rng);
    if (it % config.thin == 0) {
      out.draws.push_back(state.theta);
    }
  }
  return out;
}

}  // namespace ebmono
