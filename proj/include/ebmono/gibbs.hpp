#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ebmono/mixture.hpp"
#include "ebmono/prior.hpp"
#include "ebmono/rng.hpp"

namespace ebmono {

struct ChainConfig {
  std::size_t burn_in = 1000;
  std::size_t iterations = 2000;  // post burn-in
  std::size_t thin = 1;
  std::uint64_t seed = 1;
};

//! Current chain state: theta, latent allocations z_i, per-component counts
//! and cluster maxima (0 marks an empty component).  Always feasible:
//! X_i <= mu_{z_i} for every i.
struct GibbsState {
  MixtureOfUniforms theta;
  std::vector<std::uint32_t> allocations;
  std::vector<std::size_t> counts;
  std::vector<double> cluster_max;
};

//! Retained draws plus the chain settings that produced them.
struct PosteriorDraws {
  std::vector<MixtureOfUniforms> draws;
  ChainConfig config;
};

//! Start the chain at the centering fit theta_hat (feasible by construction)
//! with allocations drawn from their conditional law given theta_hat.
GibbsState init_state(const EmpiricalPrior& prior,
                      const MixtureOfUniforms& theta_hat, const Sample& data,
                      RngStream& rng);

//! (a) allocations: P(z_i = s) proportional to omega_s / mu_s on feasible s.
//! Recomputes counts and cluster maxima.
void update_allocations(GibbsState& state, const Sample& data, RngStream& rng);

//! (b) weights: omega ~ Dirichlet(alpha_hat + counts).
void update_weights(GibbsState& state, const EmpiricalPrior& prior,
                    RngStream& rng);

//! (c) locations: mu_s ~ Pareto(max(mu_hat_s, cluster_max_s), delta + n_s);
//! empty components draw from the prior Par(mu_hat_s, delta).
void update_locations(GibbsState& state, const EmpiricalPrior& prior,
                      RngStream& rng);

//! One systematic sweep: allocations, weights, locations.
void gibbs_sweep(GibbsState& state, const EmpiricalPrior& prior,
                 const Sample& data, RngStream& rng);

//! Full chain: burn-in sweeps discarded, then every thin-th theta retained.
//! Deterministic given config.seed.
PosteriorDraws run_chain(const EmpiricalPrior& prior,
                         const MixtureOfUniforms& theta_hat,
                         const Sample& data, const ChainConfig& config);

}  // namespace ebmono
