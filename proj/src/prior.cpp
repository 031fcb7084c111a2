#include "ebmono/prior.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace ebmono {

Hyperparams hyperparams(std::size_t n, double c_mult, double delta_div) {
  if (n < 2) {
    throw std::invalid_argument("hyperparams requires n >= 2");
  }
  if (!(c_mult > 0.0) || !(delta_div > 0.0)) {
    throw std::invalid_argument("hyperparameter constants must be positive");
  }
  const double nd = static_cast<double>(n);
  const double logn = std::log(nd);
  return Hyperparams{
      c_mult * std::pow(nd, 5.0 / 3.0) / std::pow(logn, 2.0 / 3.0),
      logn / delta_div};
}

EmpiricalPrior::EmpiricalPrior(std::vector<double> alpha,
                               std::vector<double> pareto_scales, double delta,
                               double c)
    : alpha_(std::move(alpha)),
      pareto_scales_(std::move(pareto_scales)),
      delta_(delta),
      c_(c) {
  if (alpha_.size() != pareto_scales_.size() || alpha_.empty()) {
    throw std::invalid_argument("alpha and pareto_scales must match, S >= 1");
  }
  if (!(delta_ > 0.0) || !(c_ > 0.0)) {
    throw std::invalid_argument("delta and c must be positive");
  }
  double alpha_excess = 0.0;
  double prev_scale = 0.0;
  for (std::size_t s = 0; s < alpha_.size(); ++s) {
    if (!(alpha_[s] > 1.0)) {
      throw std::invalid_argument("every alpha_s must exceed 1");
    }
    if (!(pareto_scales_[s] > prev_scale)) {
      throw std::invalid_argument(
          "pareto scales must be positive strictly increasing");
    }
    alpha_excess += alpha_[s] - 1.0;
    prev_scale = pareto_scales_[s];
  }
  if (std::abs(alpha_excess - c_) > 1e-9) {
    throw std::invalid_argument("sum of (alpha_s - 1) must equal c");
  }
}

EmpiricalPrior build_prior(const MixtureOfUniforms& theta_hat,
                           const Hyperparams& hp) {
  std::vector<double> alpha(theta_hat.size());
  for (std::size_t s = 0; s < theta_hat.size(); ++s) {
    alpha[s] = 1.0 + hp.c * theta_hat.weights()[s];
  }
  return EmpiricalPrior(std::move(alpha), theta_hat.locations(), hp.delta,
                        hp.c);
}

MixtureOfUniforms sample_prior(const EmpiricalPrior& prior, RngStream& rng) {
  std::vector<double> weights = rng.dirichlet(prior.alpha());
  std::vector<double> locations(prior.size());
  for (std::size_t s = 0; s < prior.size(); ++s) {
    locations[s] = rng.pareto(prior.pareto_scales()[s], prior.delta());
  }
  return MixtureOfUniforms::labelled(std::move(weights), std::move(locations));
}

double log_prior_density(const EmpiricalPrior& prior,
                         const MixtureOfUniforms& theta) {
  const std::size_t S = prior.size();
  if (theta.size() != S) {
    throw std::invalid_argument("theta and prior dimension mismatch");
  }
  const double delta = prior.delta();

  double logp = 0.0;
  double alpha_sum = 0.0;
  for (std::size_t s = 0; s < S; ++s) {
    const double mu = theta.locations()[s];
    const double mu_hat = prior.pareto_scales()[s];
    if (mu < mu_hat) {
      return -std::numeric_limits<double>::infinity();
    }
    logp += std::log(delta) + delta * std::log(mu_hat) -
            (delta + 1.0) * std::log(mu);

    const double a = prior.alpha()[s];
    alpha_sum += a;
    logp += (a - 1.0) * std::log(theta.weights()[s]) - std::lgamma(a);
  }
  logp += std::lgamma(alpha_sum);
  return logp;
}

}  // namespace ebmono
