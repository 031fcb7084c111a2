#pragma once

#include <cstddef>
#include <vector>

#include "ebmono/mixture.hpp"
#include "ebmono/rng.hpp"

namespace ebmono {

//! Spread constants of the empirical prior.
struct Hyperparams {
  double c;      // Dirichlet concentration multiplier
  double delta;  // Pareto shape
};

//! Default constants in the hyperparameter schedule
//! c = c_mult * n^{5/3} / (log n)^{2/3},  delta = log(n) / delta_div.
inline constexpr double kDefaultCMult = 0.01;
inline constexpr double kDefaultDeltaDiv = 20.0;

//! Evaluate the schedule at sample size n (natural log); n >= 2 required.
Hyperparams hyperparams(std::size_t n, double c_mult = kDefaultCMult,
                        double delta_div = kDefaultDeltaDiv);

//! Data-centered prior: omega ~ Dir(alpha) with alpha_s = 1 + c * omega_hat_s,
//! mu_s ~ Par(mu_hat_s, delta) independently.  The centering fit theta_hat is
//! the prior mode.
class EmpiricalPrior {
public:
  EmpiricalPrior(std::vector<double> alpha, std::vector<double> pareto_scales,
                 double delta, double c);

  std::size_t size() const { return alpha_.size(); }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& pareto_scales() const { return pareto_scales_; }
  double delta() const { return delta_; }
  double concentration() const { return c_; }

private:
  std::vector<double> alpha_;
  std::vector<double> pareto_scales_;
  double delta_;
  double c_;
};

EmpiricalPrior build_prior(const MixtureOfUniforms& theta_hat,
                           const Hyperparams& hp);

//! Draw theta from the prior.  Pareto draws stay bound to their component
//! label, so locations may come out unordered.
MixtureOfUniforms sample_prior(const EmpiricalPrior& prior, RngStream& rng);

//! Dirichlet log density at omega plus the Pareto log densities at mu;
//! -infinity when any mu_s falls below its scale mu_hat_s.
double log_prior_density(const EmpiricalPrior& prior,
                         const MixtureOfUniforms& theta);

}  // namespace ebmono
