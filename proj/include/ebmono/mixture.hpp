#pragma once

#include <cstddef>
#include <vector>

#include "ebmono/rng.hpp"

namespace ebmono {

//! Sorted sample of positive observations.
class Sample {
public:
  explicit Sample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double max() const { return values_.back(); }

private:
  std::vector<double> values_;
};

//! Finite mixture of Unif(0, mu_s) kernels, theta = (omega, mu).  Doubles as
//! a monotone step-density representation.
//!
//! The canonical constructor sorts components by location, merges exact
//! location ties (summing their weights) and drops zero-weight components,
//! so canonical mixtures have strictly increasing locations.  Prior and
//! posterior draws keep components bound to their labels instead: their
//! locations may arrive in any order, so they are built through labelled(),
//! which only checks positivity and the weight-sum constraint.
class MixtureOfUniforms {
public:
  MixtureOfUniforms(std::vector<double> weights, std::vector<double> locations);

  static MixtureOfUniforms labelled(std::vector<double> weights,
                                    std::vector<double> locations);

  std::size_t size() const { return weights_.size(); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& locations() const { return locations_; }

  //! Upper end of the support, max_s mu_s.
  double max_location() const { return max_location_; }

  //! Sorted/merged/pruned copy; identity on canonical mixtures.
  MixtureOfUniforms canonical() const;

private:
  MixtureOfUniforms() = default;

  std::vector<double> weights_;
  std::vector<double> locations_;
  double max_location_ = 0.0;
};

//! Step form of a mixture of uniforms: density equal to heights[s] on
//! (knots[s-1], knots[s]], heights strictly decreasing, unit total mass.
class StepDensityView {
public:
  StepDensityView(std::vector<double> knots, std::vector<double> heights);

  std::size_t size() const { return knots_.size(); }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<double>& heights() const { return heights_; }

private:
  std::vector<double> knots_;
  std::vector<double> heights_;
};

//! f_theta(x) = sum_s omega_s mu_s^{-1} 1(x <= mu_s); x must be positive.
double density_eval(const MixtureOfUniforms& theta, double x);

//! F_theta(x) = sum_s omega_s min(x / mu_s, 1); x must be non-negative.
double cdf_eval(const MixtureOfUniforms& theta, double x);

//! Log likelihood of the sample, per-point log-sum over components;
//! -infinity when any observation exceeds the support.
double log_likelihood(const MixtureOfUniforms& theta, const Sample& data);

//! n independent draws from f_theta: component by weight, then uniform on
//! (0, mu_s].
Sample sample_from(const MixtureOfUniforms& theta, std::size_t n,
                   RngStream& rng);

//! omega_s = tau_s (h_s - h_{s+1}) with h_{S+1} = 0.
StepDensityView to_step(const MixtureOfUniforms& theta);

//! h_s = sum_{r >= s} omega_r / mu_r.
MixtureOfUniforms from_step(const StepDensityView& view);

}  // namespace ebmono
