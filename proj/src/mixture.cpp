#include "ebmono/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ebmono {

namespace {

constexpr double kWeightSumTol = 1e-12;

void check_weight_sum(const std::vector<double>& weights) {
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    throw std::invalid_argument("mixture weights must sum to 1");
  }
}

void check_positive_finite_locations(const std::vector<double>& locations) {
  for (double mu : locations) {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
      throw std::invalid_argument("mixture locations must be positive finite");
    }
  }
}

}  // namespace

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("sample must contain at least one value");
  }
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("sample values must be positive finite");
    }
  }
  std::sort(values_.begin(), values_.end());
}

MixtureOfUniforms::MixtureOfUniforms(std::vector<double> weights,
                                     std::vector<double> locations) {
  if (weights.size() != locations.size() || weights.empty()) {
    throw std::invalid_argument("weights and locations must match, S >= 1");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("mixture weights must be non-negative");
    }
  }
  check_positive_finite_locations(locations);
  check_weight_sum(weights);

  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return locations[a] < locations[b];
  });

  for (std::size_t idx : order) {
    const double w = weights[idx];
    const double mu = locations[idx];
    if (!locations_.empty() && locations_.back() == mu) {
      weights_.back() += w;  // tie: merge, likelihood-invariant
      continue;
    }
    weights_.push_back(w);
    locations_.push_back(mu);
  }

  // drop zero-weight components, keeping S minimal
  std::size_t out = 0;
  for (std::size_t s = 0; s < weights_.size(); ++s) {
    if (weights_[s] > 0.0) {
      weights_[out] = weights_[s];
      locations_[out] = locations_[s];
      ++out;
    }
  }
  weights_.resize(out);
  locations_.resize(out);
  if (weights_.empty()) {
    throw std::invalid_argument("mixture has no positive-weight component");
  }
  max_location_ = locations_.back();
}

MixtureOfUniforms MixtureOfUniforms::labelled(std::vector<double> weights,
                                              std::vector<double> locations) {
  if (weights.size() != locations.size() || weights.empty()) {
    throw std::invalid_argument("weights and locations must match, S >= 1");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("mixture weights must be non-negative");
    }
  }
  check_positive_finite_locations(locations);
  check_weight_sum(weights);

  MixtureOfUniforms theta;
  theta.weights_ = std::move(weights);
  theta.locations_ = std::move(locations);
  theta.max_location_ =
      *std::max_element(theta.locations_.begin(), theta.locations_.end());
  return theta;
}

MixtureOfUniforms MixtureOfUniforms::canonical() const {
  return MixtureOfUniforms(weights_, locations_);
}

StepDensityView::StepDensityView(std::vector<double> knots,
                                 std::vector<double> heights)
    : knots_(std::move(knots)), heights_(std::move(heights)) {
  if (knots_.size() != heights_.size() || knots_.empty()) {
    throw std::invalid_argument("knots and heights must match, S >= 1");
  }
  double prev_knot = 0.0;
  double prev_height = std::numeric_limits<double>::infinity();
  double mass = 0.0;
  for (std::size_t s = 0; s < knots_.size(); ++s) {
    if (!(knots_[s] > prev_knot) || !std::isfinite(knots_[s])) {
      throw std::invalid_argument("knots must be positive strictly increasing");
    }
    if (!(heights_[s] > 0.0) || !(heights_[s] < prev_height)) {
      throw std::invalid_argument(
          "heights must be positive strictly decreasing");
    }
    mass += heights_[s] * (knots_[s] - prev_knot);
    prev_knot = knots_[s];
    prev_height = heights_[s];
  }
  if (std::abs(mass - 1.0) > kWeightSumTol) {
    throw std::invalid_argument("step density must integrate to 1");
  }
}

double density_eval(const MixtureOfUniforms& theta, double x) {
  if (!(x > 0.0)) {
    throw std::invalid_argument("density_eval requires x > 0");
  }
  double f = 0.0;
  const auto& w = theta.weights();
  const auto& mu = theta.locations();
  for (std::size_t s = 0; s < theta.size(); ++s) {
    if (x <= mu[s]) {
      f += w[s] / mu[s];
    }
  }
  return f;
}

double cdf_eval(const MixtureOfUniforms& theta, double x) {
  if (!(x >= 0.0)) {
    throw std::invalid_argument("cdf_eval requires x >= 0");
  }
  double F = 0.0;
  const auto& w = theta.weights();
  const auto& mu = theta.locations();
  for (std::size_t s = 0; s < theta.size(); ++s) {
    F += w[s] * std::min(x / mu[s], 1.0);
  }
  return F;
}

double log_likelihood(const MixtureOfUniforms& theta, const Sample& data) {
  const auto& w = theta.weights();
  const auto& mu = theta.locations();
  const std::size_t S = theta.size();

  std::vector<double> log_rate(S);
  for (std::size_t s = 0; s < S; ++s) {
    log_rate[s] = std::log(w[s]) - std::log(mu[s]);
  }

  double total = 0.0;
  for (double x : data.values()) {
    double gmax = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < S; ++s) {
      if (x <= mu[s] && w[s] > 0.0 && log_rate[s] > gmax) {
        gmax = log_rate[s];
      }
    }
    if (!std::isfinite(gmax)) {
      return -std::numeric_limits<double>::infinity();
    }
    double acc = 0.0;
    for (std::size_t s = 0; s < S; ++s) {
      if (x <= mu[s] && w[s] > 0.0) {
        acc += std::exp(log_rate[s] - gmax);
      }
    }
    total += gmax + std::log(acc);
  }
  return total;
}

Sample sample_from(const MixtureOfUniforms& theta, std::size_t n,
                   RngStream& rng) {
  if (n == 0) {
    throw std::invalid_argument("sample_from requires n >= 1");
  }
  std::vector<double> values(n);
  const auto& w = theta.weights();
  const auto& mu = theta.locations();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t s = rng.categorical(w);
    values[i] = mu[s] * rng.uniform01_right();
  }
  return Sample(std::move(values));
}

StepDensityView to_step(const MixtureOfUniforms& theta) {
  const MixtureOfUniforms c = theta.canonical();
  const auto& w = c.weights();
  const auto& mu = c.locations();
  const std::size_t S = c.size();

  std::vector<double> heights(S);
  double tail = 0.0;
  for (std::size_t s = S; s-- > 0;) {
    tail += w[s] / mu[s];
    heights[s] = tail;
  }
  return StepDensityView(mu, std::move(heights));
}

MixtureOfUniforms from_step(const StepDensityView& view) {
  const auto& tau = view.knots();
  const auto& h = view.heights();
  const std::size_t S = view.size();

  std::vector<double> weights(S);
  for (std::size_t s = 0; s < S; ++s) {
    const double next = (s + 1 < S) ? h[s + 1] : 0.0;
    weights[s] = tau[s] * (h[s] - next);
  }
  return MixtureOfUniforms(std::move(weights), std::vector<double>(tau));
}

}  // namespace ebmono
