#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "ebmono/gibbs.hpp"
#include "ebmono/mixture.hpp"

namespace ebmono {

//! Pointwise posterior envelope of f(x) over a grid at a fixed level.
struct CredibleBand {
  std::vector<double> grid;
  std::vector<double> mean;
  std::vector<double> lower;
  std::vector<double> upper;
  double level = 0.95;
};

//! Generic density for the quadrature-based distances: pdf over (0, inf),
//! cdf for exact tail mass, known kinks, and the support end (may be +inf
//! when the cdf is supplied).
struct DensityView {
  std::function<double(double)> pdf;
  std::function<double(double)> cdf;
  double upper = 0.0;
  std::vector<double> kinks;
};

DensityView as_density(const MixtureOfUniforms& theta);

//! Empirical quantile with linear interpolation between order statistics
//! (R default, type 7); values need not be sorted beforehand.
double empirical_quantile(std::vector<double> values, double p);

//! At each grid point: mean of f_theta(x) over draws and the (1 +- level)/2
//! empirical quantiles.
CredibleBand pointwise_band(const PosteriorDraws& draws,
                            std::vector<double> grid, double level);

std::pair<double, double> interval_at(const PosteriorDraws& draws, double x,
                                      double level);

std::vector<double> posterior_mean_density(const PosteriorDraws& draws,
                                           const std::vector<double>& grid);

//! The posterior mean density expressed exactly as a mixture: the union of
//! all draw components with weights divided by the number of draws.
MixtureOfUniforms posterior_mean_mixture(const PosteriorDraws& draws);

//! Half the L1 distance, d in [0, 1].  Exact piecewise integration for step
//! pairs; adaptive quadrature (abs tol 1e-6) for the generic overload.
double l1_distance(const MixtureOfUniforms& f, const MixtureOfUniforms& g);
double l1_distance(const DensityView& f, const DensityView& g);

//! sqrt(1 - integral sqrt(f g)), in [0, 1].
double hellinger_distance(const MixtureOfUniforms& f,
                          const MixtureOfUniforms& g);
double hellinger_distance(const DensityView& f, const DensityView& g);

//! Default band grid: size equally spaced points from x_max/size to
//! 1.05 * x_max, leaving headroom for posterior mass beyond X_(n).
std::vector<double> default_band_grid(double x_max, std::size_t size = 512);

}  // namespace ebmono
