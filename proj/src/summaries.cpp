#include "ebmono/summaries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace ebmono {

namespace {

constexpr double kQuadTol = 1e-6;

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double b, double fa, double fb, double fm, double whole,
                     double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double diff = left + right - whole;
  if (depth <= 0 || std::abs(diff) <= 15.0 * tol) {
    return left + right + diff / 15.0;
  }
  return adaptive_step(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
  if (!(b > a)) {
    return 0.0;
  }
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(a, fa, b, fb, fm);
  return adaptive_step(f, a, b, fa, fb, fm, whole, tol, 48);
}

//! Integrate fn over [lo, hi] split at the known kinks of both densities.
double integrate_piecewise(const std::function<double(double)>& fn, double lo,
                           double hi, const DensityView& f,
                           const DensityView& g, double tol) {
  std::vector<double> cuts{lo, hi};
  for (const auto* d : {&f, &g}) {
    for (double k : d->kinks) {
      if (k > lo && k < hi) {
        cuts.push_back(k);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double piece_tol = tol / static_cast<double>(cuts.size());
  double total = 0.0;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    total += adaptive_simpson(fn, cuts[k - 1], cuts[k], piece_tol);
  }
  return total;
}

//! Union-of-knots sweep over two step densities; visit(len, hf, hg) is
//! called once per piece, covering [0, max support].
template <typename Visit>
void for_each_union_piece(const MixtureOfUniforms& f,
                          const MixtureOfUniforms& g, Visit visit) {
  const StepDensityView sf = to_step(f);
  const StepDensityView sg = to_step(g);

  std::vector<double> cuts;
  cuts.reserve(sf.size() + sg.size());
  cuts.insert(cuts.end(), sf.knots().begin(), sf.knots().end());
  cuts.insert(cuts.end(), sg.knots().begin(), sg.knots().end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  double prev = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  for (double cut : cuts) {
    const double hf = i < sf.size() ? sf.heights()[i] : 0.0;
    const double hg = j < sg.size() ? sg.heights()[j] : 0.0;
    visit(cut - prev, hf, hg);
    if (i < sf.size() && sf.knots()[i] == cut) {
      ++i;
    }
    if (j < sg.size() && sg.knots()[j] == cut) {
      ++j;
    }
    prev = cut;
  }
}

}  // namespace

DensityView as_density(const MixtureOfUniforms& theta) {
  // step lookup keeps pdf/cdf evaluation O(log S) even for the huge
  // mixtures produced by posterior averaging
  const StepDensityView step = to_step(theta);
  auto knots = std::make_shared<std::vector<double>>(step.knots());
  auto heights = std::make_shared<std::vector<double>>(step.heights());
  auto mass_before = std::make_shared<std::vector<double>>(knots->size(), 0.0);
  double prev = 0.0;
  double cum = 0.0;
  for (std::size_t s = 0; s < knots->size(); ++s) {
    (*mass_before)[s] = cum;
    cum += (*heights)[s] * ((*knots)[s] - prev);
    prev = (*knots)[s];
  }
  const double upper = knots->back();

  // f(x) = h_s on (tau_{s-1}, tau_s]; f(0) reads as the limit f(0+)
  auto pdf = [knots, heights](double x) {
    if (x <= 0.0) {
      return heights->front();
    }
    const auto it = std::lower_bound(knots->begin(), knots->end(), x);
    return it == knots->end()
               ? 0.0
               : (*heights)[static_cast<std::size_t>(it - knots->begin())];
  };
  auto cdf = [knots, heights, mass_before](double x) {
    if (x <= 0.0) {
      return 0.0;
    }
    if (x >= knots->back()) {
      return 1.0;
    }
    const auto it = std::lower_bound(knots->begin(), knots->end(), x);
    const std::size_t s = static_cast<std::size_t>(it - knots->begin());
    const double lo = s == 0 ? 0.0 : (*knots)[s - 1];
    return (*mass_before)[s] + (*heights)[s] * (x - lo);
  };
  return DensityView{std::move(pdf), std::move(cdf), upper, *knots};
}

double empirical_quantile(std::vector<double> values, double p) {
  if (values.empty()) {
    throw std::invalid_argument("quantile of an empty set");
  }
  std::sort(values.begin(), values.end());
  const double h = p * static_cast<double>(values.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= values.size()) {
    return values.back();
  }
  return values[lo] + (h - std::floor(h)) * (values[lo + 1] - values[lo]);
}

CredibleBand pointwise_band(const PosteriorDraws& draws,
                            std::vector<double> grid, double level) {
  if (grid.empty()) {
    throw std::invalid_argument("band grid must be non-empty");
  }
  if (draws.draws.size() < 2) {
    throw std::invalid_argument("band needs at least 2 draws");
  }
  if (!(level > 0.0) || !(level < 1.0)) {
    throw std::invalid_argument("level must lie in (0, 1)");
  }

  CredibleBand band;
  band.grid = std::move(grid);
  band.level = level;
  band.mean.resize(band.grid.size());
  band.lower.resize(band.grid.size());
  band.upper.resize(band.grid.size());

  std::vector<double> at_x(draws.draws.size());
  for (std::size_t k = 0; k < band.grid.size(); ++k) {
    const double x = band.grid[k];
    double sum = 0.0;
    for (std::size_t d = 0; d < draws.draws.size(); ++d) {
      at_x[d] = density_eval(draws.draws[d], x);
      sum += at_x[d];
    }
    band.mean[k] = sum / static_cast<double>(at_x.size());
    band.lower[k] = empirical_quantile(at_x, (1.0 - level) / 2.0);
    band.upper[k] = empirical_quantile(at_x, (1.0 + level) / 2.0);
  }
  return band;
}

std::pair<double, double> interval_at(const PosteriorDraws& draws, double x,
                                      double level) {
  const CredibleBand band = pointwise_band(draws, {x}, level);
  return {band.lower[0], band.upper[0]};
}

std::vector<double> posterior_mean_density(const PosteriorDraws& draws,
                                           const std::vector<double>& grid) {
  std::vector<double> mean(grid.size(), 0.0);
  for (const auto& theta : draws.draws) {
    for (std::size_t k = 0; k < grid.size(); ++k) {
      mean[k] += density_eval(theta, grid[k]);
    }
  }
  for (double& v : mean) {
    v /= static_cast<double>(draws.draws.size());
  }
  return mean;
}

MixtureOfUniforms posterior_mean_mixture(const PosteriorDraws& draws) {
  if (draws.draws.empty()) {
    throw std::invalid_argument("no draws to average");
  }
  const double inv = 1.0 / static_cast<double>(draws.draws.size());
  std::vector<double> weights;
  std::vector<double> locations;
  for (const auto& theta : draws.draws) {
    for (std::size_t s = 0; s < theta.size(); ++s) {
      weights.push_back(theta.weights()[s] * inv);
      locations.push_back(theta.locations()[s]);
    }
  }
  return MixtureOfUniforms(std::move(weights), std::move(locations));
}

double l1_distance(const MixtureOfUniforms& f, const MixtureOfUniforms& g) {
  double total = 0.0;
  for_each_union_piece(f, g, [&](double len, double hf, double hg) {
    total += len * std::abs(hf - hg);
  });
  return 0.5 * total;
}

double hellinger_distance(const MixtureOfUniforms& f,
                          const MixtureOfUniforms& g) {
  double bc = 0.0;
  for_each_union_piece(f, g, [&](double len, double hf, double hg) {
    bc += len * std::sqrt(hf * hg);
  });
  return std::sqrt(std::max(0.0, 1.0 - bc));
}

double l1_distance(const DensityView& f, const DensityView& g) {
  const bool f_finite = std::isfinite(f.upper);
  const bool g_finite = std::isfinite(g.upper);
  if (!f_finite && !g_finite) {
    throw std::invalid_argument("one density must have bounded support");
  }
  // two bounded supports: integrate over their union; one unbounded: stop at
  // the bounded support and add the other's tail mass exactly via its cdf
  const double cut =
      f_finite && g_finite ? std::max(f.upper, g.upper)
                           : std::min(f.upper, g.upper);
  auto abs_diff = [&](double x) { return std::abs(f.pdf(x) - g.pdf(x)); };
  double total = integrate_piecewise(abs_diff, 0.0, cut, f, g, kQuadTol);
  if (!f_finite) {
    total += 1.0 - f.cdf(cut);
  } else if (!g_finite) {
    total += 1.0 - g.cdf(cut);
  }
  return 0.5 * total;
}

double hellinger_distance(const DensityView& f, const DensityView& g) {
  const double cut = std::min(f.upper, g.upper);
  if (!std::isfinite(cut)) {
    throw std::invalid_argument("one density must have bounded support");
  }
  auto geo = [&](double x) { return std::sqrt(f.pdf(x) * g.pdf(x)); };
  const double bc = integrate_piecewise(geo, 0.0, cut, f, g, kQuadTol);
  return std::sqrt(std::max(0.0, 1.0 - bc));
}

std::vector<double> default_band_grid(double x_max, std::size_t size) {
  if (!(x_max > 0.0) || size < 2) {
    throw std::invalid_argument("grid needs x_max > 0 and size >= 2");
  }
  const double lo = x_max / static_cast<double>(size);
  const double hi = 1.05 * x_max;
  std::vector<double> grid(size);
  for (std::size_t k = 0; k < size; ++k) {
    grid[k] = lo + (hi - lo) * static_cast<double>(k) /
                       static_cast<double>(size - 1);
  }
  return grid;
}

}  // namespace ebmono
