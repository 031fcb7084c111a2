#include <doctest.h>

#include <cmath>
#include <limits>

#include "ebmono/gibbs.hpp"
#include "ebmono/summaries.hpp"
#include "oracles.hpp"

using namespace ebmono;

namespace {

PosteriorDraws draws_of(std::vector<MixtureOfUniforms> thetas) {
  PosteriorDraws out;
  out.draws = std::move(thetas);
  return out;
}

}  // namespace

TEST_CASE("pointwise_band examples") {
  const MixtureOfUniforms u01({1.0}, {1.0});
  const MixtureOfUniforms u02({1.0}, {2.0});
  {
    const PosteriorDraws same = draws_of({u02, u02, u02});
    const CredibleBand band = pointwise_band(same, {0.5, 1.0, 1.5}, 0.95);
    for (std::size_t k = 0; k < band.grid.size(); ++k) {
      CHECK(band.lower[k] == band.mean[k]);
      CHECK(band.upper[k] == band.mean[k]);
      CHECK(band.mean[k] == doctest::Approx(0.5).epsilon(1e-15));
    }
  }
  {
    // two draws, f values {1, 0.5} at x = 0.5: type-7 interpolation
    const CredibleBand band =
        pointwise_band(draws_of({u01, u02}), {0.5}, 0.95);
    CHECK(band.mean[0] == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(band.lower[0] == doctest::Approx(0.5125).epsilon(1e-12));
    CHECK(band.upper[0] == doctest::Approx(0.9875).epsilon(1e-12));
  }
  {
    // beyond every draw's support
    const CredibleBand band =
        pointwise_band(draws_of({u01, u02}), {5.0}, 0.95);
    CHECK(band.mean[0] == 0.0);
    CHECK(band.lower[0] == 0.0);
    CHECK(band.upper[0] == 0.0);
  }
  CHECK_THROWS_AS(pointwise_band(draws_of({u01, u02}), {}, 0.95),
                  std::invalid_argument);
  CHECK_THROWS_AS(pointwise_band(draws_of({u01}), {0.5}, 0.95),
                  std::invalid_argument);
  CHECK_THROWS_AS(pointwise_band(draws_of({u01, u02}), {0.5}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("interval_at nesting and degenerate spread") {
  const MixtureOfUniforms u01({1.0}, {1.0});
  const MixtureOfUniforms u02({1.0}, {2.0});
  {
    const auto [lo, hi] = interval_at(draws_of({u01, u01, u01}), 0.5, 0.95);
    CHECK(lo == hi);
  }
  {
    const PosteriorDraws mixed = draws_of({u01, u02, u01, u02, u01});
    const auto [lo95, hi95] = interval_at(mixed, 0.5, 0.95);
    const auto [lo50, hi50] = interval_at(mixed, 0.5, 0.50);
    CHECK(lo95 <= lo50);
    CHECK(hi50 <= hi95);
  }
}

TEST_CASE("distance golden values") {
  const MixtureOfUniforms u01({1.0}, {1.0});
  const MixtureOfUniforms u02({1.0}, {2.0});
  const MixtureOfUniforms u03({1.0}, {3.0});

  CHECK(l1_distance(u02, u02) == 0.0);
  CHECK(l1_distance(u01, u02) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(l1_distance(u01, u03) == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

  CHECK(hellinger_distance(u03, u03) == 0.0);
  CHECK(hellinger_distance(u01, u02) ==
        doctest::Approx(std::sqrt(1.0 - 1.0 / std::sqrt(2.0))).epsilon(1e-9));

  RngStream rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const MixtureOfUniforms f = test::random_mixture(rng);
    const MixtureOfUniforms g = test::random_mixture(rng);
    CHECK(hellinger_distance(f, g) ==
          doctest::Approx(hellinger_distance(g, f)).epsilon(1e-12));
  }
}

TEST_CASE("triangle inequality and Hellinger-L1 sandwich") {
  RngStream rng(18);
  for (int trial = 0; trial < 500; ++trial) {
    const MixtureOfUniforms f = test::random_mixture(rng);
    const MixtureOfUniforms g = test::random_mixture(rng);
    const MixtureOfUniforms h = test::random_mixture(rng);

    CHECK(l1_distance(f, h) <= l1_distance(f, g) + l1_distance(g, h) + 1e-9);
    CHECK(hellinger_distance(f, h) <=
          hellinger_distance(f, g) + hellinger_distance(g, h) + 1e-9);

    const double d = l1_distance(f, g);
    const double H = hellinger_distance(f, g);
    CHECK(H * H <= d + 1e-9);
    CHECK(d <= H * std::sqrt(2.0) + 1e-9);
  }
}

TEST_CASE("exact step distances agree with quadrature") {
  RngStream rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const MixtureOfUniforms f = test::random_mixture(rng);
    const MixtureOfUniforms g = test::random_mixture(rng);
    CHECK(l1_distance(as_density(f), as_density(g)) ==
          doctest::Approx(l1_distance(f, g)).epsilon(1e-5));
    CHECK(hellinger_distance(as_density(f), as_density(g)) ==
          doctest::Approx(hellinger_distance(f, g)).epsilon(1e-5));
  }
}

TEST_CASE("posterior mean density and mean mixture") {
  const MixtureOfUniforms u01({1.0}, {1.0});
  const MixtureOfUniforms u02({1.0}, {2.0});
  {
    const std::vector<double> mean =
        posterior_mean_density(draws_of({u02}), {0.5, 1.5});
    CHECK(mean[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mean[1] == doctest::Approx(0.5).epsilon(1e-15));
  }
  {
    const PosteriorDraws mixed = draws_of({u01, u02, u01});
    const std::vector<double> grid{0.25, 0.5, 1.0, 1.5, 1.9};
    const std::vector<double> mean = posterior_mean_density(mixed, grid);
    for (std::size_t k = 1; k < mean.size(); ++k) {
      CHECK(mean[k] <= mean[k - 1]);
    }
    const MixtureOfUniforms combined = posterior_mean_mixture(mixed);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      CHECK(density_eval(combined, grid[k]) ==
            doctest::Approx(mean[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("golden chain intervals and mean match the Pareto closed form") {
  const std::size_t n = 50;
  RngStream data_rng(2);
  std::vector<double> v(n);
  for (double& x : v) {
    x = data_rng.exponential();
  }
  const Sample data(std::move(v));
  const MixtureOfUniforms theta_hat({1.0}, {data.max()});
  const Hyperparams hp = hyperparams(n);
  const EmpiricalPrior prior = build_prior(theta_hat, hp);
  const PosteriorDraws out =
      run_chain(prior, theta_hat, data, ChainConfig{100, 10000, 1, 404});

  const double a = hp.delta + static_cast<double>(n);
  const double m = data.max();
  const double x = 0.5 * m;

  // f(x) = 1/mu on x < mu, so the f-quantiles are p^{1/a} / m
  const auto [lo, hi] = interval_at(out, x, 0.95);
  CHECK(lo == doctest::Approx(std::pow(0.025, 1.0 / a) / m).epsilon(0.02));
  CHECK(hi == doctest::Approx(std::pow(0.975, 1.0 / a) / m).epsilon(0.02));

  const std::vector<double> mean = posterior_mean_density(out, {x});
  std::vector<double> inv(out.draws.size());
  for (std::size_t d = 0; d < out.draws.size(); ++d) {
    inv[d] = 1.0 / out.draws[d].locations()[0];
  }
  const double target = a / (a + 1.0) / m;
  CHECK(std::abs(mean[0] - target) < 3.0 * test::std_err_of(inv));
}

TEST_CASE("default band grid covers the support with headroom") {
  const std::vector<double> grid = default_band_grid(8.0, 512);
  REQUIRE(grid.size() == 512);
  CHECK(grid.front() == doctest::Approx(8.0 / 512).epsilon(1e-12));
  CHECK(grid.back() == doctest::Approx(8.4).epsilon(1e-12));
  for (std::size_t k = 1; k < grid.size(); ++k) {
    CHECK(grid[k] > grid[k - 1]);
  }
}
