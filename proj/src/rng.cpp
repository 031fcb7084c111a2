#include "ebmono/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ebmono {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = splitmix64(master);
  for (std::uint64_t w : words) {
    h = splitmix64(h ^ (w + 0x9E3779B97F4A7C15ull));
  }
  return h;
}

double RngStream::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform01_right() { return 1.0 - uniform01(); }

double RngStream::normal() {
  const double u1 = uniform01_right();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::exponential() { return -std::log(uniform01_right()); }

double RngStream::gamma(double shape) {
  if (!(shape > 0.0)) {
    throw std::invalid_argument("gamma shape must be positive");
  }
  if (shape < 1.0) {
    // boost to shape + 1 and scale back
    const double u = uniform01_right();
    return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01_right();
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      return d * v;
    }
  }
}

double RngStream::pareto(double scale, double shape) {
  if (!(scale > 0.0) || !(shape > 0.0)) {
    throw std::invalid_argument("pareto scale and shape must be positive");
  }
  return scale * std::pow(uniform01_right(), -1.0 / shape);
}

std::vector<double> RngStream::dirichlet(std::span<const double> alpha) {
  std::vector<double> g(alpha.size());
  double total = 0.0;
  for (std::size_t s = 0; s < alpha.size(); ++s) {
    g[s] = gamma(alpha[s]);
    total += g[s];
  }
  for (double& v : g) {
    v /= total;
  }
  return g;
}

std::size_t RngStream::categorical(std::span<const double> probs) {
  double total = 0.0;
  for (double p : probs) {
    total += p;
  }
  if (!(total > 0.0)) {
    throw std::invalid_argument("categorical needs positive total mass");
  }
  const double u = uniform01() * total;
  double cum = 0.0;
  for (std::size_t s = 0; s < probs.size(); ++s) {
    cum += probs[s];
    if (u < cum) {
      return s;
    }
  }
  return probs.size() - 1;
}

}  // namespace ebmono
