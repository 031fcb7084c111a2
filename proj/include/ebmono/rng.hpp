#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace ebmono {

//! Derive an independent stream seed from a master seed and a list of tag
//! words (replication index, sample size, truth tag, ...).  Pure function,
//! so any sub-experiment can be re-run in isolation.
std::uint64_t derive_seed(std::uint64_t master,
                          std::initializer_list<std::uint64_t> words);

//! Seeded random stream with all variate generators built on the raw
//! mt19937_64 output, so full runs replay identically for a given seed.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  //! Uniform on [0, 1).
  double uniform01();

  //! Uniform on (0, 1].
  double uniform01_right();

  //! Standard normal, Box-Muller.
  double normal();

  //! Exponential(1) via inverse CDF.
  double exponential();

  //! Gamma(shape, 1), Marsaglia-Tsang; any shape > 0.
  double gamma(double shape);

  //! Pareto(scale, shape) via inverse CDF: scale * u^{-1/shape}, support
  //! [scale, inf).
  double pareto(double scale, double shape);

  //! Dirichlet(alpha) as normalized independent gammas.
  std::vector<double> dirichlet(std::span<const double> alpha);

  //! Index drawn proportionally to the (unnormalized, non-negative) entries
  //! of probs; total must be positive.
  std::size_t categorical(std::span<const double> probs);

private:
  std::mt19937_64 engine_;
};

}  // namespace ebmono
