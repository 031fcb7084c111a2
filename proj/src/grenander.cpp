#include "ebmono/grenander.hpp"

#include <cstddef>
#include <vector>

namespace ebmono {

EcdfPoints empirical_cdf(const Sample& data) {
  const auto& v = data.values();
  const double n = static_cast<double>(data.size());

  EcdfPoints out;
  std::size_t i = 0;
  std::size_t cum = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) {
      ++j;  // pool ties into one jump
    }
    cum += j - i;
    out.x.push_back(v[i]);
    out.F.push_back(static_cast<double>(cum) / n);
    i = j;
  }
  out.F.back() = 1.0;
  return out;
}

ConcaveMajorant least_concave_majorant(const EcdfPoints& ecdf) {
  ConcaveMajorant hull;
  hull.x.push_back(0.0);
  hull.F.push_back(0.0);

  // monotone-chain upper hull; cross >= 0 means the middle vertex lies on or
  // below the chord, so slopes would fail to strictly decrease
  for (std::size_t k = 0; k < ecdf.x.size(); ++k) {
    const double px = ecdf.x[k];
    const double pF = ecdf.F[k];
    while (hull.x.size() >= 2) {
      const std::size_t m = hull.x.size();
      const double ox = hull.x[m - 2];
      const double oF = hull.F[m - 2];
      const double ax = hull.x[m - 1];
      const double aF = hull.F[m - 1];
      const double cross = (ax - ox) * (pF - oF) - (aF - oF) * (px - ox);
      if (cross >= 0.0) {
        hull.x.pop_back();
        hull.F.pop_back();
      } else {
        break;
      }
    }
    hull.x.push_back(px);
    hull.F.push_back(pF);
  }
  return hull;
}

MixtureOfUniforms grenander_fit(const Sample& data) {
  const ConcaveMajorant lcm = least_concave_majorant(empirical_cdf(data));

  std::vector<double> knots;
  std::vector<double> heights;
  for (std::size_t k = 1; k < lcm.x.size(); ++k) {
    knots.push_back(lcm.x[k]);
    heights.push_back((lcm.F[k] - lcm.F[k - 1]) / (lcm.x[k] - lcm.x[k - 1]));
  }
  return from_step(StepDensityView(std::move(knots), std::move(heights)));
}

}  // namespace ebmono
