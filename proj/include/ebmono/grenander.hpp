#pragma once

#include <vector>

#include "ebmono/mixture.hpp"

namespace ebmono {

//! Empirical CDF as jump points: distinct sorted observations x with
//! cumulative proportions F, final F = 1.  The point (0, 0) is implicit.
struct EcdfPoints {
  std::vector<double> x;
  std::vector<double> F;
};

//! Least concave majorant of the ECDF: piecewise-linear vertices from (0, 0)
//! to (X_(n), 1) with strictly decreasing positive slopes.
struct ConcaveMajorant {
  std::vector<double> x;  // includes leading 0
  std::vector<double> F;  // includes leading 0
};

EcdfPoints empirical_cdf(const Sample& data);

//! Upper convex hull of {(0,0)} plus the ECDF points, restricted to vertices.
ConcaveMajorant least_concave_majorant(const EcdfPoints& ecdf);

//! Grenander estimator: left derivative of the LCM, expressed exactly as a
//! mixture of uniforms with knots at the LCM vertices.  Maximizes the
//! likelihood over all monotone non-increasing densities.
MixtureOfUniforms grenander_fit(const Sample& data);

}  // namespace ebmono
