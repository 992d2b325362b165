#pragma once

#include <functional>

// Adaptive Gauss(7)/Kronrod(15) panels with recursive bisection. Good to
// ~1e-13 relative on the smooth peaked integrands the measure module feeds
// it, provided callers normalize the integrand scale (see
// radial_density_moment, which works with the log integrand and its max).

namespace gap {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;  // accumulated Kronrod error estimate
  int panels = 0;
};

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    double abs_tol, int max_depth = 40);

}  // namespace gap
