#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gap/geometry.hpp"

namespace gap {

// Log-concave reference measures exp(-V(x)) dx restricted to a body.

struct Uniform {};  // V = 0

// V(x) = |x|^alpha / alpha, alpha > 1 (alpha = 2 is the standard Gaussian)
struct RadialPower {
  double alpha;
  explicit RadialPower(double a) : alpha(a) {
    if (!(a > 1.0))
      throw std::invalid_argument("RadialPower: need alpha > 1");
  }
};

// V(x) = v(|x|) with user-supplied convex profile and two derivatives
struct RadialCustom {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> deriv2;
};

// V(x) = sum_i v_i(x_i), each marginal convex with minimum at 0
struct ProductPotential {
  std::vector<CoordFn> marginals;
};

using Potential = std::variant<Uniform, RadialPower, RadialCustom, ProductPotential>;

bool is_radial(const Potential& pot);

// V(|x|) profile access for radial potentials (throws otherwise)
double potential_value(const Potential& pot, double r);
double potential_deriv(const Potential& pot, double r);
double potential_deriv2(const Potential& pot, double r);

// Eigenvalues of the Hessian of a radial potential at radius r > 0:
// v''(r) on the radial direction, v'(r)/r with multiplicity d-1
struct HessianEigs {
  double radial;
  double tangential;
};
HessianEigs hessian_eigs(const Potential& pot, double r);

// inf over the body of the smallest Hessian eigenvalue of V; a strictly
// positive value is itself a spectral gap lower bound on any convex body
// (the Brascamp-Lieb inequality)
struct ConvexityBound {
  double value;
  bool positive;  // false when the infimum is zero (bound carries no content)
};
ConvexityBound brascamp_lieb(const Potential& pot, const Body& body);

// integral of r^k times the radial density r^(d-1) exp(-v(r)) over the
// radial range of a ball or ball-complement body (trunc_radius caps the
// unbounded case; <= 0 picks a default)
double radial_density_moment(const Potential& pot, const Body& body, int k,
                             double trunc_radius = 0.0);

}  // namespace gap
