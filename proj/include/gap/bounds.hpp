#pragma once

#include <vector>

#include "gap/geometry.hpp"
#include "gap/measures.hpp"
#include "gap/report.hpp"
#include "gap/weights.hpp"

namespace gap {

// Closed-form lower/upper bounds on the Neumann spectral gap of exp(-V) dx
// restricted to a body, plus the exact Bessel values for the uniform ball.

// pi^2 / diameter^2 on bounded convex bodies with convex potentials
BoundReport payne_weinberger(const Body& body, const Potential& pot);

// exact gap of the uniform measure on [-R, R]^d (dimension-free)
BoundReport exact_box_gap(double half_width);

// 2d / C with C = max{sup r^2 (1 + 2 max{V'/(rV''), 1}), sup_bdry r^2 + 2r/rho}
BoundReport corollary_radial(const Potential& pot, const Body& body,
                             int boundary_samples = 4096);

// (d-1)/R^2 for the uniform ball (Gaussian-like radial weight certificate)
BoundReport ball_exp_weight_bound(int d, double radius);

// smallest-eigenvalue infimum of the potential Hessian on convex bodies
BoundReport brascamp_lieb_bound(const Potential& pot, const Body& body);

// isoperimetric upper bound (vol B(0,1) / vol)^{2/d} * gap(B(0,1)), uniform
BoundReport weinberger_upper(const Body& body);

// lower counterpart of the isoperimetric comparison for uniformly convex
// bodies under the uniform measure
BoundReport reverse_comparison(const Body& body, int boundary_samples = 4096);

// arctan(2Rq/pi)^2 / R^2 on Orlicz-type bodies, q = min_i inf U_i''/|U_i'|
BoundReport orlicz_bound(const Body& body);

// two-regime bound for V = r^alpha / alpha, alpha in (1,2], on uniformly
// convex bodies with curvature >= rho and circumradius r_bar
BoundReport subbotin_bound(double alpha, int d, double rho, double r_bar);

// Gaussian measure outside a ball of radius R, d >= 5: min{(d-4)/R^2, 1/3}
BoundReport gaussian_complement_bound(int d, double radius);

// literature baseline for the same obstacle problem: d/(2d + R^2)
BoundReport bcgm_bound(int d, double radius);

// exact Neumann gap of the uniform ball via the first Bessel-derivative root
BoundReport exact_ball_gap(int d, double radius);

// best gap certificate attainable with a radial weight on the uniform ball
BoundReport optimal_radial_weight_gap(int d, double radius);

// every applicable method, certified lower bounds sorted best-first,
// followed by flagged entries, exact values and upper bounds
std::vector<BoundReport> best_bound(const Potential& pot, const Body& body);

// ---- generic weight-certificate engine ----

struct GridSpec {
  int interior = 4096;   // radial / per-axis evaluation points
  int boundary = 4096;   // boundary samples for the normal-direction check
  double tol = 1e-10;    // slack for the boundary non-negativity test
  double trunc_radius = 0.0;  // outer radius for unbounded bodies (0 = auto)
};

// the two eigenvalue branches of the certificate matrix for a radial weight
// on a radial potential at radius r
struct InteriorBranches {
  double radial;
  double tangential;
};
InteriorBranches certify_interior_branches(const Potential& pot,
                                           const WeightSpec& weight, int d,
                                           double r);

// evaluates the weight certificate: value = grid infimum of the smallest
// interior eigenvalue, assumptions_ok = boundary check passed and value > 0
BoundReport certify_weight(const Potential& pot, const Body& body,
                           const WeightSpec& weight, const GridSpec& grid = {});

}  // namespace gap
