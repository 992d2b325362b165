#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Convex bodies (and the one non-convex obstacle case): closed-form data for
// balls and boxes, separable sublevel-set machinery for lp balls and Orlicz
// bodies, plus one unbounded variant (complement of a centered ball).
//
// Conventions: bodies contain the origin in their interior (the complement
// contains it in the complement); eta is the outward unit normal of the
// domain; rho is the smallest principal curvature of the boundary w.r.t.
// eta (negative means the domain is locally concave, as on the obstacle).

namespace gap {

// One convex coordinate function t -> U(t) with two derivatives, U(0) = min.
struct CoordFn {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  std::function<double(double)> deriv2;
  // optional inverse of deriv (monotone); null means bisection fallback
  std::function<double(double)> deriv_inverse;
  std::string form;  // "power" | "asym_power" | "custom"
};

CoordFn power_coord(double p, double scale);
CoordFn asym_power_coord(double p_plus, double p_minus, double scale);

struct Ball {
  double radius;
  int dim;
};
struct Box {
  double half_width;
  int dim;
};
struct LpBall {
  double p;
  double radius;
  int dim;
};
struct Orlicz {  // { x : sum_i U_i(x_i) <= 1 }, contained in [-R, R]^d
  std::vector<CoordFn> coords;
  double box_bound;
};
struct BallComplement {
  double radius;
  int dim;
};

using Body = std::variant<Ball, Box, LpBall, Orlicz, BallComplement>;

int dim(const Body& body);
bool is_convex(const Body& body);
bool is_bounded(const Body& body);

struct Radii {
  double r_under;  // largest rho with B(0, rho) inside the body
  double r_bar;    // smallest R with the body inside B(0, R)
};

// Throws std::domain_error for the unbounded variant (r_under alone would be
// fine there and equals the obstacle radius).
Radii radii(const Body& body);

double diameter(const Body& body);

struct VolumeEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 for closed forms
  long long samples = 0;   // 0 for closed forms
};

// Closed form for balls and boxes; seeded Monte Carlo rejection inside the
// bounding box for lp balls and Orlicz bodies. Deterministic for fixed seed.
VolumeEstimate volume(const Body& body, long long n = 1000000,
                      unsigned long long seed = 20240901ull);

struct BoundaryPoint {
  std::vector<double> x;
  std::vector<double> eta;  // outward unit normal
  double rho;               // smallest principal curvature at x
};

// Smallest principal curvature at a boundary point x (|F(x)| must vanish to
// ~1e-8 scaled). Box faces give 0; edges and corners throw.
double rho_at(const Body& body, const std::vector<double>& x);

// Deterministic low-discrepancy boundary sample: Halton points pushed through
// the inverse normal CDF, normalized to directions, ray-bisected onto the
// boundary (closed forms for ball/box/complement).
std::vector<BoundaryPoint> sample_boundary(const Body& body, int n);

// inf of rho over the boundary: closed forms for ball (1/R), box (0),
// complement (-1/R); sampled minimum otherwise.
double rho_min(const Body& body, int n_samples = 4096);

// argmax_{x in body} <v, x> for the separable variants (lp/orlicz);
// two-level bisection on the KKT multiplier. Exact for balls/boxes.
std::vector<double> support_point(const Body& body,
                                  const std::vector<double>& v);

// Boundary point along direction u (|u| = 1) from the origin, as used by the
// samplers; exposed for tests.
double ray_to_boundary(const Body& body, const std::vector<double>& u);

// membership test with a small relative tolerance on the level function
bool contains(const Body& body, const std::vector<double>& x);

// Halton radical-inverse sequence value (index >= 1) in the given base.
double halton(long long index, int base);

}  // namespace gap
