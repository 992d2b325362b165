#pragma once

// Scalar special functions used by the bound formulas: gamma, Bessel J of
// real order, the two Neumann root conditions on the unit ball, and the
// inverse normal CDF used by the deterministic boundary sampler.

namespace gap {

// log Gamma(z) for z > 0 (Lanczos approximation, g = 7).
double lgamma_pos(double z);

// Gamma(z) for z > 0. Throws std::invalid_argument for z <= 0.
double tgamma_pos(double z);

// Scaled Bessel series S_nu(u) = J_nu(u) * Gamma(nu+1) * (u/2)^{-nu}
//                              = sum_k (-1)^k (u^2/4)^k / (k! (nu+1)...(nu+k)).
// S_nu(0) = 1 and S stays O(1) where J itself would under/overflow, which is
// what the root finders bracket on. Accurate to ~1e-14 relative for
// u <= max(12, 2*sqrt(nu+1)); callers outside that zone go through bessel_j.
double bessel_scaled_series(double nu, double u);

// J_nu(u) for nu >= 0, u >= 0. Power series in the cancellation-safe zone
// u <= max(12, 2*sqrt(nu+1)); Miller backward recurrence normalized by the
// series at a safe anchor order beyond it, with on-the-fly log rescaling so
// huge dynamic ranges (large anchor orders) cannot overflow.
double bessel_j(double nu, double u);

// First positive root p of d/du [ u^{1-d/2} J_{d/2}(u) ] = 0, i.e. of
// u J_{d/2-1}(u) = (d-1) J_{d/2}(u). The Neumann gap of the unit ball is p^2.
// Bracketing on a 0.1-step grid from u = 1e-3, bisection, Newton polish.
double neumann_ball_root(int d);

// First positive root p of J_{d/2-1}(u) = u J_{d/2}(u), the saturation point
// of the boundary condition w(R) + R w'(R) = 0 for the radial Bessel weight
// w(r) = (sqrt(l) r)^{1-d/2} J_{d/2-1}(sqrt(l) r). The certified lower bound
// for the uniform unit ball is p^2.
double optimal_weight_root(int d);

// Inverse standard normal CDF (Acklam's rational approximation plus one
// Newton/erfc refinement); |error| < 1e-15 for p in (0,1).
double inverse_normal_cdf(double p);

}  // namespace gap
