#pragma once

#include <functional>
#include <vector>

#include "gap/geometry.hpp"
#include "gap/measures.hpp"

namespace gap {

// Variational (Rayleigh quotient) upper bounds on the spectral gap over the
// monomial basis of total degree 1..degree. Any finite basis gives a valid
// upper bound; quality improves with degree.

// normalized moment oracle: alpha -> E[x^alpha], with E[1] = 1
using MomentFn = std::function<double(const std::vector<int>&)>;

struct GalerkinResult {
  double value = 0.0;
  double std_error = 0.0;  // propagated Monte Carlo error; 0 when exact
  int basis_size = 0;      // monomials of degree 1..degree
  int basis_used = 0;      // after pruning near-dependent columns
};

// core solve from a moment oracle (deterministic given the oracle)
GalerkinResult galerkin_from_moments(const MomentFn& moment, int d, int degree);

// dispatcher: closed-form moments for uniform balls/boxes, radial reduction
// for radial measures on balls/complements, 2D star-shaped quadrature for
// lp/Orlicz bodies, seeded Monte Carlo otherwise
GalerkinResult galerkin_upper(const Potential& pot, const Body& body,
                              int degree, long long mc_samples = 400000,
                              unsigned long long seed = 20240901ull,
                              double trunc_radius = 0.0);

}  // namespace gap
