#pragma once

#include <functional>
#include <string>
#include <variant>

namespace gap {

// Diagonal weight matrices W for the certificate engine. A radial scalar
// weight is W(x) = w(|x|) I; a per-coordinate weight is W = diag w(x_i).

struct RadialScalarWeight {
  std::string name;
  std::function<double(double)> w;
  std::function<double(double)> dw;
  std::function<double(double)> d2w;
  // r -> 0 limits used to close the certificate at the origin; only set for
  // families where they exist (w(0), w''(0), lim w'(r)/r)
  bool has_origin_limit = false;
  double w0 = 0.0;
  double d2w0 = 0.0;
  double dw_over_r0 = 0.0;
};

struct PerCoordinateWeight {
  std::string name;
  std::function<double(double)> w;
  std::function<double(double)> dw;
  std::function<double(double)> d2w;
};

struct IdentityWeight {};

using WeightSpec =
    std::variant<RadialScalarWeight, PerCoordinateWeight, IdentityWeight>;

// the weight families used by the closed-form certificates
WeightSpec radial_poly_weight(double c);                        // c - r^2
WeightSpec radial_exp_power_weight(double eps, double alpha);   // exp(eps r^a / a)
WeightSpec radial_inverse_square_weight(double c);              // c + r^{-2}
WeightSpec per_coordinate_cos_weight(double beta);              // cos(beta t)

const std::string& weight_name(const WeightSpec& weight);

}  // namespace gap
