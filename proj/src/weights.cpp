#include "gap/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace gap {

WeightSpec radial_poly_weight(double c) {
  if (!(c > 0.0))
    throw std::invalid_argument("radial_poly_weight: need c > 0");
  RadialScalarWeight s;
  s.name = "radial_poly";
  s.w = [c](double r) { return c - r * r; };
  s.dw = [](double r) { return -2.0 * r; };
  s.d2w = [](double) { return -2.0; };
  s.has_origin_limit = true;
  s.w0 = c;
  s.d2w0 = -2.0;
  s.dw_over_r0 = -2.0;
  return s;
}

WeightSpec radial_exp_power_weight(double eps, double alpha) {
  if (!(alpha > 1.0))
    throw std::invalid_argument("radial_exp_power_weight: need alpha > 1");
  RadialScalarWeight s;
  s.name = "radial_exp_power";
  s.w = [eps, alpha](double r) {
    return std::exp(eps * std::pow(r, alpha) / alpha);
  };
  s.dw = [eps, alpha, f = s.w](double r) {
    return eps * std::pow(r, alpha - 1.0) * f(r);
  };
  s.d2w = [eps, alpha, f = s.w](double r) {
    const double g = eps * std::pow(r, alpha - 1.0);
    return (eps * (alpha - 1.0) * std::pow(r, alpha - 2.0) + g * g) * f(r);
  };
  if (alpha >= 2.0) {
    s.has_origin_limit = true;
    s.w0 = 1.0;
    s.d2w0 = (alpha == 2.0) ? eps : 0.0;
    s.dw_over_r0 = (alpha == 2.0) ? eps : 0.0;
  }
  return s;
}

WeightSpec radial_inverse_square_weight(double c) {
  if (!(c >= 0.0))
    throw std::invalid_argument("radial_inverse_square_weight: need c >= 0");
  RadialScalarWeight s;
  s.name = "radial_inverse_square";
  s.w = [c](double r) { return c + 1.0 / (r * r); };
  s.dw = [](double r) { return -2.0 / (r * r * r); };
  s.d2w = [](double r) { return 6.0 / (r * r * r * r); };
  return s;
}

WeightSpec per_coordinate_cos_weight(double beta) {
  if (!(beta > 0.0))
    throw std::invalid_argument("per_coordinate_cos_weight: need beta > 0");
  PerCoordinateWeight s;
  s.name = "per_coordinate_cos";
  s.w = [beta](double t) { return std::cos(beta * t); };
  s.dw = [beta](double t) { return -beta * std::sin(beta * t); };
  s.d2w = [beta](double t) { return -beta * beta * std::cos(beta * t); };
  return s;
}

const std::string& weight_name(const WeightSpec& weight) {
  static const std::string identity = "identity";
  if (const auto* r = std::get_if<RadialScalarWeight>(&weight)) return r->name;
  if (const auto* p = std::get_if<PerCoordinateWeight>(&weight)) return p->name;
  return identity;
}

}  // namespace gap
