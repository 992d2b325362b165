#include "gap/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gap/quadrature.hpp"

namespace gap {

namespace {

const RadialCustom* as_custom(const Potential& pot) {
  return std::get_if<RadialCustom>(&pot);
}

[[noreturn]] void not_radial(const char* op) {
  throw std::domain_error(std::string(op) + ": potential is not radial");
}

}  // namespace

bool is_radial(const Potential& pot) {
  return !std::holds_alternative<ProductPotential>(pot);
}

double potential_value(const Potential& pot, double r) {
  if (std::holds_alternative<Uniform>(pot)) return 0.0;
  if (const auto* p = std::get_if<RadialPower>(&pot))
    return std::pow(r, p->alpha) / p->alpha;
  if (const auto* c = as_custom(pot)) return c->value(r);
  not_radial("potential_value");
}

double potential_deriv(const Potential& pot, double r) {
  if (std::holds_alternative<Uniform>(pot)) return 0.0;
  if (const auto* p = std::get_if<RadialPower>(&pot))
    return std::pow(r, p->alpha - 1.0);
  if (const auto* c = as_custom(pot)) return c->deriv(r);
  not_radial("potential_deriv");
}

double potential_deriv2(const Potential& pot, double r) {
  if (std::holds_alternative<Uniform>(pot)) return 0.0;
  if (const auto* p = std::get_if<RadialPower>(&pot)) {
    if (p->alpha == 2.0) return 1.0;
    return (p->alpha - 1.0) * std::pow(r, p->alpha - 2.0);
  }
  if (const auto* c = as_custom(pot)) return c->deriv2(r);
  not_radial("potential_deriv2");
}

HessianEigs hessian_eigs(const Potential& pot, double r) {
  if (!is_radial(pot)) not_radial("hessian_eigs");
  if (!(r > 0.0))
    throw std::invalid_argument("hessian_eigs: need r > 0");
  return HessianEigs{potential_deriv2(pot, r), potential_deriv(pot, r) / r};
}

ConvexityBound brascamp_lieb(const Potential& pot, const Body& body) {
  if (!is_convex(body)) return {0.0, false};
  if (std::holds_alternative<Uniform>(pot)) return {0.0, false};
  if (const auto* p = std::get_if<RadialPower>(&pot)) {
    const double a = p->alpha;
    if (a == 2.0) return {1.0, true};
    if (a > 2.0) return {0.0, false};  // tangential eigenvalue vanishes at 0
    // 1 < a < 2: both r^(a-2) branches decrease, infimum at the farthest point
    const double r_far = radii(body).r_bar;
    return {(a - 1.0) * std::pow(r_far, a - 2.0), true};
  }
  if (const auto* pp = std::get_if<ProductPotential>(&pot)) {
    // Hessian is diag(v_i''(x_i)); scan each marginal over its box range
    const Box* bx = std::get_if<Box>(&body);
    const double half = bx ? bx->half_width : radii(body).r_bar;
    double worst = std::numeric_limits<double>::infinity();
    const int n = 2048;
    for (const auto& m : pp->marginals)
      for (int j = 0; j <= n; ++j)
        worst = std::min(worst, m.deriv2(-half + 2.0 * half * j / n));
    if (!(worst > 0.0) || !std::isfinite(worst)) return {std::max(worst, 0.0), false};
    return {worst, true};
  }
  // custom radial profile: scan min(v''(r), v'(r)/r) on (0, r_bar]
  const double r_hi = radii(body).r_bar;
  double worst = std::numeric_limits<double>::infinity();
  const int n = 4096;
  for (int j = 1; j <= n; ++j) {
    const double r = r_hi * j / n;
    const auto he = hessian_eigs(pot, r);
    worst = std::min({worst, he.radial, he.tangential});
  }
  if (!(worst > 0.0) || !std::isfinite(worst)) return {std::max(worst, 0.0), false};
  return {worst, true};
}

double radial_density_moment(const Potential& pot, const Body& body, int k,
                             double trunc_radius) {
  if (!is_radial(pot)) not_radial("radial_density_moment");
  if (k < 0) throw std::invalid_argument("radial_density_moment: need k >= 0");
  double a, b;
  int d;
  if (const auto* ball = std::get_if<Ball>(&body)) {
    a = 0.0;
    b = ball->radius;
    d = ball->dim;
  } else if (const auto* comp = std::get_if<BallComplement>(&body)) {
    a = comp->radius;
    d = comp->dim;
    b = trunc_radius > a ? trunc_radius
                         : comp->radius + 10.0 + 3.0 * std::sqrt((double)d);
    if (std::holds_alternative<Uniform>(pot))
      throw std::domain_error(
          "radial_density_moment: uniform measure on a complement is not "
          "normalizable");
  } else {
    throw std::domain_error(
        "radial_density_moment: body must be a ball or ball complement");
  }
  const double q = k + d - 1.0;
  auto log_f = [&](double r) {
    if (r <= 0.0) return -std::numeric_limits<double>::infinity();
    return q * std::log(r) - potential_value(pot, r);
  };
  // log integrand is concave up to the q*log r term's monotonicity: its
  // derivative q/r - v'(r) decreases, so the maximiser is unique
  auto dlog = [&](double r) { return q / r - potential_deriv(pot, r); };
  double r_peak = b;
  const double eps = std::max(1e-12, 1e-12 * b);
  if (dlog(b) < 0.0) {
    double lo = std::max(a, eps), hi = b;
    if (dlog(lo) <= 0.0) {
      r_peak = lo;
    } else {
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (dlog(mid) > 0.0 ? lo : hi) = mid;
      }
      r_peak = 0.5 * (lo + hi);
    }
  }
  const double s = log_f(r_peak);
  auto f = [&](double r) {
    const double lf = log_f(r) - s;
    return lf < -745.0 ? 0.0 : std::exp(lf);
  };
  double total = 0.0;
  if (r_peak > a && r_peak < b) {
    total = integrate_adaptive(f, a, r_peak, 1e-12, 1e-14).value +
            integrate_adaptive(f, r_peak, b, 1e-12, 1e-14).value;
  } else {
    total = integrate_adaptive(f, a, b, 1e-12, 1e-14).value;
  }
  return std::exp(s) * total;
}

}  // namespace gap
