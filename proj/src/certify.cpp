#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "gap/bounds.hpp"

namespace gap {

namespace {

struct RadialView {
  std::function<double(double)> w, dw, d2w;
  bool has_origin_limit = false;
  double w0 = 0.0, d2w0 = 0.0, dw_over_r0 = 0.0;
};

std::optional<RadialView> radial_view(const WeightSpec& weight) {
  if (std::holds_alternative<IdentityWeight>(weight)) {
    RadialView v;
    v.w = [](double) { return 1.0; };
    v.dw = [](double) { return 0.0; };
    v.d2w = [](double) { return 0.0; };
    v.has_origin_limit = true;
    v.w0 = 1.0;
    return v;
  }
  if (const auto* r = std::get_if<RadialScalarWeight>(&weight)) {
    RadialView v;
    v.w = r->w;
    v.dw = r->dw;
    v.d2w = r->d2w;
    v.has_origin_limit = r->has_origin_limit;
    v.w0 = r->w0;
    v.d2w0 = r->d2w0;
    v.dw_over_r0 = r->dw_over_r0;
    return v;
  }
  return std::nullopt;
}

// Hessian eigenvalue limits of the potential at the origin, when they exist
std::optional<HessianEigs> origin_hessian(const Potential& pot) {
  if (std::holds_alternative<Uniform>(pot)) return HessianEigs{0.0, 0.0};
  if (const auto* p = std::get_if<RadialPower>(&pot)) {
    if (p->alpha == 2.0) return HessianEigs{1.0, 1.0};
    if (p->alpha > 2.0) return HessianEigs{0.0, 0.0};
  }
  return std::nullopt;
}

double weight_ratio(const RadialView& v, double r) {
  return v.dw(r) / v.w(r);
}

}  // namespace

InteriorBranches certify_interior_branches(const Potential& pot,
                                           const WeightSpec& weight, int d,
                                           double r) {
  const auto view = radial_view(weight);
  if (!view)
    throw std::invalid_argument(
        "certify_interior_branches: weight is not radial");
  if (!(r > 0.0))
    throw std::invalid_argument("certify_interior_branches: need r > 0");
  const double wv = view->w(r);
  const double vp = potential_deriv(pot, r);
  const double tail =
      -(view->d2w(r) + ((d - 1.0) / r - vp) * view->dw(r)) / wv;
  return {potential_deriv2(pot, r) + tail, vp / r + tail};
}

BoundReport certify_weight(const Potential& pot, const Body& body,
                           const WeightSpec& weight, const GridSpec& grid) {
  if (grid.interior < 2 || grid.boundary < 1)
    throw std::invalid_argument("certify_weight: grid too small");
  BoundReport rep;
  rep.method = "certify_" + weight_name(weight);
  rep.kind = BoundKind::lower;
  const int d = dim(body);

  if (const auto* pc = std::get_if<PerCoordinateWeight>(&weight)) {
    // per-coordinate certificates: uniform measure on a separable body
    if (!std::holds_alternative<Uniform>(pot))
      throw std::domain_error(
          "certify_weight: per-coordinate weights need the uniform measure");
    const Orlicz* op = std::get_if<Orlicz>(&body);
    Orlicz tmp;
    if (!op) {
      const auto* lp = std::get_if<LpBall>(&body);
      if (!lp)
        throw std::domain_error(
            "certify_weight: per-coordinate weights need a separable body");
      tmp.box_bound = lp->radius;
      for (int i = 0; i < lp->dim; ++i)
        tmp.coords.push_back(power_coord(lp->p, lp->radius));
      op = &tmp;
    }
    const double big_r = op->box_bound;
    double interior = std::numeric_limits<double>::infinity();
    double arg_int = 0.0;
    double w_min = std::numeric_limits<double>::infinity();
    for (int j = 0; j < grid.interior; ++j) {
      const double t = -big_r + 2.0 * big_r * j / (grid.interior - 1.0);
      const double wv = pc->w(t);
      w_min = std::min(w_min, wv);
      if (!(wv > 0.0))
        throw std::domain_error("certify_weight: weight not positive at t=" +
                                std::to_string(t));
      const double val = -pc->d2w(t) / wv;
      if (val < interior) {
        interior = val;
        arg_int = t;
      }
    }
    double margin = std::numeric_limits<double>::infinity();
    double arg_bd = 0.0;
    for (const auto& coord : op->coords) {
      for (int j = 0; j < grid.boundary; ++j) {
        const double t = -big_r + 2.0 * big_r * j / (grid.boundary - 1.0);
        const double m =
            coord.deriv2(t) + (pc->dw(t) / pc->w(t)) * coord.deriv(t);
        if (m < margin) {
          margin = m;
          arg_bd = t;
        }
      }
    }
    rep.value = interior;
    rep.assumptions_ok = (margin >= -grid.tol) && (interior > 0.0);
    rep.diagnostics["interior_min"] = interior;
    rep.diagnostics["interior_argmin"] = arg_int;
    rep.diagnostics["boundary_margin"] = margin;
    rep.diagnostics["boundary_argmin"] = arg_bd;
    rep.diagnostics["weight_min"] = w_min;
    rep.diagnostics["grid_interior"] = grid.interior;
    rep.diagnostics["grid_boundary"] = grid.boundary;
    return rep;
  }

  const auto view = radial_view(weight);
  const bool identity = std::holds_alternative<IdentityWeight>(weight);

  if (std::holds_alternative<ProductPotential>(pot)) {
    // only the trivial weight is compatible with a non-radial potential here
    if (!identity)
      throw std::domain_error(
          "certify_weight: radial weights need a radial potential");
    const auto& pp = std::get<ProductPotential>(pot);
    const double half = std::holds_alternative<Box>(body)
                            ? std::get<Box>(body).half_width
                            : radii(body).r_bar;
    double interior = std::numeric_limits<double>::infinity();
    double arg_int = 0.0;
    for (const auto& m : pp.marginals) {
      for (int j = 0; j < grid.interior; ++j) {
        const double t = -half + 2.0 * half * j / (grid.interior - 1.0);
        const double val = m.deriv2(t);
        if (val < interior) {
          interior = val;
          arg_int = t;
        }
      }
    }
    const double margin = is_convex(body) ? rho_min(body, grid.boundary)
                                          : -std::numeric_limits<double>::infinity();
    rep.value = interior;
    rep.assumptions_ok = (margin >= -grid.tol) && (interior > 0.0);
    rep.diagnostics["interior_min"] = interior;
    rep.diagnostics["interior_argmin"] = arg_int;
    rep.diagnostics["boundary_margin"] = margin;
    rep.diagnostics["grid_interior"] = grid.interior;
    rep.diagnostics["grid_boundary"] = grid.boundary;
    return rep;
  }

  // radial weight on a radial potential
  double r_lo, r_hi;
  bool log_spaced;
  if (const auto* comp = std::get_if<BallComplement>(&body)) {
    r_lo = comp->radius;
    r_hi = grid.trunc_radius > comp->radius
               ? grid.trunc_radius
               : comp->radius + 10.0 + 3.0 * std::sqrt((double)d);
    log_spaced = false;
  } else {
    const double r_bar = radii(body).r_bar;
    r_lo = 1e-8 * r_bar;
    r_hi = r_bar;
    log_spaced = true;
  }

  double interior = std::numeric_limits<double>::infinity();
  double arg_int = 0.0;
  double w_min = std::numeric_limits<double>::infinity();
  const double lr = std::log(r_hi / r_lo);
  for (int j = 0; j < grid.interior; ++j) {
    const double f = j / (grid.interior - 1.0);
    const double r =
        log_spaced ? r_hi * std::exp(lr * (f - 1.0)) : r_lo + (r_hi - r_lo) * f;
    const double wv = view->w(r);
    w_min = std::min(w_min, wv);
    if (!(wv > 0.0))
      throw std::domain_error("certify_weight: weight not positive at r=" +
                              std::to_string(r));
    const auto br = certify_interior_branches(pot, weight, d, r);
    const double val = std::min(br.radial, br.tangential);
    if (val < interior) {
      interior = val;
      arg_int = r;
    }
  }
  // append the analytic r -> 0 limit when the body reaches the origin
  if (log_spaced && view->has_origin_limit) {
    if (const auto he = origin_hessian(pot)) {
      const double tail0 =
          -(view->d2w0 + (d - 1.0) * view->dw_over_r0) / view->w0;
      const double val = std::min(he->radial, he->tangential) + tail0;
      if (val < interior) {
        interior = val;
        arg_int = 0.0;
      }
    }
  }

  double margin;
  double arg_bd;
  if (const auto* ball = std::get_if<Ball>(&body)) {
    margin = 1.0 / ball->radius + weight_ratio(*view, ball->radius);
    arg_bd = ball->radius;
  } else if (const auto* comp = std::get_if<BallComplement>(&body)) {
    margin = -1.0 / comp->radius - weight_ratio(*view, comp->radius);
    arg_bd = comp->radius;
  } else {
    margin = std::numeric_limits<double>::infinity();
    arg_bd = 0.0;
    for (const auto& bp : sample_boundary(body, grid.boundary)) {
      double r2 = 0.0, xe = 0.0;
      for (size_t i = 0; i < bp.x.size(); ++i) {
        r2 += bp.x[i] * bp.x[i];
        xe += bp.x[i] * bp.eta[i];
      }
      const double r = std::sqrt(r2);
      const double m = bp.rho + weight_ratio(*view, r) * (xe / r);
      if (m < margin) {
        margin = m;
        arg_bd = r;
      }
    }
  }

  rep.value = interior;
  rep.assumptions_ok = (margin >= -grid.tol) && (interior > 0.0);
  rep.diagnostics["interior_min"] = interior;
  rep.diagnostics["interior_argmin"] = arg_int;
  rep.diagnostics["boundary_margin"] = margin;
  rep.diagnostics["boundary_argmin"] = arg_bd;
  rep.diagnostics["weight_min"] = w_min;
  rep.diagnostics["grid_interior"] = grid.interior;
  rep.diagnostics["grid_boundary"] = grid.boundary;
  rep.diagnostics["r_min"] = r_lo;
  rep.diagnostics["r_max"] = r_hi;
  return rep;
}

}  // namespace gap
