#include "gap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gap/special.hpp"

namespace gap {

namespace {

constexpr double kPi = std::numbers::pi;

double unit_ball_volume(int d) {
  return std::exp(0.5 * d * std::log(kPi) - lgamma_pos(0.5 * d + 1.0));
}

// sup over the radial range of r^2 (1 + 2 max{V'/(rV''), 1}); closed forms
// where the ratio V'/(rV'') is constant, grid scan otherwise
double interior_sup(const Potential& pot, double r_bar, bool& finite) {
  finite = true;
  if (std::holds_alternative<Uniform>(pot)) return 3.0 * r_bar * r_bar;
  if (const auto* p = std::get_if<RadialPower>(&pot)) {
    const double ratio = 1.0 / (p->alpha - 1.0);
    return r_bar * r_bar * (1.0 + 2.0 * std::max(ratio, 1.0));
  }
  const int n = 4096;
  double sup = 0.0;
  for (int j = 1; j <= n; ++j) {
    const double r = r_bar * j / n;
    const double d1 = potential_deriv(pot, r);
    const double d2 = potential_deriv2(pot, r);
    if (d1 == 0.0 && d2 == 0.0) {
      // locally flat potential: same convention as the uniform case
      sup = std::max(sup, 3.0 * r * r);
      continue;
    }
    if (d2 <= 0.0) {
      finite = false;
      return std::numeric_limits<double>::infinity();
    }
    const double ratio = d1 / (r * d2);
    sup = std::max(sup, r * r * (1.0 + 2.0 * std::max(ratio, 1.0)));
  }
  if (!std::isfinite(sup)) finite = false;
  return sup;
}

// sup over the boundary of r^2 + 2r/rho; closed form for the ball
double boundary_sup(const Body& body, int n_samples, bool& finite) {
  finite = true;
  if (const auto* b = std::get_if<Ball>(&body))
    return 3.0 * b->radius * b->radius;
  if (std::holds_alternative<Box>(body)) {
    finite = false;  // flat faces: rho = 0, the supremum diverges
    return std::numeric_limits<double>::infinity();
  }
  double sup = 0.0;
  for (const auto& bp : sample_boundary(body, n_samples)) {
    double r2 = 0.0;
    for (double c : bp.x) r2 += c * c;
    const double r = std::sqrt(r2);
    if (!(bp.rho > 0.0)) {
      finite = false;
      return std::numeric_limits<double>::infinity();
    }
    sup = std::max(sup, r2 + 2.0 * r / bp.rho);
  }
  return sup;
}

bool is_uniform(const Potential& pot) {
  return std::holds_alternative<Uniform>(pot);
}

}  // namespace

const char* to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
    case BoundKind::exact: return "exact";
  }
  return "?";
}

BoundReport payne_weinberger(const Body& body, const Potential& pot) {
  BoundReport rep;
  rep.method = "payne_weinberger";
  rep.kind = BoundKind::lower;
  if (!is_convex(body) || !is_bounded(body)) {
    rep.assumptions_ok = false;
    rep.value = 0.0;
    return rep;
  }
  // convexity of the potential: all supported radial families are convex by
  // construction; product marginals are checked by their Hessian scan
  if (std::holds_alternative<ProductPotential>(pot)) {
    const auto bl = brascamp_lieb(pot, body);
    if (bl.value < 0.0) {
      rep.assumptions_ok = false;
      return rep;
    }
  }
  const double diam = diameter(body);
  rep.value = kPi * kPi / (diam * diam);
  rep.diagnostics["diameter"] = diam;
  return rep;
}

BoundReport exact_box_gap(double half_width) {
  if (!(half_width > 0.0))
    throw std::invalid_argument("exact_box_gap: need half_width > 0");
  BoundReport rep;
  rep.method = "exact_box_gap";
  rep.kind = BoundKind::exact;
  rep.value = kPi * kPi / (4.0 * half_width * half_width);
  return rep;
}

BoundReport corollary_radial(const Potential& pot, const Body& body,
                             int boundary_samples) {
  BoundReport rep;
  rep.method = "corollary_radial";
  rep.kind = BoundKind::lower;
  if (!is_radial(pot))
    throw std::domain_error("corollary_radial: potential is not radial");
  if (!is_convex(body) || !is_bounded(body)) {
    rep.assumptions_ok = false;
    return rep;
  }
  const int d = dim(body);
  const double r_bar = radii(body).r_bar;
  bool fin_in = true, fin_bd = true;
  const double sup_in = interior_sup(pot, r_bar, fin_in);
  const double sup_bd = boundary_sup(body, boundary_samples, fin_bd);
  rep.diagnostics["interior_sup"] = sup_in;
  rep.diagnostics["boundary_sup"] = sup_bd;
  rep.diagnostics["boundary_sampled"] =
      (std::holds_alternative<Ball>(body) || std::holds_alternative<Box>(body))
          ? 0.0
          : 1.0;
  if (!fin_in || !fin_bd) {
    rep.assumptions_ok = false;
    rep.value = 0.0;
    return rep;
  }
  const double c = std::max(sup_in, sup_bd);
  rep.diagnostics["C"] = c;
  rep.value = 2.0 * d / c;
  return rep;
}

BoundReport ball_exp_weight_bound(int d, double radius) {
  if (d < 2 || !(radius > 0.0))
    throw std::invalid_argument("ball_exp_weight_bound: need d >= 2, R > 0");
  BoundReport rep;
  rep.method = "ball_exp_weight";
  rep.kind = BoundKind::lower;
  rep.value = (d - 1.0) / (radius * radius);
  return rep;
}

BoundReport brascamp_lieb_bound(const Potential& pot, const Body& body) {
  BoundReport rep;
  rep.method = "brascamp_lieb";
  rep.kind = BoundKind::lower;
  const auto bl = brascamp_lieb(pot, body);
  rep.value = bl.value;
  rep.assumptions_ok = bl.positive;
  return rep;
}

BoundReport weinberger_upper(const Body& body) {
  if (!is_bounded(body))
    throw std::domain_error("weinberger_upper: body is unbounded");
  BoundReport rep;
  rep.method = "weinberger_upper";
  rep.kind = BoundKind::upper;
  const int d = dim(body);
  const auto vol = volume(body);
  const double root = neumann_ball_root(d);
  rep.value = std::pow(unit_ball_volume(d) / vol.value, 2.0 / d) * root * root;
  rep.diagnostics["volume"] = vol.value;
  rep.diagnostics["volume_std_error"] = vol.std_error;
  rep.diagnostics["unit_ball_gap"] = root * root;
  return rep;
}

BoundReport reverse_comparison(const Body& body, int boundary_samples) {
  BoundReport rep;
  rep.method = "reverse_comparison";
  rep.kind = BoundKind::lower;
  if (!is_convex(body) || !is_bounded(body)) {
    rep.assumptions_ok = false;
    return rep;
  }
  const int d = dim(body);
  const double rho = rho_min(body, boundary_samples);
  rep.diagnostics["rho_min"] = rho;
  if (!(rho > 0.0)) {
    rep.assumptions_ok = false;
    rep.value = 0.0;
    return rep;
  }
  const auto rr = radii(body);
  const double denom =
      std::max(3.0 * rr.r_bar * rr.r_bar,
               rr.r_bar * rr.r_bar + 2.0 * rr.r_bar / rho);
  const double factor =
      2.0 * d * rr.r_under * rr.r_under / ((d + 2.0) * denom);
  const auto vol = volume(body);
  const double root = neumann_ball_root(d);
  rep.value = factor * std::pow(unit_ball_volume(d) / vol.value, 2.0 / d) *
              root * root;
  rep.diagnostics["r_under"] = rr.r_under;
  rep.diagnostics["r_bar"] = rr.r_bar;
  rep.diagnostics["volume"] = vol.value;
  rep.diagnostics["volume_std_error"] = vol.std_error;
  return rep;
}

BoundReport orlicz_bound(const Body& body) {
  const Orlicz* op = std::get_if<Orlicz>(&body);
  Orlicz tmp;
  if (!op) {
    const auto* lp = std::get_if<LpBall>(&body);
    if (!lp)
      throw std::domain_error(
          "orlicz_bound: body must be an lp ball or an Orlicz body");
    tmp.box_bound = lp->radius;
    for (int i = 0; i < lp->dim; ++i)
      tmp.coords.push_back(power_coord(lp->p, lp->radius));
    op = &tmp;
  }
  const double big_r = op->box_bound;
  // q = min_i inf_t U_i''(t)/|U_i'(t)| on [-R, R], ignoring stationary points
  double q = std::numeric_limits<double>::infinity();
  double arg_q = 0.0;
  const int n = 4096;
  for (const auto& coord : op->coords) {
    auto ratio = [&](double t) {
      const double d1 = coord.deriv(t);
      if (std::fabs(d1) < 1e-14) return std::numeric_limits<double>::infinity();
      const double d2 = coord.deriv2(t);
      return d2 / std::fabs(d1);
    };
    int best = -1;
    double best_v = std::numeric_limits<double>::infinity();
    std::vector<double> vals(n + 1);
    for (int j = 0; j <= n; ++j) {
      const double t = -big_r + 2.0 * big_r * j / n;
      vals[j] = ratio(t);
      if (vals[j] < best_v) {
        best_v = vals[j];
        best = j;
      }
    }
    if (best < 0) continue;
    // golden-section refinement on the bracketing cell pair
    double a = -big_r + 2.0 * big_r * std::max(0, best - 1) / n;
    double b = -big_r + 2.0 * big_r * std::min(n, best + 1) / n;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = ratio(x1), f2 = ratio(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        b = x2; x2 = x1; f2 = f1;
        x1 = b - gr * (b - a); f1 = ratio(x1);
      } else {
        a = x1; x1 = x2; f1 = f2;
        x2 = a + gr * (b - a); f2 = ratio(x2);
      }
    }
    const double refined = std::min({best_v, f1, f2});
    if (refined < q) {
      q = refined;
      arg_q = 0.5 * (a + b);
    }
  }
  BoundReport rep;
  rep.method = "orlicz_bound";
  rep.kind = BoundKind::lower;
  if (!std::isfinite(q)) {
    // derivative vanished everywhere on the scan: no curvature information
    rep.assumptions_ok = false;
    return rep;
  }
  q = std::max(q, 0.0);
  const double beta = std::atan(2.0 * big_r * q / kPi) / big_r;
  rep.value = beta * beta;
  rep.diagnostics["q"] = q;
  rep.diagnostics["argmin_t"] = arg_q;
  rep.diagnostics["beta"] = beta;
  rep.diagnostics["box_bound"] = big_r;
  return rep;
}

BoundReport subbotin_bound(double alpha, int d, double rho, double r_bar) {
  if (!(alpha > 1.0) || !(alpha <= 2.0))
    throw std::domain_error("subbotin_bound: alpha must lie in (1, 2]");
  if (d < 2 || !(rho > 0.0) || !(r_bar > 0.0))
    throw std::invalid_argument("subbotin_bound: need d >= 2, rho > 0, r_bar > 0");
  const double c = std::min((alpha - 1.0) / ((alpha + 1.0) * r_bar * r_bar),
                            rho / (r_bar * r_bar * rho + 2.0 * r_bar));
  const double branch1 = 2.0 * c * d;
  // 0^0 = 1 at alpha = 2, so the second branch degrades continuously to 1/2
  const double e = 1.0 - 2.0 / alpha;
  const double branch2 =
      (alpha == 2.0)
          ? 0.5
          : 0.25 * alpha * std::pow((2.0 - alpha) / (alpha - 1.0), e) *
                std::pow((double)d, e);
  BoundReport rep;
  rep.method = "subbotin";
  rep.kind = BoundKind::lower;
  rep.value = std::max(branch1, branch2);
  rep.diagnostics["C"] = c;
  rep.diagnostics["curvature_branch"] = branch1;
  rep.diagnostics["dimension_branch"] = branch2;
  return rep;
}

BoundReport gaussian_complement_bound(int d, double radius) {
  if (d < 5)
    throw std::domain_error(
        "gaussian_complement_bound: needs dimension at least 5");
  if (!(radius > 0.0))
    throw std::invalid_argument("gaussian_complement_bound: need R > 0");
  BoundReport rep;
  rep.method = "gaussian_complement";
  rep.kind = BoundKind::lower;
  const double b1 = (d - 4.0) / (radius * radius);
  rep.value = std::min(b1, 1.0 / 3.0);
  rep.diagnostics["obstacle_branch"] = b1;
  return rep;
}

BoundReport bcgm_bound(int d, double radius) {
  if (d < 2 || !(radius > 0.0))
    throw std::invalid_argument("bcgm_bound: need d >= 2, R > 0");
  BoundReport rep;
  rep.method = "bcgm";
  rep.kind = BoundKind::lower;
  rep.value = d / (2.0 * d + radius * radius);
  return rep;
}

BoundReport exact_ball_gap(int d, double radius) {
  if (d < 2 || !(radius > 0.0))
    throw std::invalid_argument("exact_ball_gap: need d >= 2, R > 0");
  BoundReport rep;
  rep.method = "exact_ball_gap";
  rep.kind = BoundKind::exact;
  const double p = neumann_ball_root(d);
  rep.value = p * p / (radius * radius);
  rep.diagnostics["bessel_root"] = p;
  return rep;
}

BoundReport optimal_radial_weight_gap(int d, double radius) {
  if (d < 2 || !(radius > 0.0))
    throw std::invalid_argument("optimal_radial_weight_gap: need d >= 2, R > 0");
  BoundReport rep;
  rep.method = "optimal_radial_weight";
  rep.kind = BoundKind::lower;
  const double p = optimal_weight_root(d);
  rep.value = p * p / (radius * radius);
  rep.diagnostics["bessel_root"] = p;
  return rep;
}

std::vector<BoundReport> best_bound(const Potential& pot, const Body& body) {
  std::vector<BoundReport> out;
  const int d = dim(body);
  const bool uniform = is_uniform(pot);
  const bool convex_bounded = is_convex(body) && is_bounded(body);

  out.push_back(payne_weinberger(body, pot));
  out.push_back(brascamp_lieb_bound(pot, body));
  if (is_radial(pot) && convex_bounded)
    out.push_back(corollary_radial(pot, body));
  if (const auto* ball = std::get_if<Ball>(&body)) {
    if (uniform) {
      out.push_back(ball_exp_weight_bound(d, ball->radius));
      out.push_back(optimal_radial_weight_gap(d, ball->radius));
      out.push_back(exact_ball_gap(d, ball->radius));
    }
    if (const auto* rp = std::get_if<RadialPower>(&pot)) {
      if (rp->alpha <= 2.0)
        out.push_back(subbotin_bound(rp->alpha, d, 1.0 / ball->radius,
                                     ball->radius));
    }
  } else if (convex_bounded) {
    if (const auto* rp = std::get_if<RadialPower>(&pot)) {
      if (rp->alpha <= 2.0) {
        const double rho = rho_min(body);
        if (rho > 0.0)
          out.push_back(subbotin_bound(rp->alpha, d, rho, radii(body).r_bar));
      }
    }
  }
  if (const auto* bx = std::get_if<Box>(&body)) {
    if (uniform) out.push_back(exact_box_gap(bx->half_width));
  }
  if (uniform && convex_bounded) {
    out.push_back(reverse_comparison(body));
    out.push_back(weinberger_upper(body));
  }
  if (uniform && (std::holds_alternative<LpBall>(body) ||
                  std::holds_alternative<Orlicz>(body)))
    out.push_back(orlicz_bound(body));
  if (const auto* comp = std::get_if<BallComplement>(&body)) {
    if (const auto* rp = std::get_if<RadialPower>(&pot)) {
      if (rp->alpha == 2.0) {
        if (d >= 5) out.push_back(gaussian_complement_bound(d, comp->radius));
        out.push_back(bcgm_bound(d, comp->radius));
      }
    }
  }

  auto rank = [](const BoundReport& r) {
    if (r.kind == BoundKind::lower) return r.assumptions_ok ? 0 : 1;
    return r.kind == BoundKind::exact ? 2 : 3;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const BoundReport& a, const BoundReport& b) {
                     if (rank(a) != rank(b)) return rank(a) < rank(b);
                     if (rank(a) == 0 && a.value != b.value)
                       return a.value > b.value;
                     return a.method < b.method;
                   });
  return out;
}

}  // namespace gap
