#include "gap/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gap/linalg.hpp"

namespace gap {

namespace {

// Flux-form finite differences on a graded mesh, symmetrized in the measure
// m: node masses b_i, edge conductances a_i, optional potential term q, and
// an optional Dirichlet ghost just left of the first node (sector-1 origin).
SymTridiag assemble(const std::function<double(double)>& log_m,
                    const std::function<double(double)>& q, double r_min,
                    double r_max, int n, double grade, bool include_left,
                    bool dirichlet_left) {
  std::vector<double> r;
  r.reserve(n + 1);
  for (int i = include_left ? 0 : 1; i <= n; ++i)
    r.push_back(r_min + (r_max - r_min) * std::pow((double)i / n, grade));
  const int nn = (int)r.size();

  // log weight normalized by its maximum so huge dimensions cannot overflow
  std::vector<double> lm(nn), lmh(nn - 1);
  double s = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < nn; ++i) {
    lm[i] = log_m(r[i]);
    s = std::max(s, lm[i]);
  }
  for (int i = 0; i + 1 < nn; ++i) {
    lmh[i] = log_m(0.5 * (r[i] + r[i + 1]));
    s = std::max(s, lmh[i]);
  }

  std::vector<double> a(nn - 1), b(nn);
  for (int i = 0; i + 1 < nn; ++i)
    a[i] = std::exp(lmh[i] - s) / (r[i + 1] - r[i]);
  b[0] = (r[1] - r[0]) / 2 + (include_left ? 0.0 : (r[0] - r_min) / 2);
  for (int i = 1; i + 1 < nn; ++i) b[i] = (r[i + 1] - r[i - 1]) / 2;
  b[nn - 1] = (r[nn - 1] - r[nn - 2]) / 2;
  for (int i = 0; i < nn; ++i) b[i] *= std::exp(lm[i] - s);

  std::vector<double> diag(nn, 0.0), off(nn - 1);
  for (int i = 0; i + 1 < nn; ++i) {
    diag[i] += a[i];
    diag[i + 1] += a[i];
    off[i] = -a[i];
  }
  if (dirichlet_left && !include_left)
    diag[0] += std::exp(log_m(0.5 * (r_min + r[0])) - s) / (r[0] - r_min);
  if (q)
    for (int i = 0; i < nn; ++i) diag[i] += q(r[i]) * b[i];

  // strip cells whose mass underflowed (both ends: r^(d-1) kills the head at
  // large d, exp(-V) kills the tail)
  const double thr = *std::max_element(b.begin(), b.end()) * 1e-250;
  int lo = 0, hi = nn;
  while (lo < nn - 4 && b[lo] < thr) ++lo;
  while (hi - lo > 4 && b[hi - 1] < thr) --hi;

  SymTridiag t;
  const int m = hi - lo;
  t.diag.resize(m);
  t.off.resize(m - 1);
  for (int i = 0; i < m; ++i) t.diag[i] = diag[lo + i] / b[lo + i];
  for (int i = 0; i + 1 < m; ++i)
    // sqrt each factor first: the product of two tiny tail masses can
    // underflow even when both factors are representable
    t.off[i] = off[lo + i] / (std::sqrt(b[lo + i]) * std::sqrt(b[lo + i + 1]));
  return t;
}

double eigenvalue_for(const Potential& pot, int d, double r_min, double r_max,
                      int sector, int n, double grade) {
  if (!is_radial(pot))
    throw std::domain_error("sturm_eigenvalue: potential is not radial");
  if (sector != 0 && sector != 1)
    throw std::invalid_argument("sturm_eigenvalue: sector must be 0 or 1");
  auto log_m = [&pot, d](double r) {
    return (d - 1.0) * std::log(std::max(r, 1e-300)) -
           potential_value(pot, r);
  };
  const bool include_left = r_min > 0.0;
  std::function<double(double)> q;
  if (sector == 1)
    q = [d](double r) { return (d - 1.0) / (r * r); };
  const bool dirichlet = sector == 1 && r_min == 0.0;
  const SymTridiag t =
      assemble(log_m, q, r_min, r_max, n, grade, include_left, dirichlet);
  return tridiag_kth_eigenvalue(t, sector == 0 ? 1 : 0);
}

}  // namespace

double sturm_eigenvalue(const SturmProblem& p, int n) {
  if (n < 32) throw std::invalid_argument("sturm_eigenvalue: need n >= 32");
  if (!(p.r_max > p.r_min) || p.r_min < 0.0)
    throw std::invalid_argument("sturm_eigenvalue: bad radial range");
  return eigenvalue_for(p.pot, p.dim, p.r_min, p.r_max, p.sector, n, p.grade);
}

double sturm_gap(const SturmProblem& p) {
  const double coarse = sturm_eigenvalue(p, p.n);
  const double fine = sturm_eigenvalue(p, 2 * p.n);
  return (4.0 * fine - coarse) / 3.0;
}

RadialGapResult radial_gap(const Potential& pot, const Body& body, int n,
                           double trunc_radius) {
  SturmProblem p;
  p.pot = pot;
  p.n = n;
  bool truncated = false;
  if (const auto* ball = std::get_if<Ball>(&body)) {
    p.dim = ball->dim;
    p.r_min = 0.0;
    p.r_max = ball->radius;
  } else if (const auto* comp = std::get_if<BallComplement>(&body)) {
    if (std::holds_alternative<Uniform>(pot))
      throw std::domain_error(
          "radial_gap: uniform measure on a complement is not normalizable");
    p.dim = comp->dim;
    p.r_min = comp->radius;
    p.r_max = trunc_radius > comp->radius
                  ? trunc_radius
                  : comp->radius + 10.0 + 3.0 * std::sqrt((double)comp->dim);
    truncated = true;
  } else {
    throw std::domain_error("radial_gap: body must be a ball or complement");
  }

  auto solve = [&](double r_max) {
    RadialGapResult res;
    p.r_max = r_max;
    p.sector = 0;
    res.sector0 = sturm_gap(p);
    p.sector = 1;
    res.sector1 = sturm_gap(p);
    res.value = std::min(res.sector0, res.sector1);
    res.winner = res.sector1 <= res.sector0 ? 1 : 0;
    res.trunc_radius = r_max;
    return res;
  };

  RadialGapResult res = solve(p.r_max);
  if (truncated) {
    const RadialGapResult wide = solve(2.0 * res.trunc_radius - p.r_min);
    const double rel = std::fabs(wide.value - res.value) /
                       std::max(1e-300, std::fabs(wide.value));
    if (rel > 1e-4) {
      std::ostringstream os;
      os << "radial_gap: truncation not converged (" << res.value << " at r="
         << res.trunc_radius << " vs " << wide.value << " at r="
         << wide.trunc_radius << ")";
      throw std::runtime_error(os.str());
    }
    res = wide;
  }
  return res;
}

double marginal_gap(const CoordFn& v, double half_width, int n) {
  auto log_m = [&v](double t) { return -v.value(t); };
  auto solve = [&](int nn) {
    const SymTridiag t = assemble(log_m, nullptr, -half_width, half_width, nn,
                                  1.0, true, false);
    return tridiag_kth_eigenvalue(t, 1);
  };
  const double coarse = solve(n), fine = solve(2 * n);
  return (4.0 * fine - coarse) / 3.0;
}

double product_gap(const Potential& pot, const Body& body, int n) {
  const auto* box = std::get_if<Box>(&body);
  if (!box) throw std::domain_error("product_gap: body must be a box");
  const double half = box->half_width;
  if (std::holds_alternative<Uniform>(pot)) {
    CoordFn flat;
    flat.value = [](double) { return 0.0; };
    return marginal_gap(flat, half, n);  // every marginal is identical
  }
  const auto* pp = std::get_if<ProductPotential>(&pot);
  if (!pp)
    throw std::domain_error("product_gap: potential must be uniform or product");
  if ((int)pp->marginals.size() != box->dim)
    throw std::invalid_argument("product_gap: marginal count != dimension");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& m : pp->marginals)
    best = std::min(best, marginal_gap(m, half, n));
  return best;
}

}  // namespace gap
