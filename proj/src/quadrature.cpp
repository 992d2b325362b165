#include "gap/quadrature.hpp"

#include <cmath>

namespace gap {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (QUADPACK constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

void gk15(const std::function<double(double)>& f, double a, double b,
          double* result, double* err) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double fc = f(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double f1 = f(c - x), f2 = f(c + x);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  *result = resk * h;
  *err = std::fabs((resk - resg) * h);
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, int max_depth, QuadratureResult* acc) {
  double v, e;
  gk15(f, a, b, &v, &e);
  ++acc->panels;
  if (e <= tol || depth >= max_depth) {
    acc->value += v;
    acc->abs_error += e;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth + 1, max_depth, acc);
  adapt(f, m, b, 0.5 * tol, depth + 1, max_depth, acc);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double rel_tol,
                                    double abs_tol, int max_depth) {
  QuadratureResult out;
  if (a == b) return out;
  // first pass for a scale estimate, then refine against the mixed tolerance
  double v0, e0;
  gk15(f, a, b, &v0, &e0);
  const double scale = std::fmax(std::fabs(v0), abs_tol);
  const double tol = std::fmax(abs_tol, rel_tol * scale);
  adapt(f, a, b, tol, 0, max_depth, &out);
  // one refinement round if the achieved error looks too big relative to the
  // actual integral value
  if (out.abs_error > std::fmax(abs_tol, rel_tol * std::fabs(out.value))) {
    QuadratureResult out2;
    const double tol2 = std::fmax(abs_tol, rel_tol * std::fabs(out.value));
    adapt(f, a, b, tol2, 0, max_depth, &out2);
    if (out2.abs_error < out.abs_error) return out2;
  }
  return out;
}

}  // namespace gap
