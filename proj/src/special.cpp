#include "gap/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gap {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double z) {
  // z >= 0.5; series argument is z-1 in the usual convention
  double x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z - 1.0 + i);
  return x;
}

}  // namespace

double lgamma_pos(double z) {
  if (!(z > 0.0)) throw std::invalid_argument("lgamma_pos: need z > 0");
  double shift = 0.0;
  while (z < 0.5) {  // reflectionless reduction upward
    shift -= std::log(z);
    z += 1.0;
  }
  const double t = z - 1.0 + kLanczosG + 0.5;
  return shift + 0.5 * std::log(2.0 * M_PI) + (z - 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

double tgamma_pos(double z) {
  if (!(z > 0.0)) throw std::invalid_argument("tgamma_pos: need z > 0");
  // reduce into [0.5, 120] where the direct form is well tested, then undo
  double mult = 1.0;
  while (z > 120.0) {
    z -= 1.0;
    mult *= z;
  }
  while (z < 0.5) {
    mult /= z;
    z += 1.0;
  }
  const double t = z - 1.0 + kLanczosG + 0.5;
  return mult * std::sqrt(2.0 * M_PI) * std::pow(t, z - 0.5) * std::exp(-t) *
         lanczos_sum(z);
}

namespace {

// Kahan-compensated long double evaluation of S_nu and optionally dS/du.
void scaled_series(double nu, double u, double* s_out, double* ds_out) {
  const long double x = (long double)u * (long double)u / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L, comp = 0.0L;
  long double dsum = 0.0L, dcomp = 0.0L;  // sum of k * term / u * 2 ... see below
  long double max_term = 1.0L;
  for (int k = 1; k < 500; ++k) {
    term *= -x / ((long double)k * ((long double)nu + k));
    const long double at = fabsl(term);
    if (at > max_term) max_term = at;
    // Kahan add to sum
    long double y = term - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (ds_out) {
      long double dy = (long double)k * term - dcomp;
      long double dt = dsum + dy;
      dcomp = (dt - dsum) - dy;
      dsum = dt;
    }
    if (at < 1e-25L * max_term && (long double)k * ((long double)nu + k) > x)
      break;
  }
  *s_out = (double)sum;
  // S(u) = sum_k c_k x^k with x = u^2/4:  dS/du = (u/2) sum_k k c_k x^{k-1}
  if (ds_out) *ds_out = (u == 0.0) ? 0.0 : (double)(dsum * 2.0L / (long double)u);
}

bool series_zone(double nu, double u) {
  return u <= std::fmax(12.0, 2.0 * std::sqrt(nu + 1.0));
}

// log(|J_nu(u)|) and sign via the series; only valid in the series zone.
void series_log_j(double nu, double u, double* log_abs, double* sign) {
  double s;
  scaled_series(nu, u, &s, nullptr);
  if (s == 0.0) {
    *log_abs = -std::numeric_limits<double>::infinity();
    *sign = 0.0;
    return;
  }
  *log_abs = nu * std::log(u / 2.0) - lgamma_pos(nu + 1.0) + std::log(std::fabs(s));
  *sign = (s > 0.0) ? 1.0 : -1.0;
}

double bessel_miller(double nu, double u) {
  // anchor order: first order in the chain nu + k safely below its turning
  // point (u^2/4 <= anchor - 4 keeps the series terms strictly decreasing)
  const double need = u * u / 4.0 + 5.0;
  const int offset_anchor = (int)std::ceil(std::fmax(0.0, need - nu));
  const int start = offset_anchor + 50;  // extra orders purify the recurrence
  const double kRescale = 1e250;
  const double kLogRescale = std::log(kRescale);

  long double jp = 0.0L;       // J~ at order nu + k + 1
  long double jc = 1e-280L;    // J~ at order nu + k
  double logscale = 0.0;       // actual = stored * exp(logscale)
  double anchor_log = 0.0, anchor_sign = 1.0;
  bool have_anchor = false;
  for (int k = start; k >= 1; --k) {
    const long double order = (long double)nu + k;
    long double jm = (2.0L * order / (long double)u) * jc - jp;
    jp = jc;
    jc = jm;
    if (fabsl(jc) > (long double)kRescale) {
      jc /= (long double)kRescale;
      jp /= (long double)kRescale;
      logscale += kLogRescale;
    }
    const int reached = k - 1;  // jc now holds order nu + reached
    if (!have_anchor && reached == offset_anchor) {
      anchor_log = std::log(std::fabs((double)jc)) + logscale;
      anchor_sign = (jc >= 0.0L) ? 1.0 : -1.0;
      have_anchor = true;
    }
  }
  const double end_log = std::log(std::fabs((double)jc)) + logscale;
  const double end_sign = (jc >= 0.0L) ? 1.0 : -1.0;

  double ref_log, ref_sign;
  series_log_j(nu + offset_anchor, u, &ref_log, &ref_sign);
  const double log_j = end_log - anchor_log + ref_log;
  const double sign = end_sign * anchor_sign * ref_sign;
  if (log_j < std::log(std::numeric_limits<double>::min()) + 2.0) return 0.0;
  return sign * std::exp(log_j);
}

}  // namespace

double bessel_scaled_series(double nu, double u) {
  double s;
  scaled_series(nu, u, &s, nullptr);
  return s;
}

double bessel_j(double nu, double u) {
  if (!(nu >= 0.0) || !(u >= 0.0) || !std::isfinite(nu) || !std::isfinite(u))
    throw std::invalid_argument("bessel_j: need nu >= 0 and u >= 0");
  if (u == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  if (series_zone(nu, u)) {
    double s;
    scaled_series(nu, u, &s, nullptr);
    const double lg = nu * std::log(u / 2.0) - lgamma_pos(nu + 1.0);
    if (lg < std::log(std::numeric_limits<double>::min()) + 2.0) {
      // prefactor underflows; combine in log space to save what can be saved
      if (s == 0.0) return 0.0;
      const double total = lg + std::log(std::fabs(s));
      if (total < std::log(std::numeric_limits<double>::min()) + 2.0) return 0.0;
      return (s > 0.0 ? 1.0 : -1.0) * std::exp(total);
    }
    return std::exp(lg) * s;
  }
  return bessel_miller(nu, u);
}

namespace {

// Generic first positive root of f with f(1e-3) > 0: 0.1-step grid bracket,
// bisection to 1e-13 relative, two Newton polishing steps.
template <typename F, typename DF>
double first_root(F f, DF df, const char* what) {
  double a = 1e-3;
  double fa = f(a);
  if (!(fa > 0.0))
    throw std::runtime_error(std::string(what) + ": unexpected sign near 0");
  double b = a, fb = fa;
  for (int i = 0; i < 4000; ++i) {
    b = a + 0.1;
    fb = f(b);
    if (fa * fb <= 0.0) break;
    a = b;
    fa = fb;
  }
  if (fa * fb > 0.0)
    throw std::runtime_error(std::string(what) + ": no sign change found");
  for (int i = 0; i < 200; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fa * fm <= 0.0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
    if (b - a <= 1e-13 * std::fmax(1.0, std::fabs(m))) break;
  }
  double x = 0.5 * (a + b);
  for (int i = 0; i < 2; ++i) {
    const double d = df(x);
    if (d == 0.0) break;
    const double step = f(x) / d;
    const double xn = x - step;
    if (xn > a - (b - a) && xn < b + (b - a)) x = xn;
  }
  return x;
}

}  // namespace

double neumann_ball_root(int d) {
  if (d < 2) throw std::invalid_argument("neumann_ball_root: need dim >= 2");
  const double s = d / 2.0;
  // u J_{s-1}(u) - (2s-1) J_s(u) = c(u) * u * [S_{s-1}(u) - (1 - 1/(2s)) S_s(u)]
  // with c(u) > 0, so bracket on the scaled bracket expression.
  const double w = 1.0 - 1.0 / (2.0 * s);
  auto f = [&](double u) {
    return bessel_scaled_series(s - 1.0, u) - w * bessel_scaled_series(s, u);
  };
  auto df = [&](double u) {
    double s1, ds1, s2, ds2;
    scaled_series(s - 1.0, u, &s1, &ds1);
    scaled_series(s, u, &s2, &ds2);
    return ds1 - w * ds2;
  };
  return first_root(f, df, "neumann_ball_root");
}

double optimal_weight_root(int d) {
  if (d < 2) throw std::invalid_argument("optimal_weight_root: need dim >= 2");
  const double nu = d / 2.0 - 1.0;
  // J_nu(u) - u J_{nu+1}(u) = c(u) * [S_nu(u) - u^2/(2(nu+1)) S_{nu+1}(u)]
  auto f = [&](double u) {
    return bessel_scaled_series(nu, u) -
           u * u / (2.0 * (nu + 1.0)) * bessel_scaled_series(nu + 1.0, u);
  };
  auto df = [&](double u) {
    double s1, ds1, s2, ds2;
    scaled_series(nu, u, &s1, &ds1);
    scaled_series(nu + 1.0, u, &s2, &ds2);
    return ds1 - u / (nu + 1.0) * s2 - u * u / (2.0 * (nu + 1.0)) * ds2;
  };
  return first_root(f, df, "optimal_weight_root");
}

double inverse_normal_cdf(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("inverse_normal_cdf: need p in (0,1)");
  static const double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                              -2.759285104469687e+02, 1.383577518672690e+02,
                              -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                              -1.556989798598866e+02, 6.680131188771972e+01,
                              -1.328068155288572e+01};
  static const double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                              -2.400758277161838e+00, -2.549732539343734e+00,
                              4.374664141464968e+00,  2.938163982698783e+00};
  static const double e[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                              2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1.0 - plow;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((e[0] * q + e[1]) * q + e[2]) * q + e[3]) * q + 1.0);
  } else if (p <= phigh) {
    const double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((e[0] * q + e[1]) * q + e[2]) * q + e[3]) * q + 1.0);
  }
  // one Newton step on Phi(x) - p using erfc for full double accuracy
  const double err = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
  const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
  if (pdf > 0.0) x -= err / pdf;
  return x;
}

}  // namespace gap
