#include "gap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "gap/linalg.hpp"
#include "gap/special.hpp"

namespace gap {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

const std::vector<int>& primes_table() {
  static const std::vector<int> primes = [] {
    std::vector<int> out;
    for (int n = 2; (int)out.size() < 256; ++n) {
      bool ok = true;
      for (int p : out) {
        if (p * p > n) break;
        if (n % p == 0) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(n);
    }
    return out;
  }();
  return primes;
}

// deterministic unit directions: Halton -> inverse normal -> normalize
std::vector<double> halton_direction(long long index, int d) {
  const auto& primes = primes_table();
  std::vector<double> u(d);
  double n2 = 0.0;
  for (int j = 0; j < d; ++j) {
    const double h = halton(index, primes[j]);
    u[j] = inverse_normal_cdf(h);
    n2 += u[j] * u[j];
  }
  if (n2 == 0.0) {
    u[0] = 1.0;
    n2 = 1.0;
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (double& v : u) v *= inv;
  return u;
}

double orlicz_level(const Orlicz& o, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t i = 0; i < o.coords.size(); ++i) s += o.coords[i].value(x[i]);
  return s - 1.0;
}

Orlicz as_orlicz(const LpBall& b) {
  Orlicz o;
  o.box_bound = b.radius;
  o.coords.reserve(b.dim);
  for (int i = 0; i < b.dim; ++i) o.coords.push_back(power_coord(b.p, b.radius));
  return o;
}

// smallest eigenvalue of the second fundamental form at x on {sum U_i = 1}:
// project diag(U_i'') / |grad| onto the tangent space and run Jacobi
double orlicz_rho(const Orlicz& o, const std::vector<double>& x) {
  const int d = (int)o.coords.size();
  std::vector<double> g(d), h(d);
  double gn2 = 0.0;
  for (int i = 0; i < d; ++i) {
    g[i] = o.coords[i].deriv(x[i]);
    h[i] = o.coords[i].deriv2(x[i]);
    gn2 += g[i] * g[i];
  }
  const double gn = std::sqrt(gn2);
  if (!(gn > 0.0))
    throw std::domain_error("rho_at: vanishing boundary gradient");
  // Coordinates where the curvature blows up (e.g. |t|^p with p < 2 at t = 0)
  // force infinite normal curvature in any tangent direction that touches
  // them, so the minimum is attained within the finite-curvature coordinates.
  std::vector<int> keep;
  keep.reserve(d);
  for (int i = 0; i < d; ++i)
    if (std::isfinite(h[i])) keep.push_back(i);
  const int k = (int)keep.size();
  std::vector<double> eta(k);
  double en2 = 0.0;
  for (int a = 0; a < k; ++a) {
    eta[a] = g[keep[a]] / gn;
    en2 += eta[a] * eta[a];
  }
  int m;  // tangent dimension inside the finite-curvature subspace
  std::vector<double> v;
  if (en2 > 0.0) {
    // Householder vector mapping e_1 -> eta/|eta|; reflector columns 2..k
    // span the admissible tangent directions
    const double en = std::sqrt(en2);
    v = eta;
    for (double& c : v) c /= en;
    v[0] += (v[0] >= 0.0 ? 1.0 : -1.0);
    m = k - 1;
  } else {
    m = k;  // gradient lives entirely on the dropped coordinates
  }
  if (m == 0) return std::numeric_limits<double>::infinity();
  const double vn2 = v.empty() ? 1.0 : dot(v, v);
  std::vector<double> proj(m * m, 0.0);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      double s = 0.0;
      for (int i = 0; i < k; ++i) {
        double qa = (i == a + (v.empty() ? 0 : 1)) ? 1.0 : 0.0;
        double qb = (i == b + (v.empty() ? 0 : 1)) ? 1.0 : 0.0;
        if (!v.empty()) {
          qa -= 2.0 * v[i] * v[a + 1] / vn2;
          qb -= 2.0 * v[i] * v[b + 1] / vn2;
        }
        s += qa * (h[keep[i]] / gn) * qb;
      }
      proj[a * m + b] = proj[b * m + a] = s;
    }
  }
  return jacobi_eigenvalues(std::move(proj), m).front();
}

double boundary_tolerance(const Body&) {
  return 1e-8;  // all level functions here are O(1)-normalized
}

void require_on_boundary(double level, const Body& body) {
  if (std::fabs(level) > boundary_tolerance(body))
    throw std::invalid_argument("rho_at: point is not on the boundary");
}

}  // namespace

CoordFn power_coord(double p, double scale) {
  if (!(p >= 1.0) || !(scale > 0.0))
    throw std::invalid_argument("power_coord: need p >= 1, scale > 0");
  CoordFn f;
  f.form = "power";
  f.value = [p, scale](double t) { return std::pow(std::fabs(t) / scale, p); };
  f.deriv = [p, scale](double t) {
    if (t == 0.0) return 0.0;
    const double a = std::fabs(t) / scale;
    return (t > 0.0 ? 1.0 : -1.0) * p / scale * std::pow(a, p - 1.0);
  };
  f.deriv2 = [p, scale](double t) {
    if (t == 0.0) {
      if (p == 2.0) return 2.0 / (scale * scale);
      return p > 2.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    const double a = std::fabs(t) / scale;
    return p * (p - 1.0) / (scale * scale) * std::pow(a, p - 2.0);
  };
  if (p > 1.0) {
    f.deriv_inverse = [p, scale](double s) {
      if (s <= 0.0) return 0.0;
      return scale * std::pow(s * scale / p, 1.0 / (p - 1.0));
    };
  }
  return f;
}

CoordFn asym_power_coord(double p_plus, double p_minus, double scale) {
  if (!(p_plus >= 1.0) || !(p_minus >= 1.0) || !(scale > 0.0))
    throw std::invalid_argument("asym_power_coord: need exponents >= 1");
  CoordFn plus = power_coord(p_plus, scale);
  CoordFn minus = power_coord(p_minus, scale);
  CoordFn f;
  f.form = "asym_power";
  f.value = [plus, minus](double t) {
    return t >= 0.0 ? plus.value(t) : minus.value(t);
  };
  f.deriv = [plus, minus](double t) {
    return t >= 0.0 ? plus.deriv(t) : minus.deriv(t);
  };
  f.deriv2 = [plus, minus](double t) {
    return t >= 0.0 ? plus.deriv2(t) : minus.deriv2(t);
  };
  if (plus.deriv_inverse && minus.deriv_inverse) {
    f.deriv_inverse = [plus, minus](double s) {
      return s >= 0.0 ? plus.deriv_inverse(s) : -minus.deriv_inverse(-s);
    };
  }
  return f;
}

int dim(const Body& body) {
  return std::visit(
      [](const auto& b) -> int {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Orlicz>)
          return (int)b.coords.size();
        else
          return b.dim;
      },
      body);
}

bool is_convex(const Body& body) {
  return !std::holds_alternative<BallComplement>(body);
}

bool is_bounded(const Body& body) {
  return !std::holds_alternative<BallComplement>(body);
}

double halton(long long index, int base) {
  double f = 1.0, r = 0.0;
  long long i = index;
  while (i > 0) {
    f /= base;
    r += f * (double)(i % base);
    i /= base;
  }
  return r;
}

double ray_to_boundary(const Body& body, const std::vector<double>& u) {
  if (const auto* b = std::get_if<Ball>(&body)) return b->radius;
  if (const auto* b = std::get_if<BallComplement>(&body)) return b->radius;
  if (const auto* b = std::get_if<Box>(&body)) {
    double t = std::numeric_limits<double>::infinity();
    for (double ui : u)
      if (ui != 0.0) t = std::min(t, b->half_width / std::fabs(ui));
    return t;
  }
  const Orlicz o = std::holds_alternative<LpBall>(body)
                       ? as_orlicz(std::get<LpBall>(body))
                       : std::get<Orlicz>(body);
  const int d = (int)o.coords.size();
  auto level = [&](double t) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += o.coords[i].value(t * u[i]);
    return s - 1.0;
  };
  double lo = 0.0, hi = 1e-3;
  while (level(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("ray_to_boundary: ray never exits");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (level(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 1e-15 * hi) break;
  }
  return 0.5 * (lo + hi);
}

Radii radii(const Body& body) {
  if (const auto* b = std::get_if<Ball>(&body)) return {b->radius, b->radius};
  if (const auto* b = std::get_if<Box>(&body))
    return {b->half_width, b->half_width * std::sqrt((double)b->dim)};
  if (const auto* b = std::get_if<LpBall>(&body)) {
    const double e = 0.5 - 1.0 / b->p;
    const double lo = b->radius * std::pow((double)b->dim, std::min(0.0, e));
    const double hi = b->radius * std::pow((double)b->dim, std::max(0.0, e));
    return {lo, hi};
  }
  if (std::holds_alternative<BallComplement>(body))
    throw std::domain_error("radii: body is unbounded");

  // Orlicz: numeric. r_bar by the monotone support-point iteration
  // x <- argmax <x_k, .>, r_under by projected gradient descent on the ray
  // length t(u); both multi-started from axes, the diagonal and Halton
  // directions.
  const Orlicz& o = std::get<Orlicz>(body);
  const int d = (int)o.coords.size();
  std::vector<std::vector<double>> starts;
  for (int i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    starts.push_back(e);
    e[i] = -1.0;
    starts.push_back(e);
  }
  {
    std::vector<double> ones(d, 1.0 / std::sqrt((double)d));
    starts.push_back(ones);
    for (double& v : ones) v = -v;
    starts.push_back(ones);
  }
  for (int k = 1; k <= 32; ++k) starts.push_back(halton_direction(k, d));

  double r_bar = 0.0;
  for (const auto& s : starts) {
    std::vector<double> x(d);
    const double t0 = ray_to_boundary(body, s);
    for (int i = 0; i < d; ++i) x[i] = t0 * s[i];
    for (int it = 0; it < 300; ++it) {
      std::vector<double> xn = support_point(body, x);
      double step = 0.0;
      for (int i = 0; i < d; ++i) step += (xn[i] - x[i]) * (xn[i] - x[i]);
      x = std::move(xn);
      if (step <= 1e-26 * std::fmax(1.0, dot(x, x))) break;
    }
    r_bar = std::fmax(r_bar, norm2(x));
  }

  auto ray_len = [&](const std::vector<double>& u) {
    return ray_to_boundary(body, u);
  };
  double r_under = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    std::vector<double> u = s;
    double t = ray_len(u);
    for (int it = 0; it < 400; ++it) {
      // implicit gradient of t(u) projected on the sphere tangent
      std::vector<double> g(d);
      double sden = 0.0;
      for (int i = 0; i < d; ++i) {
        g[i] = o.coords[i].deriv(t * u[i]);
        sden += u[i] * g[i];
      }
      if (!(sden > 0.0)) break;
      std::vector<double> grad(d);
      const double gu = dot(g, u);
      double gn2 = 0.0;
      for (int i = 0; i < d; ++i) {
        grad[i] = -(t / sden) * (g[i] - gu * u[i]);
        gn2 += grad[i] * grad[i];
      }
      if (gn2 <= 1e-26 * t * t) break;
      double step = 0.5;
      bool moved = false;
      for (int ls = 0; ls < 40; ++ls) {
        std::vector<double> un(d);
        double n2 = 0.0;
        for (int i = 0; i < d; ++i) {
          un[i] = u[i] - step * grad[i];
          n2 += un[i] * un[i];
        }
        const double inv = 1.0 / std::sqrt(n2);
        for (double& v : un) v *= inv;
        const double tn = ray_len(un);
        if (tn < t - 1e-18 * t) {
          u = std::move(un);
          t = tn;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
    r_under = std::fmin(r_under, t);
  }
  return {r_under, r_bar};
}

double diameter(const Body& body) {
  if (const auto* b = std::get_if<Ball>(&body)) return 2.0 * b->radius;
  if (const auto* b = std::get_if<Box>(&body))
    return 2.0 * b->half_width * std::sqrt((double)b->dim);
  if (std::holds_alternative<LpBall>(body))
    return 2.0 * radii(body).r_bar;  // centrally symmetric
  if (std::holds_alternative<BallComplement>(body))
    throw std::domain_error("diameter: body is unbounded");

  // diameter = max_{|v|=1} h(v) + h(-v); ascend by v <- (x+ - x-)/|x+ - x-|,
  // which monotonically increases the objective; multi-start
  const Orlicz& o = std::get<Orlicz>(body);
  const int d = (int)o.coords.size();
  std::vector<std::vector<double>> starts;
  for (int i = 0; i < d; ++i) {
    std::vector<double> e(d, 0.0);
    e[i] = 1.0;
    starts.push_back(e);
  }
  {
    std::vector<double> ones(d, 1.0 / std::sqrt((double)d));
    starts.push_back(ones);
  }
  for (int k = 1; k <= 16; ++k) starts.push_back(halton_direction(k, d));
  double best = 0.0;
  for (auto v : starts) {
    for (int it = 0; it < 300; ++it) {
      const std::vector<double> xp = support_point(body, v);
      std::vector<double> vm(d);
      for (int i = 0; i < d; ++i) vm[i] = -v[i];
      const std::vector<double> xm = support_point(body, vm);
      std::vector<double> diff(d);
      for (int i = 0; i < d; ++i) diff[i] = xp[i] - xm[i];
      const double len = norm2(diff);
      best = std::fmax(best, len);
      if (len == 0.0) break;
      double delta = 0.0;
      for (int i = 0; i < d; ++i) {
        const double nv = diff[i] / len;
        delta += (nv - v[i]) * (nv - v[i]);
        v[i] = nv;
      }
      if (delta <= 1e-28) break;
    }
  }
  return best;
}

VolumeEstimate volume(const Body& body, long long n, unsigned long long seed) {
  VolumeEstimate out;
  if (const auto* b = std::get_if<Ball>(&body)) {
    out.value = std::exp(0.5 * b->dim * std::log(M_PI) +
                         b->dim * std::log(b->radius) -
                         lgamma_pos(0.5 * b->dim + 1.0));
    return out;
  }
  if (const auto* b = std::get_if<Box>(&body)) {
    out.value = std::pow(2.0 * b->half_width, (double)b->dim);
    return out;
  }
  if (std::holds_alternative<BallComplement>(body))
    throw std::domain_error("volume: body is unbounded");

  const Orlicz o = std::holds_alternative<LpBall>(body)
                       ? as_orlicz(std::get<LpBall>(body))
                       : std::get<Orlicz>(body);
  const int d = (int)o.coords.size();
  const double R = o.box_bound;
  std::mt19937_64 rng(seed);
  auto unit = [&]() {  // bit-exact uniform in [0,1)
    return (double)(rng() >> 11) * 0x1.0p-53;
  };
  long long hits = 0;
  std::vector<double> x(d);
  for (long long k = 0; k < n; ++k) {
    for (int i = 0; i < d; ++i) x[i] = R * (2.0 * unit() - 1.0);
    if (orlicz_level(o, x) <= 0.0) ++hits;
  }
  const double box_vol = std::pow(2.0 * R, (double)d);
  const double p = (double)hits / (double)n;
  out.value = box_vol * p;
  out.std_error = box_vol * std::sqrt(std::fmax(p * (1.0 - p), 0.0) / (double)n);
  out.samples = n;
  return out;
}

double rho_at(const Body& body, const std::vector<double>& x) {
  const int d = dim(body);
  if ((int)x.size() != d) throw std::invalid_argument("rho_at: wrong dimension");
  if (const auto* b = std::get_if<Ball>(&body)) {
    require_on_boundary(norm2(x) / b->radius - 1.0, body);
    return 1.0 / b->radius;
  }
  if (const auto* b = std::get_if<BallComplement>(&body)) {
    require_on_boundary(norm2(x) / b->radius - 1.0, body);
    return -1.0 / b->radius;
  }
  if (const auto* b = std::get_if<Box>(&body)) {
    int on_faces = 0;
    double level = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < d; ++i) {
      const double s = std::fabs(x[i]) / b->half_width - 1.0;
      level = std::fmax(level, s);
      if (std::fabs(s) <= boundary_tolerance(body)) ++on_faces;
    }
    require_on_boundary(level, body);
    if (on_faces != 1)
      throw std::domain_error("rho_at: box edges/corners are not smooth");
    return 0.0;
  }
  const Orlicz o = std::holds_alternative<LpBall>(body)
                       ? as_orlicz(std::get<LpBall>(body))
                       : std::get<Orlicz>(body);
  require_on_boundary(orlicz_level(o, x), body);
  return orlicz_rho(o, x);
}

std::vector<BoundaryPoint> sample_boundary(const Body& body, int n) {
  const int d = dim(body);
  std::vector<BoundaryPoint> out;
  out.reserve(n);
  if (const auto* b = std::get_if<Box>(&body)) {
    // cycle faces, Halton in the face interior
    const auto& primes = primes_table();
    for (int k = 1; k <= n; ++k) {
      const int face = (k - 1) % (2 * d);
      const int axis = face / 2;
      const double sgn = (face % 2 == 0) ? 1.0 : -1.0;
      BoundaryPoint bp;
      bp.x.assign(d, 0.0);
      bp.eta.assign(d, 0.0);
      int slot = 0;
      for (int i = 0; i < d; ++i) {
        if (i == axis) continue;
        const double h = halton(k, primes[slot++]);
        bp.x[i] = b->half_width * (2.0 * h - 1.0) * (1.0 - 1e-9);
      }
      bp.x[axis] = sgn * b->half_width;
      bp.eta[axis] = sgn;
      bp.rho = 0.0;
      out.push_back(std::move(bp));
    }
    return out;
  }
  const bool complement = std::holds_alternative<BallComplement>(body);
  for (int k = 1; k <= n; ++k) {
    std::vector<double> u = halton_direction(k, d);
    const double t = ray_to_boundary(body, u);
    BoundaryPoint bp;
    bp.x.resize(d);
    for (int i = 0; i < d; ++i) bp.x[i] = t * u[i];
    if (const auto* b = std::get_if<Ball>(&body)) {
      bp.eta = u;
      bp.rho = 1.0 / b->radius;
    } else if (complement) {
      bp.eta.resize(d);
      for (int i = 0; i < d; ++i) bp.eta[i] = -u[i];
      bp.rho = -1.0 / std::get<BallComplement>(body).radius;
    } else {
      const Orlicz o = std::holds_alternative<LpBall>(body)
                           ? as_orlicz(std::get<LpBall>(body))
                           : std::get<Orlicz>(body);
      bp.eta.resize(d);
      double gn = 0.0;
      for (int i = 0; i < d; ++i) {
        bp.eta[i] = o.coords[i].deriv(bp.x[i]);
        gn += bp.eta[i] * bp.eta[i];
      }
      gn = std::sqrt(gn);
      for (double& v : bp.eta) v /= gn;
      bp.rho = orlicz_rho(o, bp.x);
    }
    out.push_back(std::move(bp));
  }
  return out;
}

double rho_min(const Body& body, int n_samples) {
  if (const auto* b = std::get_if<Ball>(&body)) return 1.0 / b->radius;
  if (std::holds_alternative<Box>(body)) return 0.0;
  if (const auto* b = std::get_if<BallComplement>(&body)) return -1.0 / b->radius;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& bp : sample_boundary(body, n_samples))
    best = std::fmin(best, bp.rho);
  return best;
}

bool contains(const Body& body, const std::vector<double>& x) {
  if ((int)x.size() != dim(body))
    throw std::invalid_argument("contains: wrong dimension");
  const double tol = 1e-12;
  if (const auto* b = std::get_if<Ball>(&body))
    return norm2(x) <= b->radius * (1.0 + tol);
  if (const auto* b = std::get_if<Box>(&body)) {
    for (double c : x)
      if (std::fabs(c) > b->half_width * (1.0 + tol)) return false;
    return true;
  }
  if (const auto* b = std::get_if<BallComplement>(&body))
    return norm2(x) >= b->radius * (1.0 - tol);
  const Orlicz o = std::holds_alternative<LpBall>(body)
                       ? as_orlicz(std::get<LpBall>(body))
                       : std::get<Orlicz>(body);
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += o.coords[i].value(x[i]);
  return s <= 1.0 + tol;
}

std::vector<double> support_point(const Body& body,
                                  const std::vector<double>& v) {
  const int d = dim(body);
  if ((int)v.size() != d)
    throw std::invalid_argument("support_point: wrong dimension");
  if (const auto* b = std::get_if<Ball>(&body)) {
    const double n = norm2(v);
    std::vector<double> x(d, 0.0);
    if (n > 0.0)
      for (int i = 0; i < d; ++i) x[i] = b->radius * v[i] / n;
    else
      x[0] = b->radius;
    return x;
  }
  if (const auto* b = std::get_if<Box>(&body)) {
    std::vector<double> x(d);
    for (int i = 0; i < d; ++i)
      x[i] = (v[i] >= 0.0 ? 1.0 : -1.0) * b->half_width;
    return x;
  }
  if (std::holds_alternative<BallComplement>(body))
    throw std::domain_error("support_point: body is unbounded");
  const Orlicz o = std::holds_alternative<LpBall>(body)
                       ? as_orlicz(std::get<LpBall>(body))
                       : std::get<Orlicz>(body);
  const double R = o.box_bound;
  // coordinate solve: x_i(lam) = clamp of U_i'(x) = v_i / lam on the correct
  // side; lam > 0 decreases sum U_i(x_i(lam))
  auto coord = [&](int i, double lam) {
    const double target = v[i] / lam;
    if (target == 0.0) return 0.0;
    if (o.coords[i].deriv_inverse) {
      const double t = o.coords[i].deriv_inverse(target);
      return std::clamp(t, -R, R);
    }
    double lo = 0.0, hi = (target > 0.0 ? R : -R);
    if (target > 0.0 ? (o.coords[i].deriv(hi) <= target)
                     : (o.coords[i].deriv(hi) >= target))
      return hi;
    for (int it = 0; it < 120; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double g = o.coords[i].deriv(mid);
      if (target > 0.0 ? (g < target) : (g > target))
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };
  auto excess = [&](double lam) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += o.coords[i].value(coord(i, lam));
    return s - 1.0;
  };
  double lam_hi = 1.0;
  while (excess(lam_hi) > 0.0 && lam_hi < 1e14) lam_hi *= 2.0;
  double lam_lo = lam_hi;
  while (excess(lam_lo) < 0.0 && lam_lo > 1e-14) lam_lo *= 0.5;
  if (excess(lam_lo) < 0.0) {
    // even tiny multipliers stay feasible: the body touches its box here
    std::vector<double> x(d);
    for (int i = 0; i < d; ++i) x[i] = coord(i, lam_lo);
    return x;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lam_lo + lam_hi);
    if (excess(mid) > 0.0)
      lam_lo = mid;
    else
      lam_hi = mid;
    if (lam_hi - lam_lo <= 1e-15 * lam_hi) break;
  }
  std::vector<double> x(d);
  const double lam = 0.5 * (lam_lo + lam_hi);
  for (int i = 0; i < d; ++i) x[i] = coord(i, lam);
  return x;
}

}  // namespace gap
