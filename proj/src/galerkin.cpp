#include "gap/galerkin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gap/linalg.hpp"
#include "gap/quadrature.hpp"
#include "gap/special.hpp"

namespace gap {

namespace {

using Index = std::vector<int>;

void enumerate_rec(int d, int remaining, Index& cur, std::vector<Index>& out) {
  if ((int)cur.size() == d - 1) {
    for (int k = 0; k <= remaining; ++k) {
      cur.push_back(k);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  for (int k = 0; k <= remaining; ++k) {
    cur.push_back(k);
    enumerate_rec(d, remaining - k, cur, out);
    cur.pop_back();
  }
}

// all multi-indices with |alpha| <= max_degree, graded order
std::vector<Index> enumerate_indices(int d, int max_degree) {
  std::vector<Index> out;
  Index cur;
  enumerate_rec(d, max_degree, cur, out);
  std::sort(out.begin(), out.end(), [](const Index& a, const Index& b) {
    int sa = 0, sb = 0;
    for (int v : a) sa += v;
    for (int v : b) sb += v;
    if (sa != sb) return sa < sb;
    return a < b;
  });
  return out;
}

int total(const Index& a) {
  int s = 0;
  for (int v : a) s += v;
  return s;
}

// E[u^alpha] over the unit sphere (0 unless every exponent is even)
double sphere_moment(int d, const Index& a) {
  double lg = lgamma_pos(0.5 * d) - lgamma_pos(0.5 * d + 0.5 * total(a));
  for (int v : a) {
    if (v % 2 != 0) return 0.0;
    lg += lgamma_pos(0.5 * v + 0.5) - lgamma_pos(0.5);
  }
  return std::exp(lg);
}

double potential_at(const Potential& pot, const std::vector<double>& x) {
  if (std::holds_alternative<Uniform>(pot)) return 0.0;
  if (const auto* pp = std::get_if<ProductPotential>(&pot)) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += pp->marginals[i].value(x[i]);
    return s;
  }
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  return potential_value(pot, std::sqrt(r2));
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton on the recurrence
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::fabs(dt) < 1e-15) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

struct WeightedCloud {
  std::vector<double> pts;  // n * d
  std::vector<double> wts;  // n
};

// polar product quadrature over a 2D star-shaped body, one panel per
// quadrant so the |cos theta|^p kinks at the axes stay panel-internal
WeightedCloud star_cloud_2d(const Potential& pot, const Body& body,
                            int n_theta, int n_t) {
  std::vector<double> gx, gw;
  gauss_legendre(n_theta, gx, gw);
  std::vector<double> tx, tw;
  gauss_legendre(n_t, tx, tw);
  WeightedCloud cloud;
  for (int quad = 0; quad < 4; ++quad) {
    const double a = 0.5 * std::numbers::pi * quad;
    for (int i = 0; i < n_theta; ++i) {
      const double theta = a + 0.25 * std::numbers::pi * (gx[i] + 1.0);
      const double wth = gw[i] * 0.25 * std::numbers::pi;
      const std::vector<double> u = {std::cos(theta), std::sin(theta)};
      const double rb = ray_to_boundary(body, u);
      for (int j = 0; j < n_t; ++j) {
        const double t = 0.5 * (tx[j] + 1.0);
        const double wt = tw[j] * 0.5;
        const std::vector<double> x = {t * rb * u[0], t * rb * u[1]};
        cloud.pts.insert(cloud.pts.end(), x.begin(), x.end());
        cloud.wts.push_back(wth * wt * rb * rb * t *
                            std::exp(-potential_at(pot, x)));
      }
    }
  }
  return cloud;
}

// raw monomial sums over a weighted point cloud, one entry per index
std::vector<double> cloud_sums(const WeightedCloud& cloud, int d,
                               const std::vector<Index>& indices,
                               long long lo, long long hi) {
  int max_deg = 0;
  for (const auto& a : indices) max_deg = std::max(max_deg, total(a));
  std::vector<double> sums(indices.size(), 0.0);
  std::vector<double> powers((max_deg + 1) * d);
  for (long long s = lo; s < hi; ++s) {
    const double* x = &cloud.pts[s * d];
    for (int i = 0; i < d; ++i) {
      powers[i] = 1.0;
      for (int k = 1; k <= max_deg; ++k)
        powers[k * d + i] = powers[(k - 1) * d + i] * x[i];
    }
    const double w = cloud.wts[s];
    for (size_t m = 0; m < indices.size(); ++m) {
      double v = w;
      const Index& a = indices[m];
      for (int i = 0; i < d; ++i) v *= powers[a[i] * d + i];
      sums[m] += v;
    }
  }
  return sums;
}

GalerkinResult solve_from_oracle(const MomentFn& moment, int d, int degree) {
  const auto basis_all = enumerate_indices(d, degree);
  std::vector<Index> basis;
  for (const auto& a : basis_all)
    if (total(a) >= 1) basis.push_back(a);
  const size_t n = basis.size();
  std::map<Index, double> cache;
  auto mom = [&](Index a) {
    for (int v : a)
      if (v < 0) throw std::logic_error("galerkin: negative exponent");
    auto it = cache.find(a);
    if (it != cache.end()) return it->second;
    const double v = moment(a);
    cache.emplace(std::move(a), v);
    return v;
  };
  std::vector<double> a_mat(n * n), b_mat(n * n);
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = j; k < n; ++k) {
      Index sum(d);
      for (int i = 0; i < d; ++i) sum[i] = basis[j][i] + basis[k][i];
      double grad = 0.0;
      for (int i = 0; i < d; ++i) {
        if (basis[j][i] == 0 || basis[k][i] == 0) continue;
        Index red = sum;
        red[i] -= 2;
        grad += basis[j][i] * basis[k][i] * mom(red);
      }
      const double cov = mom(sum) - mom(basis[j]) * mom(basis[k]);
      a_mat[j * n + k] = a_mat[k * n + j] = grad;
      b_mat[j * n + k] = b_mat[k * n + j] = cov;
    }
  }
  GalerkinResult res;
  std::size_t rank = 0;
  res.value = generalized_smallest_eigenvalue(a_mat, b_mat, n, 1e-12, &rank);
  res.basis_size = (int)n;
  res.basis_used = (int)rank;
  return res;
}

}  // namespace

GalerkinResult galerkin_from_moments(const MomentFn& moment, int d,
                                     int degree) {
  if (d < 1 || degree < 1)
    throw std::invalid_argument("galerkin_from_moments: need d, degree >= 1");
  return solve_from_oracle(moment, d, degree);
}

GalerkinResult galerkin_upper(const Potential& pot, const Body& body,
                              int degree, long long mc_samples,
                              unsigned long long seed, double trunc_radius) {
  const int d = dim(body);
  if (degree < 1) throw std::invalid_argument("galerkin_upper: degree >= 1");

  // closed-form moments: uniform ball
  if (const auto* ball = std::get_if<Ball>(&body)) {
    if (std::holds_alternative<Uniform>(pot)) {
      const double radius = ball->radius;
      return galerkin_from_moments(
          [d, radius](const Index& a) {
            const int k = total(a);
            if (k % 2 != 0) return 0.0;
            return std::pow(radius, k) * (d / (d + (double)k)) *
                   sphere_moment(d, a);
          },
          d, degree);
    }
  }

  // radial measures on balls/complements: sphere moment times radial ratio
  if (is_radial(pot) && (std::holds_alternative<Ball>(body) ||
                         std::holds_alternative<BallComplement>(body))) {
    std::map<int, double> radial;  // k -> m_k / m_0
    const double m0 = radial_density_moment(pot, body, 0, trunc_radius);
    auto ratio = [&](int k) {
      auto it = radial.find(k);
      if (it != radial.end()) return it->second;
      const double v = radial_density_moment(pot, body, k, trunc_radius) / m0;
      radial.emplace(k, v);
      return v;
    };
    return galerkin_from_moments(
        [&](const Index& a) {
          const int k = total(a);
          if (k % 2 != 0) return 0.0;
          return ratio(k) * sphere_moment(d, a);
        },
        d, degree);
  }

  // boxes: tensorized 1D moments (closed form or marginal quadrature)
  if (const auto* box = std::get_if<Box>(&body)) {
    const double half = box->half_width;
    if (std::holds_alternative<Uniform>(pot)) {
      return galerkin_from_moments(
          [half](const Index& a) {
            double v = 1.0;
            for (int e : a) {
              if (e % 2 != 0) return 0.0;
              v *= std::pow(half, e) / (e + 1.0);
            }
            return v;
          },
          d, degree);
    }
    if (const auto* pp = std::get_if<ProductPotential>(&pot)) {
      std::map<std::pair<int, int>, double> cache;  // (axis, power) -> raw
      auto axis_raw = [&](int i, int k) {
        const auto key = std::make_pair(i, k);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const auto& m = pp->marginals[i];
        const double v =
            integrate_adaptive(
                [&](double t) { return std::pow(t, k) * std::exp(-m.value(t)); },
                -half, half, 1e-12, 1e-14)
                .value;
        cache.emplace(key, v);
        return v;
      };
      return galerkin_from_moments(
          [&](const Index& a) {
            double v = 1.0;
            for (int i = 0; i < d; ++i)
              v *= axis_raw(i, a[i]) / axis_raw(i, 0);
            return v;
          },
          d, degree);
    }
  }

  // 2D: deterministic polar quadrature over the star-shaped body
  if (d == 2 && is_bounded(body)) {
    const WeightedCloud cloud = star_cloud_2d(pot, body, 96, 96);
    const auto indices = enumerate_indices(d, 2 * degree);
    const auto sums =
        cloud_sums(cloud, d, indices, 0, (long long)cloud.wts.size());
    std::map<Index, double> table;
    for (size_t m = 0; m < indices.size(); ++m)
      table[indices[m]] = sums[m] / sums[0];
    return galerkin_from_moments(
        [&table](const Index& a) { return table.at(a); }, d, degree);
  }

  // general bounded bodies: seeded Monte Carlo with block jackknife
  if (!is_bounded(body))
    throw std::domain_error("galerkin_upper: unbounded non-radial case");
  const double half = radii(body).r_bar;
  const auto indices = enumerate_indices(d, 2 * degree);
  const int blocks = 10;
  const long long per = std::max<long long>(mc_samples / blocks, 1000);
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> sums(blocks);
  std::vector<double> x(d);
  {
    WeightedCloud block_cloud;
    for (int b = 0; b < blocks; ++b) {
      block_cloud.pts.clear();
      block_cloud.wts.clear();
      for (long long s = 0; s < per; ++s) {
        for (int i = 0; i < d; ++i) {
          const double u = (double)(rng() >> 11) * 0x1.0p-53;
          x[i] = -half + 2.0 * half * u;
        }
        if (!contains(body, x)) continue;
        block_cloud.pts.insert(block_cloud.pts.end(), x.begin(), x.end());
        block_cloud.wts.push_back(std::exp(-potential_at(pot, x)));
      }
      sums[b] = cloud_sums(block_cloud, d, indices,
                           0, (long long)block_cloud.wts.size());
    }
  }
  auto solve_subset = [&](int skip) {
    std::vector<double> tot(indices.size(), 0.0);
    for (int b = 0; b < blocks; ++b) {
      if (b == skip) continue;
      for (size_t m = 0; m < indices.size(); ++m) tot[m] += sums[b][m];
    }
    if (!(tot[0] > 0.0))
      throw std::runtime_error("galerkin_upper: no Monte Carlo mass");
    std::map<Index, double> table;
    for (size_t m = 0; m < indices.size(); ++m)
      table[indices[m]] = tot[m] / tot[0];
    return galerkin_from_moments(
        [&table](const Index& a) { return table.at(a); }, d, degree);
  };
  GalerkinResult res = solve_subset(-1);
  std::vector<double> jack(blocks);
  double mean = 0.0;
  for (int b = 0; b < blocks; ++b) {
    jack[b] = solve_subset(b).value;
    mean += jack[b] / blocks;
  }
  double varsum = 0.0;
  for (int b = 0; b < blocks; ++b)
    varsum += (jack[b] - mean) * (jack[b] - mean);
  res.std_error = std::sqrt(varsum * (blocks - 1.0) / blocks);
  return res;
}

}  // namespace gap
