#include "gap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gap {

int tridiag_count_below(const SymTridiag& t, double x) {
  const std::size_t n = t.diag.size();
  int cnt = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sub = i > 0 ? t.off[i - 1] * t.off[i - 1] / d : 0.0;
    d = (t.diag[i] - x) - sub;
    if (d <= 0.0) {
      // an exact zero pivot is a crossing too; nudge it negative so the
      // recurrence stays finite and the inertia count stays exact
      if (d == 0.0) d = -1e-300;
      ++cnt;
    }
  }
  return cnt;
}

double tridiag_kth_eigenvalue(const SymTridiag& t, int k) {
  const std::size_t n = t.diag.size();
  if (n == 0 || k < 0 || (std::size_t)k >= n)
    throw std::invalid_argument("tridiag_kth_eigenvalue: bad index");
  double lo = t.diag[0], hi = t.diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::fabs(t.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::fabs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (tridiag_count_below(t, mid) >= k + 1)
      hi = mid;
    else
      lo = mid;
    if (hi - lo <= 1e-14 * std::fmax(1.0, std::fabs(mid))) break;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double fro2 = 0.0;
  for (double v : a) fro2 += v * v;
  const double stop = 1e-28 * std::fmax(fro2, 1e-300);
  for (int sweep = 0; sweep < 50; ++sweep) {
    double off2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off2 += 2.0 * at(i, j) * at(i, j);
    if (off2 <= stop) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p), aqq = at(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        const double sgn = tau >= 0.0 ? 1.0 : -1.0;
        const double t = sgn / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

PivotedCholesky pivoted_cholesky(std::vector<double> a, std::size_t n,
                                 double tol) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  std::vector<int> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = (int)i;
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::fmax(max_diag, at(i, i));
  const double cut = tol * std::fmax(max_diag, 1e-300);

  std::size_t r = 0;
  for (; r < n; ++r) {
    // pick the largest remaining diagonal
    std::size_t best = r;
    for (std::size_t i = r + 1; i < n; ++i)
      if (at(perm[i], perm[i]) > at(perm[best], perm[best])) best = i;
    std::swap(perm[r], perm[best]);
    const double piv = at(perm[r], perm[r]);
    if (!(piv > cut)) break;
    const double lrr = std::sqrt(piv);
    at(perm[r], perm[r]) = lrr;
    for (std::size_t i = r + 1; i < n; ++i)
      at(perm[i], perm[r]) /= lrr;
    // keep both symmetric copies current: pivot swaps reorder the tail, so a
    // later step may read this pair through either orientation
    for (std::size_t j = r + 1; j < n; ++j)
      for (std::size_t i = j; i < n; ++i) {
        const double v =
            at(perm[i], perm[j]) - at(perm[i], perm[r]) * at(perm[j], perm[r]);
        at(perm[i], perm[j]) = v;
        if (i != j) at(perm[j], perm[i]) = v;
      }
  }

  PivotedCholesky out;
  out.rank = r;
  out.perm.assign(perm.begin(), perm.begin() + r);
  out.l.assign(r * r, 0.0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      out.l[i * r + j] = at(perm[i], perm[j]);
  return out;
}

double generalized_smallest_eigenvalue(const std::vector<double>& a,
                                       const std::vector<double>& b,
                                       std::size_t n, double prune_tol,
                                       std::size_t* rank_used) {
  if (a.size() != n * n || b.size() != n * n)
    throw std::invalid_argument("generalized_smallest_eigenvalue: bad sizes");
  // equilibrate by D = diag(1/sqrt(b_ii)); same eigenvalues in exact
  // arithmetic, far better conditioning of the covariance Gram matrix
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double bi = b[i * n + i];
    d[i] = bi > 0.0 ? 1.0 / std::sqrt(bi) : 1.0;
  }
  std::vector<double> ae(n * n), be(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ae[i * n + j] = a[i * n + j] * d[i] * d[j];
      be[i * n + j] = b[i * n + j] * d[i] * d[j];
    }

  const PivotedCholesky pc = pivoted_cholesky(be, n, prune_tol);
  const std::size_t r = pc.rank;
  if (rank_used) *rank_used = r;
  if (r == 0)
    throw std::runtime_error(
        "generalized_smallest_eigenvalue: B is numerically zero");

  // C = L^{-1} A[perm,perm] L^{-T}; build via two triangular solves
  std::vector<double> ap(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      ap[i * r + j] = ae[(std::size_t)pc.perm[i] * n + pc.perm[j]];
  // X = L^{-1} Ap  (forward solve on each column)
  std::vector<double> x(r * r);
  for (std::size_t col = 0; col < r; ++col) {
    for (std::size_t i = 0; i < r; ++i) {
      double s = ap[i * r + col];
      for (std::size_t k = 0; k < i; ++k) s -= pc.l[i * r + k] * x[k * r + col];
      x[i * r + col] = s / pc.l[i * r + i];
    }
  }
  // C = X L^{-T}: solve C L^T = X, i.e. forward solve on each row
  std::vector<double> c(r * r);
  for (std::size_t row = 0; row < r; ++row) {
    for (std::size_t j = 0; j < r; ++j) {
      double s = x[row * r + j];
      for (std::size_t k = 0; k < j; ++k) s -= c[row * r + k] * pc.l[j * r + k];
      c[row * r + j] = s / pc.l[j * r + j];
    }
  }
  // symmetrize roundoff before Jacobi
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      const double m = 0.5 * (c[i * r + j] + c[j * r + i]);
      c[i * r + j] = c[j * r + i] = m;
    }
  return jacobi_eigenvalues(std::move(c), r).front();
}

}  // namespace gap
