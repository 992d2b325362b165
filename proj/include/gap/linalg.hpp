#pragma once

#include <cstddef>
#include <vector>

// Dense/tridiagonal symmetric eigenvalue kernels. Everything is hand-rolled
// and deterministic: LDL^T Sturm-count bisection for tridiagonals (robust on
// the strongly graded matrices the radial solver produces) and cyclic Jacobi
// for the small dense problems (projected Hessians, Galerkin pencils).

namespace gap {

struct SymTridiag {
  std::vector<double> diag;  // size n
  std::vector<double> off;   // size n-1
};

// Number of eigenvalues strictly below x (LDL^T sign count).
int tridiag_count_below(const SymTridiag& t, double x);

// k-th smallest eigenvalue (k = 0 is the smallest), bisection on the count
// within Gershgorin bounds, to relative width 1e-14.
double tridiag_kth_eigenvalue(const SymTridiag& t, int k);

// Dense symmetric matrix in row-major order, n x n.
// Returns all eigenvalues sorted ascending. Cyclic Jacobi sweeps until the
// off-diagonal Frobenius mass is below 1e-28 * ||A||_F^2 (or 50 sweeps).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n);

// Pivoted Cholesky of a PSD matrix: returns the permutation (pivot order) and
// the rank r such that the leading r pivots are > tol * max(initial diag).
// On return, `a` holds the factor in pivoted order: L is lower triangular,
// stored in the first r columns of the permuted matrix.
struct PivotedCholesky {
  std::vector<double> l;     // r x r lower-triangular factor, row-major
  std::vector<int> perm;     // original indices of the kept pivots, size r
  std::size_t rank = 0;
};
PivotedCholesky pivoted_cholesky(std::vector<double> a, std::size_t n,
                                 double tol);

// Smallest generalized eigenvalue of (A, B) with B symmetric PSD: equilibrate,
// prune numerically dependent basis vectors by pivoted Cholesky of B, reduce
// to a standard problem and run Jacobi. Throws std::runtime_error if B prunes
// to nothing.
double generalized_smallest_eigenvalue(const std::vector<double>& a,
                                       const std::vector<double>& b,
                                       std::size_t n, double prune_tol = 1e-12,
                                       std::size_t* rank_used = nullptr);

}  // namespace gap
