#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "gap/linalg.hpp"

using namespace gap;

TEST_CASE("tridiagonal eigenvalues of the discrete Laplacian") {
  // diag 2, off -1, size n: eigenvalues 2 - 2 cos(k pi / (n+1))
  const int n = 25;
  SymTridiag t;
  t.diag.assign(n, 2.0);
  t.off.assign(n - 1, -1.0);
  for (int k : {0, 1, 2, 10, 24}) {
    CAPTURE(k);
    const double exact = 2.0 - 2.0 * std::cos((k + 1) * M_PI / (n + 1));
    CHECK(tridiag_kth_eigenvalue(t, k) == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("tridiagonal Sturm count is consistent with the spectrum") {
  SymTridiag t;
  t.diag = {1.0, 4.0, 2.0, -3.0};
  t.off = {0.5, -1.0, 2.0};
  std::vector<double> eig;
  for (int k = 0; k < 4; ++k) eig.push_back(tridiag_kth_eigenvalue(t, k));
  for (int k = 0; k < 3; ++k) CHECK(eig[k] <= eig[k + 1]);
  for (int k = 0; k < 4; ++k) {
    CHECK(tridiag_count_below(t, eig[k] - 1e-9) == k);
    CHECK(tridiag_count_below(t, eig[k] + 1e-9) == k + 1);
  }
  // trace invariant
  CHECK(eig[0] + eig[1] + eig[2] + eig[3] == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("Jacobi eigenvalues of a known 3x3") {
  // tridiag(1, 2, 1): spectrum 2, 2 +- sqrt(2)
  std::vector<double> a = {2, 1, 0, 1, 2, 1, 0, 1, 2};
  const auto eig = jacobi_eigenvalues(a, 3);
  REQUIRE(eig.size() == 3);
  CHECK(eig[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-13));
  CHECK(eig[1] == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(eig[2] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-13));
}

TEST_CASE("Jacobi leaves a diagonal matrix alone") {
  std::vector<double> a = {3, 0, 0, 0, -1, 0, 0, 0, 7};
  const auto eig = jacobi_eigenvalues(a, 3);
  CHECK(eig[0] == doctest::Approx(-1.0));
  CHECK(eig[1] == doctest::Approx(3.0));
  CHECK(eig[2] == doctest::Approx(7.0));
}

TEST_CASE("pivoted Cholesky detects rank and reconstructs") {
  // rank-2 PSD: A = v1 v1^T + v2 v2^T with v1 = (1,1,0), v2 = (0,1,2)
  std::vector<double> a = {1, 1, 0,
                           1, 2, 2,
                           0, 2, 4};
  const auto pc = pivoted_cholesky(a, 3, 1e-12);
  CHECK(pc.rank == 2);
  REQUIRE(pc.perm.size() == 2);
  // reconstruct the permuted principal block from the factor
  for (std::size_t i = 0; i < pc.rank; ++i) {
    for (std::size_t j = 0; j < pc.rank; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < pc.rank; ++k)
        s += pc.l[i * pc.rank + k] * pc.l[j * pc.rank + k];
      CHECK(s == doctest::Approx(a[pc.perm[i] * 3 + pc.perm[j]]).epsilon(1e-12));
    }
  }
}

TEST_CASE("generalized eigenvalue, identity mass matrix") {
  std::vector<double> a = {3, 1, 1, 3};   // eigenvalues 2 and 4
  std::vector<double> b = {1, 0, 0, 1};
  std::size_t rank = 0;
  CHECK(generalized_smallest_eigenvalue(a, b, 2, 1e-12, &rank) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(rank == 2);
}

TEST_CASE("generalized eigenvalue prunes a singular mass matrix") {
  // third basis vector duplicates the second: B is rank 2
  std::vector<double> a = {3, 1, 1,
                           1, 3, 3,
                           1, 3, 3};
  std::vector<double> b = {1, 0, 0,
                           0, 1, 1,
                           0, 1, 1};
  std::size_t rank = 0;
  const double lam = generalized_smallest_eigenvalue(a, b, 3, 1e-12, &rank);
  CHECK(rank == 2);
  // after pruning this is the pencil (A2, B2) with A2 = [[3,1],[1,3]] scaled
  // on the duplicated coordinate; smallest eigenvalue of the reduced problem
  std::vector<double> a2 = {3, 1, 1, 3};
  std::vector<double> b2 = {1, 0, 0, 1};
  CHECK(lam == doctest::Approx(generalized_smallest_eigenvalue(a2, b2, 2))
                   .epsilon(1e-10));
}

TEST_CASE("generalized eigenvalue scaling invariance") {
  // scaling B by c scales the eigenvalue by 1/c
  std::vector<double> a = {5, 2, 2, 3};
  std::vector<double> b = {2, 0.3, 0.3, 1};
  const double lam = generalized_smallest_eigenvalue(a, b, 2);
  std::vector<double> b4 = b;
  for (auto& v : b4) v *= 4.0;
  CHECK(generalized_smallest_eigenvalue(a, b4, 2) ==
        doctest::Approx(lam / 4.0).epsilon(1e-12));
}

TEST_CASE("generalized eigenvalue throws when B prunes to nothing") {
  std::vector<double> a = {1.0};
  std::vector<double> b = {0.0};
  CHECK_THROWS_AS(generalized_smallest_eigenvalue(a, b, 1), std::runtime_error);
}
