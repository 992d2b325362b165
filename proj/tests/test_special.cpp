#include <cmath>

#include <doctest.h>

#include "gap/special.hpp"
#include "oracles.hpp"

using namespace gap;

TEST_CASE("lgamma_pos agrees with the standard library") {
  for (double z : {0.25, 0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 50.5, 171.0}) {
    CAPTURE(z);
    CHECK(lgamma_pos(z) == doctest::Approx(std::lgamma(z)).epsilon(1e-14));
  }
  CHECK(tgamma_pos(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(tgamma_pos(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  CHECK_THROWS_AS(tgamma_pos(0.0), std::invalid_argument);
  CHECK_THROWS_AS(tgamma_pos(-1.5), std::invalid_argument);
}

TEST_CASE("bessel_j matches an independent power series on a sweep") {
  for (double nu : {0.0, 0.5, 1.0, 2.5, 7.0}) {
    for (double x = 0.1; x <= 11.0; x += 0.7) {
      CAPTURE(nu);
      CAPTURE(x);
      const double ref = oracle::bessel_series(nu, x);
      CHECK(bessel_j(nu, x) == doctest::Approx(ref).epsilon(2e-13));
    }
  }
  CHECK(bessel_j(0.0, 0.0) == 1.0);
  CHECK(bessel_j(1.0, 0.0) == 0.0);
}

TEST_CASE("bessel_j frozen spot values beyond the series zone") {
  CHECK(bessel_j(1.0, 1.0) ==
        doctest::Approx(oracle::kJ1At1).epsilon(1e-14));
  CHECK(bessel_j(0.0, 30.0) ==
        doctest::Approx(oracle::kJ0At30).epsilon(1e-12));
  CHECK(bessel_j(2.5, 25.0) ==
        doctest::Approx(oracle::kJ2p5At25).epsilon(1e-12));
}

TEST_CASE("scaled series normalization") {
  // S_nu(0) = 1, and J recovers from S by the prefactor
  CHECK(bessel_scaled_series(3.2, 0.0) == 1.0);
  const double nu = 1.5, x = 4.0;
  const double s = bessel_scaled_series(nu, x);
  const double j = s * std::exp(nu * std::log(x / 2.0) - lgamma_pos(nu + 1.0));
  CHECK(j == doctest::Approx(oracle::bessel_series(nu, x)).epsilon(1e-13));
}

TEST_CASE("first Neumann root of the unit ball") {
  const double p2 = neumann_ball_root(2);
  CHECK(p2 == doctest::Approx(oracle::kNeumannRoot2).epsilon(1e-14));
  CHECK(p2 * p2 == doctest::Approx(oracle::kBallGap2).epsilon(1e-14));
  CHECK(std::pow(neumann_ball_root(3), 2) ==
        doctest::Approx(oracle::kBallGap3).epsilon(1e-13));
  CHECK(std::pow(neumann_ball_root(5), 2) ==
        doctest::Approx(oracle::kBallGap5).epsilon(1e-13));
  CHECK(std::pow(neumann_ball_root(10), 2) ==
        doctest::Approx(oracle::kBallGap10).epsilon(1e-13));
}

TEST_CASE("Neumann root satisfies its defining equation (series check)") {
  // u J_{d/2-1}(u) = (d-1) J_{d/2}(u); the series oracle is trustworthy for
  // the small dimensions where the root stays below ~8
  for (int d : {2, 3, 4, 5, 6, 7, 8}) {
    CAPTURE(d);
    const double p = neumann_ball_root(d);
    const double lhs = p * oracle::bessel_series(d / 2.0 - 1.0, p);
    const double rhs = (d - 1.0) * oracle::bessel_series(d / 2.0, p);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("Neumann gap squeeze across dimensions") {
  for (int d = 2; d <= 100; ++d) {
    CAPTURE(d);
    const double p = neumann_ball_root(d);
    CHECK(p * p >= d - 1);
    CHECK(p * p <= d + 2);
  }
}

TEST_CASE("optimal radial-weight root") {
  const double q2 = optimal_weight_root(2);
  CHECK(q2 * q2 == doctest::Approx(oracle::kOptimalWeightGap2).epsilon(1e-13));
  const double q3 = optimal_weight_root(3);
  CHECK(q3 * q3 == doctest::Approx(oracle::kOptimalWeightGap3).epsilon(1e-13));
  CHECK(q3 * q3 == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-13));
  // in d = 4 the weight root coincides with the d = 2 Neumann root
  CHECK(optimal_weight_root(4) ==
        doctest::Approx(oracle::kNeumannRoot2).epsilon(1e-12));
  // defining equation J_{d/2-1}(q) = q J_{d/2}(q) via the series oracle
  for (int d : {2, 3, 4, 5, 6}) {
    CAPTURE(d);
    const double q = optimal_weight_root(d);
    CHECK(oracle::bessel_series(d / 2.0 - 1.0, q) ==
          doctest::Approx(q * oracle::bessel_series(d / 2.0, q)).epsilon(1e-11));
  }
  // the certificate can never beat the true gap
  for (int d = 2; d <= 50; ++d) {
    CAPTURE(d);
    CHECK(std::pow(optimal_weight_root(d), 2) <=
          std::pow(neumann_ball_root(d), 2) + 1e-12);
  }
}

TEST_CASE("inverse normal CDF") {
  CHECK(inverse_normal_cdf(0.5) == doctest::Approx(0.0).epsilon(1e-15));
  // round trip against the erfc-based CDF
  auto cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
  for (double p : {1e-6, 1e-3, 0.1, 0.25, 0.5, 0.75, 0.9, 0.999, 1 - 1e-6}) {
    CAPTURE(p);
    CHECK(cdf(inverse_normal_cdf(p)) == doctest::Approx(p).epsilon(1e-12));
    // symmetry
    CHECK(inverse_normal_cdf(p) ==
          doctest::Approx(-inverse_normal_cdf(1.0 - p)).epsilon(1e-9));
  }
}
