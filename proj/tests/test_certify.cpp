#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "gap/bounds.hpp"
#include "gap/weights.hpp"
#include "oracles.hpp"

using namespace gap;

TEST_CASE("weight factories validate their parameters") {
  CHECK_THROWS_AS(radial_poly_weight(0.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_poly_weight(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_exp_power_weight(0.1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(radial_inverse_square_weight(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(per_coordinate_cos_weight(0.0), std::invalid_argument);
}

TEST_CASE("parabolic weight certifies 2d/3 on the uniform unit ball") {
  for (int d : {2, 3, 10}) {
    CAPTURE(d);
    const auto rep = certify_weight(Potential{Uniform{}}, Body{Ball{1.0, d}},
                                    radial_poly_weight(3.0));
    CHECK(rep.assumptions_ok);
    CHECK(rep.value == doctest::Approx(2.0 * d / 3.0).epsilon(1e-12));
    // boundary condition saturates exactly: 1/R + w'(R)/w(R) = 1 - 2/2 = 0
    CHECK(std::fabs(rep.diagnostics.at("boundary_margin")) < 1e-14);
  }
}

TEST_CASE("parabolic weight fails the boundary check when too narrow") {
  const auto rep = certify_weight(Potential{Uniform{}}, Body{Ball{1.0, 3}},
                                  radial_poly_weight(2.5));
  CHECK_FALSE(rep.assumptions_ok);
  CHECK(rep.diagnostics.at("boundary_margin") < 0.0);
}

TEST_CASE("weight must stay positive on the body") {
  // 0.5 - r^2 changes sign inside the unit ball
  CHECK_THROWS_AS(certify_weight(Potential{Uniform{}}, Body{Ball{1.0, 3}},
                                 radial_poly_weight(0.5)),
                  std::domain_error);
}

TEST_CASE("identity weight reduces to the convexity bound") {
  const auto rep = certify_weight(Potential{RadialPower{2.0}},
                                  Body{Ball{1.0, 3}}, IdentityWeight{});
  CHECK(rep.assumptions_ok);
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inverse-square weight certifies the Gaussian obstacle bound") {
  for (int d : {5, 6, 9, 13, 20}) {
    for (double R : {1.0, 3.0, 10.0}) {
      CAPTURE(d);
      CAPTURE(R);
      const auto rep = certify_weight(
          Potential{RadialPower{2.0}}, Body{BallComplement{R, d}},
          radial_inverse_square_weight(1.0 / (R * R)));
      CHECK(rep.assumptions_ok);
      CHECK(rep.diagnostics.at("boundary_margin") >= -1e-12);
      // the grid certificate always dominates the closed-form bound
      const double closed = gaussian_complement_bound(d, R).value;
      CHECK(rep.value >= closed - 1e-9);
      // the interior dip bottoms out at the obstacle when 3(d-4) <= R^2;
      // there the certificate equals (d-4)/R^2 exactly
      if (3.0 * (d - 4) <= R * R)
        CHECK(rep.value == doctest::Approx((d - 4.0) / (R * R)).epsilon(1e-9));
    }
  }
}

TEST_CASE("interior branches match the closed obstacle formula") {
  // Gaussian outside the R-ball with weight 1/R^2 + r^-2: both eigenvalue
  // branches equal 1 + 2 R^2 (d - 4 - r^2) / (r^2 (r^2 + R^2))
  std::mt19937 rng(7);
  for (int d : {6, 13}) {
    for (double R : {1.0, 3.0}) {
      const WeightSpec w = radial_inverse_square_weight(1.0 / (R * R));
      std::uniform_real_distribution<double> u(R, R + 10.0);
      for (int k = 0; k < 50; ++k) {
        const double r = u(rng);
        CAPTURE(d);
        CAPTURE(R);
        CAPTURE(r);
        const auto br =
            certify_interior_branches(Potential{RadialPower{2.0}}, w, d, r);
        const double ref =
            1.0 + 2.0 * R * R * (d - 4.0 - r * r) / (r * r * (r * r + R * R));
        CHECK(br.radial == doctest::Approx(ref).epsilon(1e-10));
        CHECK(br.tangential == doctest::Approx(ref).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("interior branches agree with finite differences of the weight") {
  // independent reconstruction of the branch formulas from w alone
  const Potential pot{RadialPower{1.5}};
  const WeightSpec spec = radial_exp_power_weight(0.12, 1.5);
  const auto& w = std::get<RadialScalarWeight>(spec);
  const int d = 4;
  for (double r : {0.3, 0.8, 1.7}) {
    CAPTURE(r);
    const double h = 1e-5;
    const double w0 = w.w(r);
    const double d1 = oracle::fd1(w.w, r, h);
    const double d2 = oracle::fd2(w.w, r, h);
    const double vp = potential_deriv(pot, r);
    const double tail = -(d2 + ((d - 1.0) / r - vp) * d1) / w0;
    const auto br = certify_interior_branches(pot, spec, d, r);
    CHECK(br.radial ==
          doctest::Approx(potential_deriv2(pot, r) + tail).epsilon(1e-5));
    CHECK(br.tangential == doctest::Approx(vp / r + tail).epsilon(1e-5));
  }
}

TEST_CASE("stretched-exponential weight certifies the dimension branch") {
  for (double alpha : {1.2, 1.5, 2.0}) {
    for (int d : {4, 16}) {
      CAPTURE(alpha);
      CAPTURE(d);
      const double eps = (alpha - 1.0) / (2.0 * (d + alpha - 2.0));
      const auto rep =
          certify_weight(Potential{RadialPower{alpha}}, Body{Ball{1.0, d}},
                         radial_exp_power_weight(eps, alpha));
      CHECK(rep.assumptions_ok);
      CHECK(rep.value > 0.0);
      // the closed-form analysis keeps only the dimension branch of what
      // this weight certifies; the grid value must dominate it
      const double branch =
          subbotin_bound(alpha, d, 1.0, 1.0).diagnostics.at("dimension_branch");
      CHECK(rep.value >= branch - 1e-9);
    }
  }
}

TEST_CASE("per-coordinate cosine weight reproduces the product bound") {
  const Body body{LpBall{3.0, 1.0, 2}};
  const auto product = orlicz_bound(body);
  // beta chosen so the interior term equals the product bound exactly
  const double beta = std::sqrt(product.value);
  const auto rep = certify_weight(Potential{Uniform{}}, body,
                                  per_coordinate_cos_weight(beta));
  CHECK(rep.assumptions_ok);
  CHECK(rep.value == doctest::Approx(product.value).epsilon(1e-12));
}

TEST_CASE("certificate path restrictions") {
  // per-coordinate weights need a product structure, not a round ball
  CHECK_THROWS_AS(certify_weight(Potential{Uniform{}}, Body{Ball{1.0, 2}},
                                 per_coordinate_cos_weight(0.5)),
                  std::domain_error);
  // product potentials only support the identity weight
  const ProductPotential pp{{power_coord(2.0, 1.0), power_coord(2.0, 1.0)}};
  CHECK_THROWS_AS(certify_weight(Potential{pp}, Body{Box{1.0, 2}},
                                 radial_poly_weight(3.0)),
                  std::domain_error);
  const auto ok = certify_weight(Potential{pp}, Body{Box{1.0, 2}},
                                 IdentityWeight{});
  CHECK(ok.assumptions_ok);
  CHECK(ok.value == doctest::Approx(2.0).epsilon(1e-9));
}
