#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "gap/bounds.hpp"
#include "oracles.hpp"

using namespace gap;

TEST_CASE("diameter-based lower bound") {
  const auto b = payne_weinberger(Body{Ball{1.0, 3}}, Potential{Uniform{}});
  CHECK(b.kind == BoundKind::lower);
  CHECK(b.assumptions_ok);
  CHECK(b.value == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-13));

  // box of half width h in dimension d: diameter 2 h sqrt(d)
  const auto bx = payne_weinberger(Body{Box{1.0, 4}}, Potential{Uniform{}});
  CHECK(bx.value == doctest::Approx(M_PI * M_PI / 16.0).epsilon(1e-12));

  // requires convex and bounded; flagged otherwise
  const auto bc =
      payne_weinberger(Body{BallComplement{1.0, 5}}, Potential{RadialPower{2.0}});
  CHECK_FALSE(bc.assumptions_ok);
}

TEST_CASE("exact interval gap") {
  const auto b = exact_box_gap(1.0);
  CHECK(b.kind == BoundKind::exact);
  CHECK(b.value == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-15));
  CHECK(exact_box_gap(0.5).value ==
        doctest::Approx(M_PI * M_PI).epsilon(1e-15));
}

TEST_CASE("radial comparison bound on uniform balls is 2d/3R^2") {
  for (int d : {2, 3, 7, 25}) {
    CAPTURE(d);
    const auto b = corollary_radial(Potential{Uniform{}}, Body{Ball{1.0, d}});
    CHECK(b.assumptions_ok);
    CHECK(b.value == 2.0 * d / 3.0);  // exact arithmetic, no tolerance
  }
  const auto b2 = corollary_radial(Potential{Uniform{}}, Body{Ball{2.0, 3}});
  CHECK(b2.value == doctest::Approx(0.5).epsilon(1e-13));  // 2d / (3 R^2)
}

TEST_CASE("radial comparison bound for the Gaussian on the unit ball") {
  // V' / (r V'') = 1, so the interior supremum is 3 r^2 = 3 = boundary term
  const auto b = corollary_radial(Potential{RadialPower{2.0}}, Body{Ball{1.0, 4}});
  CHECK(b.assumptions_ok);
  CHECK(b.value == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("radial comparison flags flat directions") {
  // on an lp ball with p > 2 the sampled boundary includes axis points with
  // vanishing curvature: the constant is infinite and the bound is flagged
  const auto b = corollary_radial(Potential{Uniform{}}, Body{LpBall{4.0, 1.0, 2}});
  CHECK_FALSE(b.assumptions_ok);
}

TEST_CASE("exponential-weight bound on the uniform ball") {
  CHECK(ball_exp_weight_bound(3, 1.0).value == doctest::Approx(2.0));
  CHECK(ball_exp_weight_bound(5, 2.0).value == doctest::Approx(1.0));
  CHECK(ball_exp_weight_bound(5, 2.0).kind == BoundKind::lower);
}

TEST_CASE("variational upper bound") {
  // the ball attains its own reference value
  const auto b = weinberger_upper(Body{Ball{1.0, 3}});
  CHECK(b.kind == BoundKind::upper);
  CHECK(b.value == doctest::Approx(oracle::kBallGap3).epsilon(1e-12));
  // any other body of the same volume has a smaller gap than the ball of
  // equal volume, so the bound sits above the exact box value
  const auto bx = weinberger_upper(Body{Box{1.0, 2}});
  CHECK(bx.value >= M_PI * M_PI / 4.0);
  CHECK(bx.value ==
        doctest::Approx((M_PI / 4.0) * oracle::kBallGap2).epsilon(1e-9));
  CHECK_THROWS_AS(weinberger_upper(Body{BallComplement{1.0, 3}}),
                  std::domain_error);
}

TEST_CASE("two-sided comparison for uniform convex bodies") {
  // unit ball: 2d / (3(d+2)) times the exact ball gap
  const auto b = reverse_comparison(Body{Ball{1.0, 3}});
  CHECK(b.assumptions_ok);
  CHECK(b.value ==
        doctest::Approx(6.0 / 15.0 * oracle::kBallGap3).epsilon(1e-9));
  CHECK(b.value <= oracle::kBallGap3);
}

TEST_CASE("lp and orlicz product bound") {
  // q = inf U'' / |U'| = (p-1)/R for pure powers; value arctan(2Rq/pi)^2/R^2
  struct Case { double p; double ref; };
  for (const auto c : {Case{2.0, oracle::kOrliczP2}, Case{3.0, oracle::kOrliczP3},
                       Case{5.0, oracle::kOrliczP5}, Case{10.0, oracle::kOrliczP10},
                       Case{50.0, oracle::kOrliczP50}}) {
    CAPTURE(c.p);
    const auto b = orlicz_bound(Body{LpBall{c.p, 1.0, 2}});
    CHECK(b.assumptions_ok);
    CHECK(b.value == doctest::Approx(c.ref).epsilon(1e-8));
  }
  // dimension does not enter the formula
  CHECK(orlicz_bound(Body{LpBall{3.0, 1.0, 6}}).value ==
        doctest::Approx(oracle::kOrliczP3).epsilon(1e-8));
  // p = 1: U'' = 0, q = 0, the bound degenerates to zero but stays valid
  const auto b1 = orlicz_bound(Body{LpBall{1.0, 1.0, 2}});
  CHECK(b1.assumptions_ok);
  CHECK(b1.value == 0.0);
  CHECK_THROWS_AS(orlicz_bound(Body{Ball{1.0, 2}}), std::domain_error);
}

TEST_CASE("orlicz bound scales like 1/R^2 for p = 2") {
  // Gaussian-type gauge: q = 1/R, value arctan(2/pi)^2 / R^2
  const auto b = orlicz_bound(Body{LpBall{2.0, 2.0, 3}});
  CHECK(b.value == doctest::Approx(oracle::kOrliczP2 / 4.0).epsilon(1e-8));
}

TEST_CASE("two-regime bound for intermediate convexity") {
  // alpha = 2 on the unit ball: C = 1/3 and the bound is max(2d/3, 1/2)
  const auto b = subbotin_bound(2.0, 5, 1.0, 1.0);
  CHECK(b.assumptions_ok);
  CHECK(b.value == doctest::Approx(10.0 / 3.0).epsilon(1e-12));
  // alpha = 1.5, d = 4, unit ball: C = min(0.2, 1/3) = 0.2
  const auto s = subbotin_bound(1.5, 4, 1.0, 1.0);
  const double dim_branch =
      (1.5 / 4.0) * std::pow(0.5 / 0.5, 1.0 - 2.0 / 1.5) *
      std::pow(4.0, 1.0 - 2.0 / 1.5);
  CHECK(s.value == doctest::Approx(std::max(2.0 * 0.2 * 4.0, dim_branch))
                       .epsilon(1e-12));
  CHECK_THROWS_AS(subbotin_bound(1.0, 4, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(subbotin_bound(2.5, 4, 1.0, 1.0), std::domain_error);
}

TEST_CASE("Gaussian obstacle bound") {
  CHECK_THROWS_AS(gaussian_complement_bound(4, 1.0), std::domain_error);
  CHECK(gaussian_complement_bound(5, 1.0).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(gaussian_complement_bound(10, 3.0).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-13));  // min(6/9, 1/3)
  CHECK(gaussian_complement_bound(20, 10.0).value ==
        doctest::Approx(0.16).epsilon(1e-13));  // (d-4)/R^2
  CHECK(gaussian_complement_bound(5, 1.0).kind == BoundKind::lower);
}

TEST_CASE("obstacle baseline bound") {
  CHECK(bcgm_bound(20, 10.0).value == doctest::Approx(1.0 / 7.0).epsilon(1e-13));
  CHECK(bcgm_bound(5, 1.0).value == doctest::Approx(5.0 / 11.0).epsilon(1e-13));
}

TEST_CASE("exact ball gap against frozen references") {
  CHECK(exact_ball_gap(2, 1.0).value ==
        doctest::Approx(oracle::kBallGap2).epsilon(1e-13));
  CHECK(exact_ball_gap(3, 1.0).value ==
        doctest::Approx(oracle::kBallGap3).epsilon(1e-13));
  CHECK(exact_ball_gap(5, 1.0).value ==
        doctest::Approx(oracle::kBallGap5).epsilon(1e-13));
  CHECK(exact_ball_gap(10, 1.0).value ==
        doctest::Approx(oracle::kBallGap10).epsilon(1e-13));
  // scaling: gap(R) = gap(1) / R^2
  CHECK(exact_ball_gap(3, 2.0).value ==
        doctest::Approx(oracle::kBallGap3 / 4.0).epsilon(1e-13));
  CHECK(exact_ball_gap(3, 1.0).kind == BoundKind::exact);
}

TEST_CASE("optimal radial weight bound") {
  const auto b = optimal_radial_weight_gap(3, 1.0);
  CHECK(b.kind == BoundKind::lower);
  CHECK(b.value == doctest::Approx(M_PI * M_PI / 4.0).epsilon(1e-12));
  CHECK(optimal_radial_weight_gap(2, 1.0).value ==
        doctest::Approx(oracle::kOptimalWeightGap2).epsilon(1e-12));
  for (int d : {2, 3, 5, 10}) {
    CAPTURE(d);
    CHECK(optimal_radial_weight_gap(d, 1.0).value <=
          exact_ball_gap(d, 1.0).value + 1e-12);
  }
}

TEST_CASE("bound aggregation on the uniform ball") {
  const auto reps = best_bound(Potential{Uniform{}}, Body{Ball{1.0, 3}});
  REQUIRE(!reps.empty());
  bool saw_exact = false;
  double exact_value = 0.0;
  for (const auto& r : reps)
    if (r.kind == BoundKind::exact) {
      saw_exact = true;
      exact_value = r.value;
    }
  REQUIRE(saw_exact);
  // no certified lower bound may exceed the exact value
  for (const auto& r : reps)
    if (r.kind == BoundKind::lower && r.assumptions_ok)
      CHECK(r.value <= exact_value + 1e-12);
  // certified lower bounds come first, sorted best-first
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& r : reps) {
    if (!(r.kind == BoundKind::lower && r.assumptions_ok)) break;
    CHECK(r.value <= prev);
    prev = r.value;
  }
  // the best certified bound on the uniform ball is the weight optimum
  CHECK(reps.front().method == "optimal_radial_weight");
}

TEST_CASE("bound aggregation covers the obstacle case") {
  const auto reps =
      best_bound(Potential{RadialPower{2.0}}, Body{BallComplement{10.0, 20}});
  bool saw_main = false, saw_baseline = false;
  for (const auto& r : reps) {
    if (r.method == "gaussian_complement") saw_main = true;
    if (r.method == "bcgm") saw_baseline = true;
  }
  CHECK(saw_main);
  CHECK(saw_baseline);
}

TEST_CASE("bound aggregation on the uniform box includes the exact value") {
  const auto reps = best_bound(Potential{Uniform{}}, Body{Box{1.0, 2}});
  bool saw = false;
  for (const auto& r : reps)
    if (r.kind == BoundKind::exact &&
        r.value == doctest::Approx(M_PI * M_PI / 4.0))
      saw = true;
  CHECK(saw);
}
