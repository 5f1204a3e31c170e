#include <doctest.h>

#include <cmath>

#include "toric/generators.hpp"
#include "toric/quantization.hpp"

using namespace toric;

namespace {

Polytope interval(int lo, int hi) {
  return Polytope::from_facets(1, {{{1}, Rational(lo)}, {{-1}, Rational(-hi)}});
}

Eigen::VectorXd vec(double a) { return Eigen::VectorXd::Constant(1, a); }

}  // namespace

TEST_CASE("bump generator validation") {
  auto p = interval(0, 4);
  CHECK_THROWS_AS(build_bump_generator(p, {{5.0, 0.5, 1.0, KernelKind::Smooth}}), InputError);
  CHECK_THROWS_AS(build_bump_generator(p, {{1.0, 0.5, 1.0, KernelKind::Smooth}, {1.5, 0.5, 1.0, KernelKind::Smooth}}),
                  InputError);
  CHECK_THROWS_AS(build_bump_generator(p, {{1.0, -0.5, 1.0, KernelKind::Smooth}}), InputError);
  CHECK_THROWS_AS(build_bump_generator(p, {{1.0, 0.5, 0.0, KernelKind::Smooth}}), InputError);
  CHECK_NOTHROW(build_bump_generator(p, {}));
}

TEST_CASE("multi-bump slope is a staircase of cumulative masses") {
  auto p = interval(0, 6);
  std::vector<BumpSpec> bumps{{1.0, 0.5, 1.0, KernelKind::CosineSquared},
                              {3.0, 0.25, 2.0, KernelKind::Smooth},
                              {5.0, 0.5, 0.5, KernelKind::CosineSquared}};
  auto gen = build_bump_generator(p, bumps);
  CHECK(gen->jet(vec(0.3)).grad[0] == 0.0);
  CHECK(gen->jet(vec(2.0)).grad[0] == doctest::Approx(1.0));
  CHECK(gen->jet(vec(4.0)).grad[0] == doctest::Approx(3.0));
  CHECK(gen->jet(vec(6.0)).grad[0] == doctest::Approx(3.5));
  // Convex with consistent derivatives.
  for (int i = 0; i <= 600; ++i) {
    double x = 0.01 * i;
    auto j = gen->jet(vec(x));
    CHECK(j.hess(0, 0) >= 0.0);
    if (x > 0.01 && x < 5.99) {
      double h = 1e-6;
      CHECK(j.grad[0] == doctest::Approx((gen->value(vec(x + h)) - gen->value(vec(x - h))) / (2 * h)).epsilon(1e-6));
    }
  }
  CHECK(gen->in_support(vec(3.1)));
  CHECK_FALSE(gen->in_support(vec(3.25)));
  CHECK(gen->ridges().size() == 9);
}

TEST_CASE("wall sum is a one-dimensional bump along its normal") {
  auto p = Polytope::from_facets(2, {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(-3)}});
  auto fr = face_frame(p, {{1, 1}}, {Rational(2)});
  auto gen = build_wall_sum(p, {{fr, {2.0, 0.25, 1.5, KernelKind::Smooth}}});
  Bump1D ref{2.0, 0.25, 1.5, KernelKind::Smooth};
  for (double a : {0.3, 0.9, 1.0, 1.1, 1.4}) {
    for (double b : {0.5, 0.8, 1.0}) {
      Eigen::Vector2d x(a, b);
      auto j = gen->jet(x);
      auto r = ref.eval(a + b);
      CHECK(j.value == doctest::Approx(r.value));
      CHECK(j.grad[0] == doctest::Approx(r.slope));
      CHECK(j.grad[1] == doctest::Approx(r.slope));
      CHECK(j.hess(0, 1) == doctest::Approx(r.curvature));
      CHECK(hessian_rank(j.hess) == (r.curvature > 1e-6 ? 1 : 0));
    }
  }
}

TEST_CASE("evaluation outside the polytope is an input error") {
  auto p = interval(0, 2);
  ZeroGenerator z(1);
  CHECK_THROWS_AS(eval_generator(z, p, vec(2.5)), InputError);
  CHECK_NOTHROW(eval_generator(z, p, vec(2.0)));
}

TEST_CASE("section densities: Beta oracle and value function bound") {
  for (int n = 1; n <= 3; ++n) {
    auto p = interval(0, n);
    auto zero = std::make_shared<ZeroGenerator>(1);
    for (int m = 0; m <= n; ++m) {
      SectionDensity sd(p, zero, vec(m), 0.0);
      double a = m / 2.0, b = (n - m) / 2.0;
      CHECK(std::exp(sd.log_integral()) ==
            doctest::Approx(std::pow(n, a + b + 1) * std::beta(a + 1, b + 1)).epsilon(1e-9));
    }
  }
  auto p = interval(0, 4);
  auto gen = build_bump_generator(p, {{1.0, 0.5, 2.0, KernelKind::Smooth}, {3.0, 0.5, 1.0, KernelKind::CosineSquared}});
  // psi(m) + f_m >= 0 everywhere (the tangent line at x lies below psi).
  for (int m = 0; m <= 4; ++m) {
    for (int i = 0; i <= 400; ++i) {
      double x = 0.01 * i;
      CHECK(gen->value(vec(m)) + f_m(*gen, vec(m), vec(x)) >= -1e-12);
    }
  }
  CHECK(minus_h0_m(p, vec(1.0), vec(1.0)) == doctest::Approx(0.5 * 3.0 * std::log(3.0)));
  CHECK(std::isinf(minus_h0_m(p, vec(1.0), vec(0.0))));
  CHECK(minus_h0_m(p, vec(0.0), vec(0.0)) == doctest::Approx(0.5 * (4.0 * std::log(4.0))));
}

TEST_CASE("normalized densities pair to one and respect the s cap") {
  auto p = interval(0, 2);
  auto gen = build_bump_generator(p, {{1.0, 0.5, 4.0, KernelKind::CosineSquared}});
  SectionDensity sd(p, gen, vec(1.0), 64.0);
  auto pr = sd.pair({[](const Eigen::VectorXd&) { return 1.0; }});
  CHECK(pr[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS(SectionDensity(p, gen, vec(1.0), 2e4));
  auto img = gcst_image(p, gen, {1}, 10.0);
  CHECK(img.log_coefficient == doctest::Approx(-10.0 * gen->value(vec(1.0))));
  CHECK_THROWS_AS(gcst_image(p, gen, {3}, 10.0), InputError);
  CHECK(basis_census(p).size() == 3);
}
