#include <doctest.h>

#include <cmath>

#include "toric/smoothing.hpp"

using namespace toric;

namespace {

Polytope simplex(int n) {
  return Polytope::from_facets(2, {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(-n)}});
}

AffinePiece piece(int a, int b, int c) { return {{Rational(a), Rational(b)}, Rational(c)}; }

Eigen::VectorXd vec(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

// Independent oracle: convolution of max(0, t) with the normalized kernel
// of half-width r, by composite Simpson.
double hinge_oracle(double t, double r, KernelKind kind) {
  const auto& k = BumpKernel::get(kind);
  const int n = 4000;
  double h = 2.0 / n, s = 0.0;
  for (int i = 0; i <= n; ++i) {
    double u = -1.0 + i * h;
    double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * k.density(u) * std::max(0.0, t - r * u);
  }
  return s * h / 3.0;
}

}  // namespace

TEST_CASE("single wall smoothing is the mollified hinge") {
  auto p = simplex(3);
  auto d = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1)}), p);
  for (auto kind : {KernelKind::Smooth, KernelKind::CosineSquared}) {
    auto gen = build_nice_smoothing(d, 0.1, kind);
    CHECK(gen->directions() == 1);
    CHECK(gen->radius() == doctest::Approx(0.1));
    for (double x1 : {0.85, 0.95, 1.0, 1.03, 1.09, 1.2}) {
      CHECK(gen->value(vec(x1, 0.7)) == doctest::Approx(hinge_oracle(x1 - 1.0, 0.1, kind)).epsilon(1e-9));
    }
  }
}

TEST_CASE("two-direction smoothing has consistent derivatives") {
  auto p = simplex(3);
  auto d = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1), piece(0, 1, -1)}), p);
  auto gen = build_nice_smoothing(d, 0.1);
  CHECK(gen->directions() == 2);
  for (auto x : {vec(1.0, 1.0), vec(1.02, 0.97), vec(1.25, 1.25), vec(1.24, 1.25), vec(0.99, 0.4), vec(1.3, 0.3)}) {
    auto j = gen->jet(x);
    for (int i = 0; i < 2; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Unit(2, i);
      double hv = 1e-6, hg = 1e-5;
      double fd = (gen->value(x + hv * e) - gen->value(x - hv * e)) / (2 * hv);
      CHECK(j.grad[i] == doctest::Approx(fd).epsilon(1e-7));
      Eigen::VectorXd fdh = (gen->jet(x + hg * e).grad - gen->jet(x - hg * e).grad) / (2 * hg);
      double scale = std::max(1.0, j.hess.cwiseAbs().maxCoeff());
      CHECK((fdh - j.hess.col(i)).cwiseAbs().maxCoeff() / scale <= 1e-6);
    }
    CHECK(min_eigenvalue(j.hess) >= -1e-10);
  }
  // By symmetry the gradient on the diagonal wall is balanced.
  auto j = gen->jet(vec(1.25, 1.25));
  CHECK(j.grad[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(j.grad[1] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(hessian_rank(j.hess) == 1);
  CHECK(hessian_rank(gen->jet(vec(1.0, 1.0)).hess) == 2);
}

TEST_CASE("nice family passes and the strict control fails e") {
  auto p = simplex(3);
  auto d = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1)}), p);
  auto samples = sample_polytope(p, 60, 11);
  auto nice = verify_nice_family(d, [&](double e) { return build_nice_smoothing(d, e); }, {0.05, 0.1}, samples);
  CHECK(nice.all_pass());
  auto strict = verify_nice_family(d, [&](double e) { return build_strict_smoothing(d, e); }, {0.05, 0.1}, samples);
  CHECK(strict.get("a").pass);
  CHECK(strict.get("c").pass);
  CHECK(strict.get("d").pass);
  CHECK_FALSE(strict.get("e").pass);
  CHECK(build_strict_smoothing(d, 0.1)->mu() > 0.0);
}

TEST_CASE("smoothing rejects overlapping walls and bad epsilon") {
  auto p = simplex(3);
  auto d = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1), piece(2, 0, -3)}), p);
  CHECK_NOTHROW(build_nice_smoothing(d, 0.2));
  CHECK_THROWS_AS(build_nice_smoothing(d, 0.6), InputError);
  CHECK_THROWS_AS(build_nice_smoothing(d, 0.0), InputError);
  CHECK_THROWS_AS(verify_nice_family(d, [&](double e) { return build_nice_smoothing(d, e); }, {0.1}, {}), InputError);
}

TEST_CASE("sampling is deterministic for a seed") {
  auto p = simplex(3);
  auto a = sample_polytope(p, 20, 5), b = sample_polytope(p, 20, 5);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (const auto& x : a) CHECK(p.contains(x));
}
