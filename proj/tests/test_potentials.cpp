#include <doctest.h>

#include <cmath>
#include <numbers>

#include "toric/generators.hpp"
#include "toric/potentials.hpp"
#include "toric/smoothing.hpp"

using namespace toric;

namespace {

Polytope simplex(int n) {
  return Polytope::from_facets(2, {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(-n)}});
}

Polytope interval(int n) { return Polytope::from_facets(1, {{{1}, Rational(0)}, {{-1}, Rational(-n)}}); }

Eigen::VectorXd vec(double a) { return Eigen::VectorXd::Constant(1, a); }
Eigen::VectorXd vec(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

std::vector<Eigen::VectorXd> boundary_approach(double n) {
  std::vector<Eigen::VectorXd> xs;
  for (double t : {1e-1, 1e-3, 1e-6, 1e-9}) {
    xs.push_back(vec(t, n / 3.0));
    xs.push_back(vec(n / 3.0, t));
    xs.push_back(vec(0.5 * (n - t), 0.5 * (n - t)));
    xs.push_back(vec(t, t));
  }
  return xs;
}

}  // namespace

TEST_CASE("Guillemin potential on an interval matches the closed form") {
  const int n = 3;
  auto p = interval(n);
  for (double x : {1e-8, 0.2, 1.5, 2.9}) {
    auto j = guillemin_jet(p, vec(x));
    double y = n - x;
    CHECK(j.value == doctest::Approx(0.5 * (x * std::log(x) + y * std::log(y))));
    CHECK(j.grad[0] == doctest::Approx(0.5 * (std::log(x) - std::log(y))));
    CHECK(j.hess(0, 0) == doctest::Approx(0.5 * (1.0 / x + 1.0 / y)));
  }
}

TEST_CASE("Abreu determinant identity on the simplex") {
  // det G_P * prod ell = N / 4 for the standard simplex of size N.
  for (int n : {1, 3}) {
    auto p = simplex(n);
    auto xs = boundary_approach(n);
    auto rep = det_identity_check(p, [&](const Eigen::VectorXd& x) { return guillemin_jet(p, x); }, xs);
    CHECK(rep.all_positive);
    CHECK(rep.bounded);
    CHECK(rep.min_delta == doctest::Approx(4.0 / n).epsilon(1e-6));
    CHECK(rep.max_delta == doctest::Approx(4.0 / n).epsilon(1e-6));
  }
}

TEST_CASE("ray potentials keep the boundary behaviour") {
  auto p = simplex(3);
  Decomposition d = decompose(PLConvex(2, {{{Rational(0), Rational(0)}, Rational(0)},
                                           {{Rational(1), Rational(0)}, Rational(-1)}}),
                              p);
  auto gen = build_nice_smoothing(d, 0.1);
  for (double s : {0.0, 1.0, 100.0}) {
    auto rep = det_identity_check(p, *gen, s, boundary_approach(3));
    CHECK(rep.all_positive);
    CHECK(rep.bounded);
  }
}

TEST_CASE("determinant check flags bad potentials") {
  auto p = simplex(3);
  auto xs = boundary_approach(3);
  auto quadratic = [](const Eigen::VectorXd& x) {
    return PotentialJet{x.squaredNorm(), 2 * x, 2 * Eigen::MatrixXd::Identity(2, 2)};
  };
  auto concave = [](const Eigen::VectorXd& x) {
    return PotentialJet{-x.squaredNorm(), -2 * x, -2 * Eigen::MatrixXd::Identity(2, 2)};
  };
  CHECK_FALSE(det_identity_check(p, quadratic, xs).bounded);
  CHECK_FALSE(det_identity_check(p, concave, xs).all_positive);
}

TEST_CASE("Legendre transform round trip") {
  auto p = simplex(3);
  Decomposition d = decompose(PLConvex(2, {{{Rational(0), Rational(0)}, Rational(0)},
                                           {{Rational(1), Rational(0)}, Rational(-1)},
                                           {{Rational(0), Rational(1)}, Rational(-1)}}),
                              p);
  auto gen = build_nice_smoothing(d, 0.2);
  for (double s : {0.0, 1.0, 50.0}) {
    for (auto x : {vec(0.5, 0.5), vec(1.0, 1.0), vec(2.5, 0.1), vec(1e-4, 2.0)}) {
      Eigen::VectorXd y = legendre_forward(p, *gen, s, x);
      auto res = legendre_inverse(p, *gen, s, y);
      CHECK((res.x - x).norm() <= 1e-8 * std::max(1.0, x.norm()));
      // h(y) + g(x) = <x, y> at conjugate points.
      double h = kahler_potential(p, *gen, s, y);
      CHECK(h + ray_jet(p, *gen, s, x).value == doctest::Approx(x.dot(y)).epsilon(1e-9));
    }
  }
}

TEST_CASE("holomorphic logarithms") {
  auto p = interval(2);
  ZeroGenerator zero(1);
  auto w = holo_log(p, zero, 0.0, vec(1.0), vec(3.5));
  CHECK(w[0].real() == doctest::Approx(0.0));
  CHECK(w[0].imag() == doctest::Approx(3.5 - 2 * std::numbers::pi));
}
