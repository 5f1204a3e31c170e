#include <doctest.h>

#include <cmath>

#include "toric/limits.hpp"

using namespace toric;

TEST_CASE("rate fit recovers synthetic laws") {
  std::vector<double> s{10, 20, 40, 80, 160, 320};
  std::vector<double> pw, ex;
  for (double v : s) {
    pw.push_back(3.0 * std::pow(v, -1.5));
    ex.push_back(2.0 * std::exp(-0.05 * v));
  }
  auto fp = fit_rate(s, pw);
  CHECK(fp.model == RateModel::Power);
  CHECK(fp.power_exponent == doctest::Approx(1.5).epsilon(1e-10));
  auto fe = fit_rate(s, ex);
  CHECK(fe.model == RateModel::Exponential);
  CHECK(fe.exp_rate == doctest::Approx(0.05).epsilon(1e-10));
  CHECK(fe.exponent() == doctest::Approx(0.05).epsilon(1e-10));
}

TEST_CASE("polarization projector is an orthogonal projector of rank n") {
  Eigen::MatrixXd g(2, 2);
  g << 2.0, 0.5, 0.5, 1.0;
  auto pr = polarization_projector(g);
  CHECK(pr.rows() == 4);
  CHECK((pr - pr.adjoint()).norm() <= 1e-12);
  CHECK((pr * pr - pr).norm() <= 1e-12);
  CHECK(std::abs(pr.trace().real() - 2.0) <= 1e-12);
  // (a, -i G a) lies in the range.
  Eigen::VectorXcd v(4);
  Eigen::Vector2d a(1.0, -3.0);
  Eigen::Vector2d ga = g * a;
  v << a[0], a[1], std::complex<double>(0, -ga[0]), std::complex<double>(0, -ga[1]);
  CHECK((pr * v - v).norm() <= 1e-12 * v.norm());
  CHECK(polarization_distance(g, g) <= 1e-12);
}

TEST_CASE("distance to the real polarization in one dimension") {
  for (double gv : {0.1, 1.0, 7.0, 1e3}) {
    Eigen::MatrixXd g(1, 1);
    g << gv;
    CHECK(distance_to_real(g) == doctest::Approx(std::sqrt(2.0 / (1.0 + gv * gv))).epsilon(1e-10));
  }
}

TEST_CASE("mixed limit is the limit of a metric blowing up along nu") {
  Eigen::MatrixXd g0(2, 2);
  g0 << 1.5, 0.3, 0.3, 0.8;
  Eigen::Vector2d nu(1.0, 0.0);
  auto lim = mixed_limit_projector(g0, nu);
  CHECK((lim * lim - lim).norm() <= 1e-12);
  CHECK(std::abs(lim.trace().real() - 2.0) <= 1e-12);
  double prev = 1e300;
  for (double s : {1e2, 1e4, 1e6}) {
    Eigen::MatrixXd g = g0 + s * nu * nu.transpose();
    double d = (polarization_projector(g) - lim).norm();
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev <= 1e-5);
}

TEST_CASE("projector from a basis ignores the choice of basis") {
  Eigen::MatrixXcd b(3, 2);
  b << 1.0, 0.0, std::complex<double>(0, 1), 1.0, 0.0, 2.0;
  Eigen::MatrixXcd mix(2, 2);
  mix << 2.0, 1.0, std::complex<double>(0, 1), 3.0;
  CHECK((projector_from_basis(b) - projector_from_basis(b * mix)).norm() <= 1e-12);
}
