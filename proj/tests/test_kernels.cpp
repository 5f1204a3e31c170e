#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "toric/exact.hpp"
#include "toric/kernels.hpp"
#include "toric/quadrature.hpp"

using namespace toric;

namespace {

// Composite Simpson rule, independent of the library quadrature.
double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  double h = (b - a) / n, s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// int_{-1}^{1} exp(-1/(1-u^2)) du.
constexpr double kSmoothMass = 0.44399381616807943;

}  // namespace

TEST_CASE("kernels have unit mass, even symmetry and consistent antiderivatives") {
  for (auto kind : {KernelKind::CosineSquared, KernelKind::Smooth}) {
    const auto& k = BumpKernel::get(kind);
    CHECK(k.cdf(1.0) == 1.0);
    CHECK(simpson([&](double u) { return k.density(u); }, -1, 1) == doctest::Approx(1.0).epsilon(1e-10));
    for (double u : {-0.9, -0.5, -0.1, 0.0, 0.3, 0.77}) {
      CHECK(k.density(u) == doctest::Approx(k.density(-u)));
      CHECK(k.cdf(u) + k.cdf(-u) == doctest::Approx(1.0).epsilon(1e-13));
      double cdf = simpson([&](double t) { return k.density(t); }, -1, u);
      CHECK(k.cdf(u) == doctest::Approx(cdf).epsilon(1e-10));
      double mom = simpson([&](double t) { return t * k.density(t); }, -1, u);
      CHECK(k.first_moment(u) == doctest::Approx(mom).epsilon(1e-9));
      double ramp = simpson([&](double t) { return k.cdf(t); }, -1, u, 2000);
      CHECK(k.ramp(u) == doctest::Approx(ramp).epsilon(1e-9));
      double h = 1e-5;
      CHECK(k.density_d1(u) == doctest::Approx((k.density(u + h) - k.density(u - h)) / (2 * h)).epsilon(1e-6));
      CHECK(k.density_d2(u) ==
            doctest::Approx((k.density_d1(u + h) - k.density_d1(u - h)) / (2 * h)).epsilon(1e-5));
    }
    CHECK(k.ramp(1.0) == doctest::Approx(1.0));
    CHECK(k.ramp(2.5) == doctest::Approx(2.5));
  }
  CHECK(BumpKernel::get(KernelKind::Smooth).peak() == doctest::Approx(std::exp(-1.0) / kSmoothMass).epsilon(1e-12));
  CHECK(BumpKernel::get(KernelKind::CosineSquared).peak() == 1.0);
}

TEST_CASE("kernel names parse") {
  CHECK(parse_kernel_kind("cosine") == KernelKind::CosineSquared);
  CHECK(parse_kernel_kind("smooth") == KernelKind::Smooth);
  CHECK_THROWS_AS(parse_kernel_kind("gauss"), InputError);
}

TEST_CASE("one-dimensional bump profile") {
  Bump1D b{1.0, 0.25, 3.0, KernelKind::Smooth};
  CHECK(b.eval(0.7).value == 0.0);
  CHECK(b.eval(0.7).slope == 0.0);
  // Past the support the profile is mass * (x - center) exactly.
  CHECK(b.eval(1.25).value == doctest::Approx(3.0 * 0.25));
  CHECK(b.eval(2.0).value == doctest::Approx(3.0));
  CHECK(b.eval(2.0).slope == 3.0);
  for (double x : {0.8, 0.95, 1.0, 1.1, 1.2}) {
    auto j = b.eval(x);
    double h = 1e-6;
    CHECK(j.slope == doctest::Approx((b.eval(x + h).value - b.eval(x - h).value) / (2 * h)).epsilon(1e-7));
    CHECK(j.curvature == doctest::Approx((b.eval(x + h).slope - b.eval(x - h).slope) / (2 * h)).epsilon(1e-5));
    CHECK(j.curvature >= 0.0);
  }
}

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {1, 2, 5, 8, 15, 20}) {
    const auto& r = gauss_legendre(n);
    double wsum = 0.0;
    for (double w : r.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int deg = 0; deg < 2 * n; ++deg) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
      double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("adaptive interval quadrature") {
  auto semicircle = [](double x, std::span<double> out) {
    out[0] = std::sqrt(std::max(0.0, x * (2 - x)));
    out[1] = x * x;
  };
  auto r = integrate_1d(semicircle, 2, {0, 1, 2});
  CHECK(r.converged);
  CHECK(r.values[0] == doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
  CHECK(r.values[1] == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
  // Deterministic: same input, same bits.
  auto r2 = integrate_1d(semicircle, 2, {0, 1, 2});
  CHECK(r.values[0] == r2.values[0]);
}

TEST_CASE("polygon quadrature and clipping") {
  std::vector<Eigen::Vector2d> tri{{0, 0}, {3, 0}, {0, 3}};
  CHECK(polygon_area(tri) == doctest::Approx(4.5));
  // int over the simplex of x^2 y = N^5 * 2! 1! / 5! = 243 * 2 / 120.
  auto f = [](const Eigen::Vector2d& x, std::span<double> out) {
    out[0] = x.x() * x.x() * x.y();
    out[1] = std::exp(-x.squaredNorm());
  };
  QuadOptions q;
  q.rel_tol = 1e-10;
  auto r = integrate_polygon(f, 2, tri, {{{1, 0}, 1.0}}, q);
  CHECK(r.values[0] == doctest::Approx(243.0 * 2.0 / 120.0).epsilon(1e-12));
  std::vector<Eigen::Vector2d> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  auto half = clip_polygon(sq, {1, 1}, 1.0);
  CHECK(polygon_area(half) == doctest::Approx(0.5));
  auto r2 = integrate_polygon(f, 2, sq, {}, q);
  double erf1 = std::erf(1.0) * std::sqrt(std::numbers::pi) / 2;
  CHECK(r2.values[1] == doctest::Approx(erf1 * erf1).epsilon(1e-9));
}
