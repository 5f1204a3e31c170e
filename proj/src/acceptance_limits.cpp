#include <cmath>
#include <numbers>

#include "acceptance_internal.hpp"
#include "toric/potentials.hpp"
#include "toric/smoothing.hpp"

namespace toric::acc {

namespace {

PLConvex hinge_x1() {
  return PLConvex(2, {{{Rational(0), Rational(0)}, Rational(0)}, {{Rational(1), Rational(0)}, Rational(-1)}});
}

}  // namespace

Outcome criterion_uniform() {
  auto p = interval(0, 2, false);
  const double m = 1.0, alpha = 0.5, A = 4.0;
  auto gen = build_bump_generator(p, {{m, alpha, A, KernelKind::CosineSquared}});
  std::vector<double> grid{32, 64, 128, 256, 512, 1024, 2048, 4096};
  bool pass = true;
  std::string detail;
  for (int n : {0, 2}) {
    auto comp = n == 0 ? interval(0, Rational(1, 2), false) : interval(Rational(3, 2), 2, false);
    auto d = uniform_diagnostic(p, gen, point({double(n)}), comp, grid, standard_battery(p), true);
    // Scanned gap: min of psi(n) + f_n off the component.
    double gap = 1e300;
    const double psi_n = gen->value(point({double(n)}));
    for (int i = 0; i <= 4000; ++i) {
      double x = 2.0 * i / 4000.0;
      if (comp.contains(point({x}))) continue;
      gap = std::min(gap, psi_n + f_m(*gen, point({double(n)}), point({x})));
    }
    double g = d.fit.exp_rate;
    bool rate_ok = d.fit.model == RateModel::Exponential && gap > 0.0 && std::abs(g - gap) <= 0.15 * gap;
    bool ok = rate_ok && d.final_error() <= 1e-8;
    pass = pass && ok;
    detail += "n=" + std::to_string(n) + " " + fit_text(d) + " gap=" + sci(gap) + "; ";
  }
  return {pass, detail};
}

Outcome criterion_gcst() {
  auto p = interval(Rational(-1, 2), Rational(5, 2), true);
  const double alpha = 0.5, A = 4.0;
  auto gen = build_bump_generator(p, {{1.0, alpha, A, KernelKind::CosineSquared}});
  auto battery = standard_battery(p);
  auto taus = functions_of(battery);
  const double s = 4096.0;

  // Component limit at n = 0: int_{P1} e^{-h0_n} tau.
  auto image_pairing = [&](int n) {
    SectionDensity sd(p, gen, point({double(n)}), s);
    auto gc = gcst_image(p, gen, {n}, s);
    double scale = std::exp(gc.log_coefficient + sd.log_integral());
    auto pr = sd.pair(taus);
    for (auto& v : pr) v *= scale;
    return pr;
  };
  auto pr0 = image_pairing(0);
  Eigen::VectorXd n0 = point({0.0});
  auto integrand = [&](double x, std::span<double> out) {
    Eigen::VectorXd xv = point({x});
    double w = std::exp(minus_h0_m(p, n0, xv));
    out[0] = w;
    for (std::size_t i = 0; i < taus.size(); ++i) out[i + 1] = w * taus[i](xv);
  };
  QuadOptions q;
  q.rel_tol = 1e-12;
  auto ref = integrate_1d(integrand, static_cast<int>(taus.size()) + 1, {-0.5, 0.0, 0.5}, q);
  double err_a = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    err_a = std::max(err_a, std::abs(pr0[i] - ref.values[i + 1]) / ref.values[0]);
  }

  // Laplace limit at the bump centre n = 1.
  auto pr1 = image_pairing(1);
  Eigen::VectorXd n1 = point({1.0});
  double psi2 = gen->jet(n1).hess(0, 0);
  double lap = std::exp(minus_h0_m(p, n1, n1)) * std::sqrt(2.0 * std::numbers::pi / psi2);
  double err_b = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    double target = lap * taus[i](n1);
    err_b = std::max(err_b, std::abs(std::sqrt(s) * pr1[i] - target) / (lap * std::max(std::abs(taus[i](n1)), 1e-3)));
  }
  bool pass = err_a <= 1e-6 && err_b <= 0.02;
  return {pass, "component error " + sci(err_a) + " (limit 1e-06); Laplace rel error " + sci(err_b) + " (limit 0.02)"};
}

Outcome criterion_polarization() {
  std::string detail;
  bool pass = true;
  // Stasis off the support.
  auto p = interval(0, 2, false);
  auto gen = build_bump_generator(p, {{1.0, 0.5, 4.0, KernelKind::CosineSquared}});
  auto cp2 = simplex(3);
  auto dec = decompose(hinge_x1(), cp2);
  auto wall = build_nice_smoothing(dec, 0.1);
  double stasis = 0.0;
  for (double s : {1.0, 10.0, 100.0}) {
    for (double x : {0.2, 0.4, 1.6, 1.9}) {
      auto g0 = ray_jet(p, *gen, 0.0, point({x})).hess;
      stasis = std::max(stasis, polarization_distance(ray_jet(p, *gen, s, point({x})).hess, g0));
    }
    for (auto x : {point({0.5, 0.5}), point({1.5, 0.5}), point({0.3, 2.0})}) {
      auto g0 = ray_jet(cp2, *wall, 0.0, x).hess;
      stasis = std::max(stasis, polarization_distance(ray_jet(cp2, *wall, s, x).hess, g0));
    }
  }
  pass = pass && stasis == 0.0;
  detail += "stasis max " + sci(stasis) + "; ";

  // Approach to the real polarization at the bump centre.
  std::vector<double> grid{1e2, 1e3, 1e4, 1e5, 1e6};
  std::vector<double> dist;
  double c_bound = 0.0;
  for (double s : grid) {
    dist.push_back(distance_to_real(ray_jet(p, *gen, s, point({1.0})).hess));
    c_bound = std::max(c_bound, s * dist.back());
  }
  auto fit = fit_rate(grid, dist);
  bool ok_real = fit.power_exponent >= 0.9 && fit.power_exponent <= 1.1;
  pass = pass && ok_real;
  detail += "bump exponent " + sci(fit.power_exponent) + " C=" + sci(c_bound) + "; ";

  // Mixed limit at a wall point of the simplex.
  Eigen::VectorXd xw = point({1.0, 1.0});
  Eigen::VectorXd nu = point({1.0, 0.0});
  auto limit = mixed_limit_projector(guillemin_jet(cp2, xw).hess, nu);
  std::vector<double> wall_dist;
  for (double s : grid) {
    wall_dist.push_back((polarization_projector(ray_jet(cp2, *wall, s, xw).hess) - limit).norm());
  }
  auto wfit = fit_rate(grid, wall_dist);
  double far = (polarization_projector(ray_jet(cp2, *wall, 1e8, xw).hess) - limit).norm();
  bool ok_mixed = far <= 1e-6 && wfit.power_exponent >= 0.9 && wfit.power_exponent <= 1.1;
  pass = pass && ok_mixed;
  detail += "wall exponent " + sci(wfit.power_exponent) + " distance at s=1e8 " + sci(far);
  return {pass, detail};
}

Outcome criterion_higher_dim() {
  auto p = simplex(3);
  auto dec = decompose(hinge_x1(), p);
  const double eps = 0.1;
  auto gen = build_nice_smoothing(dec, eps);
  // Bare variant: the h0 weight is dropped (see README).
  auto region = Polytope::from_facets(2, {{{1, 0}, Rational(11, 10)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(-3)}},
                                      false, DelzantPolicy::Report);
  auto du = uniform_diagnostic(p, gen, point({2.0, 0.0}), region, {256, 512, 1024, 2048}, standard_battery(p), false);
  bool ok_a = du.final_error() <= 1e-4;

  std::vector<SeparableTest> taus{
      {"1*x1", [](const Eigen::VectorXd&) { return 1.0; }, [](const Eigen::VectorXd& x) { return x[0]; }},
      {"x2*1", [](const Eigen::VectorXd& x) { return x[1]; }, [](const Eigen::VectorXd&) { return 1.0; }},
      {"cos(x2)*x1^2", [](const Eigen::VectorXd& x) { return std::cos(x[1]); },
       [](const Eigen::VectorXd& x) { return x[0] * x[0]; }}};
  auto df = face_delta_diagnostic(p, gen, point({1.0, 1.0}), *dec.faces.at(0).frame, {1024, 2048, 4096, 8192}, taus,
                                  false);
  bool ok_b = df.decreasing() && df.fit.power_exponent >= 0.8 && df.fit.power_exponent <= 1.2;
  return {ok_a && ok_b,
          "m=(2,0) uniform error " + sci(du.final_error()) + " at s=2048 (limit 1e-04), " + fit_text(du) +
              "; m=(1,1) face " + fit_text(df)};
}

}  // namespace toric::acc
