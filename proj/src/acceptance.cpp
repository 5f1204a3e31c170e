#include "toric/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "toric/limits.hpp"
#include "toric/smoothing.hpp"
#include "acceptance_internal.hpp"

namespace toric {

namespace acc {

Polytope interval(Rational lo, Rational hi, bool corrected) {
  return Polytope::from_facets(1, {{{1}, lo}, {{-1}, -hi}}, corrected);
}

Polytope simplex(int n) {
  return Polytope::from_facets(2, {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(-n)}});
}

Eigen::VectorXd point(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string fit_text(const Diagnostic& d) {
  return "p=" + sci(d.fit.power_exponent) + " g=" + sci(d.fit.exp_rate) + " model=" + model_name(d.fit.model) +
         " final=" + sci(d.final_error());
}

}  // namespace acc

namespace {

using namespace acc;

Outcome criterion_beta() {
  double worst = 0.0;
  for (int N = 1; N <= 3; ++N) {
    auto p = interval(0, N, false);
    auto zero = std::make_shared<ZeroGenerator>(1);
    for (int n = 0; n <= N; ++n) {
      SectionDensity sd(p, zero, point({double(n)}), 0.0);
      double a = n / 2.0, b = (N - n) / 2.0;
      double oracle = std::pow(N, a + b + 1.0) * std::beta(a + 1.0, b + 1.0);
      worst = std::max(worst, std::abs(std::exp(sd.log_integral()) / oracle - 1.0));
    }
  }
  return {worst <= 1e-8, "max rel error " + sci(worst)};
}

Outcome criterion_affine_tail() {
  auto p = interval(0, 4, false);
  std::string detail;
  bool pass = true;
  for (auto [kind, tol] : {std::pair{KernelKind::CosineSquared, 1e-10}, std::pair{KernelKind::Smooth, 1e-8}}) {
    const double m = 1.5, alpha = 0.5, A = 2.0;
    auto gen = build_bump_generator(p, {{m, alpha, A, kind}});
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      double x = m + alpha + (4.0 - m - alpha) * i / 199.0;
      worst = std::max(worst, std::abs(gen->value(point({x})) - A * (x - m)));
    }
    pass = pass && worst <= tol;
    detail += kernel_name(kind) + " max " + sci(worst) + "; ";
  }
  return {pass, detail};
}

Outcome criterion_value_function() {
  auto p = interval(0, 6, false);
  const std::vector<BumpSpec> bumps{{1.0, 0.5, 1.0, KernelKind::CosineSquared},
                                    {3.0, 0.5, 2.0, KernelKind::CosineSquared},
                                    {5.0, 0.5, 3.0, KernelKind::Smooth}};
  auto gen = build_bump_generator(p, bumps);
  // Gap components between consecutive supports.
  std::vector<std::pair<double, double>> gaps{{0.0, 0.5}, {1.5, 2.5}, {3.5, 4.5}, {5.5, 6.0}};
  double worst = 0.0;
  for (int n = 0; n <= 6; ++n) {
    for (std::size_t l = 0; l < gaps.size(); ++l) {
      double expect = 0.0;
      for (std::size_t j = 0; j < l; ++j) expect += (bumps[j].m - n) * bumps[j].A;
      for (int i = 0; i < 100; ++i) {
        double x = gaps[l].first + (gaps[l].second - gaps[l].first) * i / 99.0;
        worst = std::max(worst, std::abs(f_m(*gen, point({double(n)}), point({x})) - expect));
      }
    }
  }
  return {worst <= 1e-10, "max deviation " + sci(worst)};
}

Outcome criterion_delta() {
  auto p = interval(0, 2, false);
  auto gen = build_bump_generator(p, {{1.0, 0.5, 4.0, KernelKind::CosineSquared}});
  std::vector<double> grid{32, 64, 128, 256, 512, 1024, 2048, 4096};
  bool pass = true;
  std::string detail;
  for (bool weighted : {true, false}) {
    auto d = delta_diagnostic(p, gen, point({1.0}), grid, standard_battery(p), weighted);
    bool ok = d.decreasing() && d.fit.power_exponent >= 0.8 && d.fit.power_exponent <= 1.2 && d.final_error() <= 1e-3;
    pass = pass && ok;
    detail += std::string(weighted ? "weighted " : "bare ") + fit_text(d) + "; ";
  }
  return {pass, detail};
}

}  // namespace

namespace acc {

Outcome run_numeric(int id) {
  switch (id) {
    case 1: return criterion_beta();
    case 2: return criterion_affine_tail();
    case 3: return criterion_value_function();
    case 4: return criterion_delta();
    case 5: return criterion_uniform();
    case 6: return criterion_gcst();
    case 7: return criterion_polarization();
    case 8: return criterion_higher_dim();
    case 9: return criterion_nice_family();
    case 10: return criterion_decomposition();
    case 11: return criterion_metric();
    default: throw InputError("criterion id must be in 1.." + std::to_string(kCriterionCount));
  }
}

}  // namespace acc

CriterionResult run_criterion(int id) {
  static const char* names[] = {"",
                                "Beta-norm oracle",
                                "affine tail past a bump",
                                "value function on gap components",
                                "delta convergence",
                                "uniform convergence on a component",
                                "coherent state transform limits",
                                "polarization stasis and limits",
                                "higher-dimension localization",
                                "nice-family verification",
                                "decomposition and Q",
                                "metric degeneration"};
  static const double budgets[] = {0, 1, 1, 1, 10, 10, 20, 10, 60, 30, 1, 10};
  if (id < 1 || id > kCriterionCount) throw InputError("criterion id must be in 1.." + std::to_string(kCriterionCount));
  CriterionResult r;
  r.id = id;
  r.name = names[id];
  r.budget = budgets[id];
  auto t0 = std::chrono::steady_clock::now();
  acc::Outcome o;
  try {
    o = acc::run_numeric(id);
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = o.pass && r.seconds < r.budget;
  r.detail = o.detail;
  if (o.pass && !r.pass) r.detail += " runtime over budget " + acc::sci(r.budget) + "s";
  return r;
}

std::vector<CriterionResult> run_all_criteria() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", r.seconds);
  return "criterion " + std::to_string(r.id) + " [" + (r.pass ? "PASS" : "FAIL") + "] " + r.name + " (" + secs +
         "s): " + r.detail;
}

}  // namespace toric
