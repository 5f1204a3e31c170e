#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "acceptance_internal.hpp"
#include "toric/smoothing.hpp"

namespace toric::acc {

namespace {

AffinePiece piece(std::int64_t a, std::int64_t b, std::int64_t c) { return {{Rational(a), Rational(b)}, Rational(c)}; }

std::set<std::vector<Rational>> as_set(const std::vector<RVec>& vs) { return {vs.begin(), vs.end()}; }

}  // namespace

Outcome criterion_nice_family() {
  auto p = simplex(3);
  const std::vector<double> eps{0.05, 0.1, 0.2};
  auto samples = sample_polytope(p, 150, 7);
  // Shipped family with two wall directions, plus the single-wall family
  // that also carries the strictly convex control.
  auto corner = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1), piece(0, 1, -1)}), p);
  auto wall = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1)}), p);
  auto nice = verify_nice_family(corner, [&](double e) { return build_nice_smoothing(corner, e); }, eps, samples);
  auto nice_wall = verify_nice_family(wall, [&](double e) { return build_nice_smoothing(wall, e); }, eps, samples);
  auto strict = verify_nice_family(wall, [&](double e) { return build_strict_smoothing(wall, e); }, eps, samples);
  auto summary = [](const NiceReport& r) {
    std::string out;
    for (const auto& c : r.conditions) out += " " + c.id + (c.pass ? "=ok" : "=FAIL");
    return out;
  };
  std::string detail = "corner family:" + summary(nice) + "; wall family:" + summary(nice_wall) +
                       "; strict control:" + summary(strict);
  for (const auto* r : {&nice, &nice_wall}) {
    for (const auto& c : r->conditions) {
      if (!c.pass) detail += "; " + c.id + ": " + c.detail;
    }
  }
  bool pass = nice.all_pass() && nice_wall.all_pass() && !strict.get("e").pass;
  return {pass, detail};
}

Outcome criterion_decomposition() {
  std::string detail;
  // max(0, x1 - 1, x2 - 1, x1 + x2 - 2) on the simplex.
  auto p = simplex(3);
  auto dec = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1), piece(0, 1, -1), piece(1, 1, -2)}), p);
  Rational vol(0);
  for (const auto& part : dec.parts) vol += part.poly.volume();
  double vol_err = std::abs(to_double(vol - p.volume()));
  bool ok_parts = dec.parts.size() == 4 && vol_err <= 1e-9;
  detail += std::to_string(dec.parts.size()) + " parts, volume error " + sci(vol_err) + "; ";

  // Q over [0, 2] for max(0, x - 1) with K = 1.
  auto seg = interval(0, 2, false);
  PLConvex hinge(1, {{{Rational(0)}, Rational(0)}, {{Rational(1)}, Rational(-1)}});
  auto q = build_Q(hinge, seg, Rational(1));
  std::vector<RVec> expect{{Rational(0), Rational(0)}, {Rational(2), Rational(0)}, {Rational(0), Rational(1)},
                           {Rational(1), Rational(1)}};
  bool ok_q = q.integral && as_set(q.q.vertices()) == as_set(expect);
  detail += std::string("Q vertices ") + (ok_q ? "match" : "differ") + "; ";

  // f = 0 gives the prism P x [0, K].
  auto prism = build_Q(PLConvex(2, {piece(0, 0, 0)}), p, Rational(2));
  std::vector<RVec> prism_expect;
  for (const auto& v : p.vertices()) {
    for (int h : {0, 2}) prism_expect.push_back({v[0], v[1], Rational(h)});
  }
  bool ok_prism = prism.q.volume() == Rational(2) * p.volume() && as_set(prism.q.vertices()) == as_set(prism_expect);
  detail += std::string("prism ") + (ok_prism ? "exact" : "mismatch");
  return {ok_parts && ok_q && ok_prism, detail};
}

Outcome criterion_metric() {
  auto p = interval(0, 2, false);
  const double m = 1.0, alpha = 0.5;
  auto gen = build_bump_generator(p, {{m, alpha, 4.0, KernelKind::CosineSquared}});
  std::vector<double> grid;
  for (int k = 0; k <= 4; ++k) grid.push_back(std::pow(10.0, 2.0 + 0.5 * k));
  std::vector<double> across, circle;
  double off_spread = 0.0, off_ref = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double s = grid[i];
    across.push_back(metric_length(p, *gen, s, {point({m - alpha, 0.0}), point({m + alpha, 0.0})}));
    circle.push_back(metric_length(p, *gen, s, {point({m, 0.0}), point({m, 2.0 * std::numbers::pi})}));
    double off = metric_length(p, *gen, s, {point({0.1, 0.0}), point({0.45, 0.0})});
    if (i == 0) off_ref = off;
    off_spread = std::max(off_spread, std::abs(off - off_ref));
  }
  // Growth exponent from the reciprocal lengths, fitted as a decay.
  std::vector<double> inv;
  for (double l : across) inv.push_back(1.0 / l);
  double grow = fit_rate(grid, inv).power_exponent;
  double decay = fit_rate(grid, circle).power_exponent;
  bool pass = std::abs(grow - 0.5) <= 0.05 && std::abs(decay - 0.5) <= 0.05 && off_spread <= 1e-10;
  return {pass, "across exponent " + sci(grow) + ", off-support spread " + sci(off_spread) + ", circle exponent -" +
                    sci(decay)};
}

}  // namespace toric::acc
