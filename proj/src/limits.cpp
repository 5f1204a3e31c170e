#include "toric/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace toric {

std::vector<BatteryMember> standard_battery(const Polytope& p) {
  const int n = p.dim();
  std::vector<BatteryMember> out;
  out.push_back({"1", [](const Eigen::VectorXd&) { return 1.0; }});
  for (int i = 0; i < n; ++i) {
    out.push_back({"x" + std::to_string(i + 1), [i](const Eigen::VectorXd& x) { return x[i]; }});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      out.push_back({"x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1),
                     [i, j](const Eigen::VectorXd& x) { return x[i] * x[j]; }});
    }
  }
  const double diam = p.diameter();
  for (int i = 0; i < n; ++i) {
    out.push_back({"cos(pi*x" + std::to_string(i + 1) + "/diam)",
                   [i, diam](const Eigen::VectorXd& x) { return std::cos(std::numbers::pi * x[i] / diam); }});
  }
  Eigen::VectorXd c = p.centroid_of_vertices();
  const double rad = 0.5 * diam;
  out.push_back({"bump", [c, rad](const Eigen::VectorXd& x) {
                   double q = (x - c).squaredNorm() / (rad * rad);
                   return q < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - q)) : 0.0;
                 }});
  return out;
}

std::vector<TestFunction> functions_of(const std::vector<BatteryMember>& battery) {
  std::vector<TestFunction> out;
  for (const auto& b : battery) out.push_back(b.f);
  return out;
}

std::string model_name(RateModel m) {
  switch (m) {
    case RateModel::Power:
      return "power";
    case RateModel::Exponential:
      return "exponential";
    default:
      return "none";
  }
}

namespace {

// Least squares y = a + b t; returns (a, b, rms residual).
std::tuple<double, double, double> line_fit(const std::vector<double>& t, const std::vector<double>& y) {
  const double n = static_cast<double>(t.size());
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  double b = (n * sty - st * sy) / (n * stt - st * st);
  double a = (sy - b * st) / n;
  double ss = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    double r = y[i] - a - b * t[i];
    ss += r * r;
  }
  return {a, b, std::sqrt(ss / n)};
}

}  // namespace

RateFit fit_rate(const std::vector<double>& s, const std::vector<double>& errors) {
  RateFit fit;
  fit.s = s;
  fit.errors = errors;
  std::vector<double> ls, ss, le;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (errors[i] > 0.0 && std::isfinite(errors[i])) {
      ls.push_back(std::log(s[i]));
      ss.push_back(s[i]);
      le.push_back(std::log(errors[i]));
    }
  }
  if (ls.size() < 2) return fit;
  auto [pa, pb, pr] = line_fit(ls, le);
  auto [ea, eb, er] = line_fit(ss, le);
  fit.power_exponent = -pb;
  fit.power_residual = pr;
  fit.exp_rate = -eb;
  fit.exp_residual = er;
  fit.model = er < pr ? RateModel::Exponential : RateModel::Power;
  return fit;
}

bool Diagnostic::decreasing(double slack) const {
  for (std::size_t i = 1; i < fit.errors.size(); ++i) {
    if (fit.errors[i] > fit.errors[i - 1] * (1.0 + slack)) return false;
  }
  return true;
}

namespace {

Diagnostic run(const Polytope& p, GeneratorPtr gen, const Eigen::VectorXd& m, const std::vector<double>& s_grid,
               const std::vector<TestFunction>& taus, const std::vector<double>& targets, bool weighted) {
  Diagnostic d;
  d.s = s_grid;
  d.targets = targets;
  std::vector<double> errs;
  DensityOptions opts;
  opts.weighted = weighted;
  opts.max_s = std::max(opts.max_s, s_grid.empty() ? 0.0 : s_grid.back());
  for (double s : s_grid) {
    SectionDensity sd(p, gen, m, s, opts);
    auto vals = sd.pair(taus);
    double worst = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) worst = std::max(worst, std::abs(vals[i] - targets[i]));
    d.per_tau.push_back(vals);
    errs.push_back(worst);
  }
  d.fit = fit_rate(s_grid, errs);
  return d;
}

}  // namespace

Diagnostic delta_diagnostic(const Polytope& p, GeneratorPtr gen, const Eigen::VectorXd& m,
                            const std::vector<double>& s_grid, const std::vector<BatteryMember>& battery, bool weighted) {
  std::vector<double> targets;
  for (const auto& b : battery) targets.push_back(b.f(m));
  return run(p, gen, m, s_grid, functions_of(battery), targets, weighted);
}

std::vector<double> region_means(const Polytope& p, const Polytope& region, const Eigen::VectorXd& m,
                                 const std::vector<BatteryMember>& battery, bool weighted) {
  auto log_f = [&](const Eigen::VectorXd& x) { return weighted ? minus_h0_m(p, m, x) : 0.0; };
  double shift = 0.0;
  if (weighted) {
    shift = -1e300;
    for (const auto& v : region.vertices_double()) shift = std::max(shift, log_f(v));
    shift = std::max(shift, log_f(region.centroid_of_vertices()));
    if (!std::isfinite(shift)) shift = 0.0;
  }
  QuadOptions q;
  q.rel_tol = region.dim() == 1 ? 1e-12 : 1e-9;
  auto res = integrate_log_density(region, log_f, shift, functions_of(battery), {}, m, q);
  std::vector<double> out;
  for (std::size_t i = 0; i < battery.size(); ++i) out.push_back(res.values[i + 1] / res.values[0]);
  return out;
}

Diagnostic uniform_diagnostic(const Polytope& p, GeneratorPtr gen, const Eigen::VectorXd& m, const Polytope& region,
                              const std::vector<double>& s_grid, const std::vector<BatteryMember>& battery,
                              bool weighted) {
  auto targets = region_means(p, region, m, battery, weighted);
  return run(p, gen, m, s_grid, functions_of(battery), targets, weighted);
}

Diagnostic face_delta_diagnostic(const Polytope& p, GeneratorPtr gen, const Eigen::VectorXd& m, const FaceFrame& frame,
                                 const std::vector<double>& s_grid, const std::vector<SeparableTest>& taus,
                                 bool weighted) {
  if (p.dim() != 2 || frame.codim != 1) throw InputError("face diagnostics need a wall in dimension 2");
  Eigen::VectorXd d = frame.parallel_directions().col(0);
  // Chord m + tau d inside P.
  double lo = -1e300, hi = 1e300;
  for (const auto& f : p.facets()) {
    Eigen::VectorXd v = to_eigen(f.normal);
    double a = v.dot(d), b = to_double(f.offset) - v.dot(m);
    if (std::abs(a) < 1e-300) continue;
    if (a > 0) lo = std::max(lo, b / a);
    else hi = std::min(hi, b / a);
  }
  if (!(hi > lo)) throw InputError("chord through m is degenerate");
  std::vector<TestFunction> prods;
  std::vector<double> targets;
  std::vector<double> breaks{lo, hi};
  if (lo < 0.0 && hi > 0.0) breaks.push_back(0.0);
  for (const auto& t : taus) {
    Eigen::VectorXd x(2);
    auto f = [&](double tau, std::span<double> out) {
      x = m + tau * d;
      double w = weighted ? std::exp(minus_h0_m(p, m, x)) : 1.0;
      out[0] = w;
      out[1] = w * t.parallel(x);
    };
    QuadOptions q;
    q.rel_tol = 1e-12;
    auto res = integrate_1d(f, 2, breaks, q);
    targets.push_back(t.transverse(m) * res.values[1] / res.values[0]);
    auto par = t.parallel;
    auto tr = t.transverse;
    prods.push_back([par, tr](const Eigen::VectorXd& x) { return par(x) * tr(x); });
  }
  return run(p, gen, m, s_grid, prods, targets, weighted);
}

Eigen::MatrixXcd projector_from_basis(const Eigen::MatrixXcd& basis) {
  Eigen::MatrixXcd gram = basis.adjoint() * basis;
  return basis * gram.inverse() * basis.adjoint();
}

Eigen::MatrixXcd polarization_projector(const Eigen::MatrixXd& g) {
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw InputError("polarization needs a positive definite G");
  const Eigen::Index n = g.rows();
  const std::complex<double> I(0.0, 1.0);
  Eigen::MatrixXcd b(2 * n, n);
  b.topRows(n) = Eigen::MatrixXcd::Identity(n, n);
  b.bottomRows(n) = -I * g.cast<std::complex<double>>();
  // B (B*B)^{-1} B* with B*B = I + G^2 real symmetric positive definite.
  Eigen::MatrixXd gram = Eigen::MatrixXd::Identity(n, n) + g * g;
  Eigen::MatrixXcd inv = gram.llt().solve(Eigen::MatrixXd::Identity(n, n)).cast<std::complex<double>>();
  return b * inv * b.adjoint();
}

double polarization_distance(const Eigen::MatrixXd& ga, const Eigen::MatrixXd& gb) {
  return (polarization_projector(ga) - polarization_projector(gb)).norm();
}

double distance_to_real(const Eigen::MatrixXd& g) {
  const Eigen::Index n = g.rows();
  Eigen::MatrixXcd real = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  real.bottomRightCorner(n, n) = Eigen::MatrixXcd::Identity(n, n);
  return (polarization_projector(g) - real).norm();
}

Eigen::MatrixXcd mixed_limit_projector(const Eigen::MatrixXd& g0, const Eigen::VectorXd& nu) {
  const Eigen::Index n = g0.rows();
  const std::complex<double> I(0.0, 1.0);
  // Orthonormal basis of nu^perp from a full QR of nu.
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(nu);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd perp = q.rightCols(n - 1);
  Eigen::MatrixXcd basis = Eigen::MatrixXcd::Zero(2 * n, n);
  basis.block(n, 0, n, 1) = nu.cast<std::complex<double>>();
  basis.block(0, 1, n, n - 1) = perp.cast<std::complex<double>>();
  basis.block(n, 1, n, n - 1) = -I * (g0 * perp).cast<std::complex<double>>();
  return projector_from_basis(basis);
}

double metric_length(const Polytope& p, const Generator& gen, double s, const std::vector<Eigen::VectorXd>& path) {
  const int n = p.dim();
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    Eigen::VectorXd a = path[k], b = path[k + 1];
    Eigen::VectorXd dx = b.head(n) - a.head(n), dth = b.tail(n) - a.tail(n);
    auto f = [&](double t, std::span<double> out) {
      Eigen::VectorXd x = a.head(n) + t * dx;
      Eigen::MatrixXd g = ray_jet(p, gen, s, x).hess;
      double q = dx.dot(g * dx);
      if (dth.squaredNorm() > 0) q += dth.dot(g.llt().solve(dth));
      out[0] = std::sqrt(std::max(q, 0.0));
    };
    std::vector<double> breaks{0.0, 1.0};
    // Align panels with support edges met along the segment.
    for (const auto& r : gen.ridges()) {
      double den = r.normal.dot(dx);
      if (std::abs(den) < 1e-300) continue;
      double t = (r.offset - r.normal.dot(a.head(n))) / den;
      if (t > 0.0 && t < 1.0) breaks.push_back(t);
    }
    QuadOptions q;
    q.rel_tol = 1e-13;
    total += integrate_1d(f, 1, breaks, q).values[0];
  }
  return total;
}

}  // namespace toric
