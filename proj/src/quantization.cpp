#include "toric/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace toric {

double f_m(const Generator& gen, const Eigen::VectorXd& m, const Eigen::VectorXd& x) {
  GenJet j = gen.jet(x);
  return (x - m).dot(j.grad) - j.value;
}

double minus_h0_m(const Polytope& p, const Eigen::VectorXd& m, const Eigen::VectorXd& x) {
  Eigen::VectorXd lm = p.ell(m), lx = p.ell(x);
  double acc = 0.0;
  for (Eigen::Index r = 0; r < lx.size(); ++r) {
    double a = std::max(lm[r], 0.0), b = std::max(lx[r], 0.0);
    double log_term;
    if (a == 0.0) {
      log_term = 0.0;
    } else if (b == 0.0) {
      return -std::numeric_limits<double>::infinity();
    } else {
      log_term = a * std::log(b);
    }
    acc += 0.5 * (log_term + a - b);
  }
  return acc;
}

std::vector<Eigen::Vector2d> polygon_of(const Polytope& p) {
  std::vector<Eigen::Vector2d> out;
  for (const auto& v : p.polygon_ccw()) out.emplace_back(v[0], v[1]);
  return out;
}

QuadResult integrate_log_density(const Polytope& p, const std::function<double(const Eigen::VectorXd&)>& log_f,
                                 double shift, const std::vector<TestFunction>& taus, const std::vector<Ridge>& ridges,
                                 const Eigen::VectorXd& focus, const QuadOptions& opts) {
  const int comps = 1 + static_cast<int>(taus.size());
  if (p.dim() == 1) {
    auto [lo, hi] = p.bounding_box();
    std::vector<double> breaks{lo[0], hi[0]};
    auto add = [&](double b) {
      if (b > lo[0] && b < hi[0]) breaks.push_back(b);
    };
    add(focus[0]);
    for (const auto& r : ridges) add(r.offset / r.normal[0]);
    Eigen::VectorXd x(1);
    auto f = [&](double t, std::span<double> out) {
      x[0] = t;
      double w = std::exp(log_f(x) - shift);
      out[0] = w;
      for (std::size_t i = 0; i < taus.size(); ++i) out[i + 1] = w * taus[i](x);
    };
    return integrate_1d(f, comps, breaks, opts);
  }
  if (p.dim() == 2) {
    std::vector<CutLine> cuts;
    for (const auto& r : ridges) cuts.push_back({Eigen::Vector2d(r.normal[0], r.normal[1]), r.offset});
    cuts.push_back({Eigen::Vector2d(1, 0), focus[0]});
    cuts.push_back({Eigen::Vector2d(0, 1), focus[1]});
    Eigen::VectorXd x(2);
    auto f = [&](const Eigen::Vector2d& t, std::span<double> out) {
      x[0] = t.x();
      x[1] = t.y();
      double w = std::exp(log_f(x) - shift);
      out[0] = w;
      for (std::size_t i = 0; i < taus.size(); ++i) out[i + 1] = w * taus[i](x);
    };
    return integrate_polygon(f, comps, polygon_of(p), cuts, opts, 2);
  }
  throw InputError("density quadrature is implemented for dimensions 1 and 2");
}

SectionDensity::SectionDensity(const Polytope& p, GeneratorPtr gen, Eigen::VectorXd m, double s, DensityOptions opts)
    : p_(p), gen_(std::move(gen)), m_(std::move(m)), s_(s), opts_(opts) {
  if (p_.dim() > 2) throw InputError("densities are implemented for dimensions 1 and 2");
  if (!(s_ >= 0.0) || !std::isfinite(s_)) throw InputError("s must be finite and nonnegative");
  if (s_ > opts_.max_s) {
    std::ostringstream os;
    os << "s = " << s_ << " exceeds the cap " << opts_.max_s;
    throw InputError(os.str());
  }
  if (!p_.contains(m_, 1e-12)) throw InputError("m must lie in P");
  // Shift by the largest sampled log-density.
  double best = log_density(m_);
  auto consider = [&](const Eigen::VectorXd& x) {
    double v = log_density(x);
    if (std::isfinite(v)) best = std::isfinite(best) ? std::max(best, v) : v;
  };
  auto [lo, hi] = p_.bounding_box();
  if (p_.dim() == 1) {
    Eigen::VectorXd x(1);
    for (int i = 0; i <= 4000; ++i) {
      x[0] = lo[0] + (hi[0] - lo[0]) * i / 4000.0;
      consider(x);
    }
  } else {
    Eigen::VectorXd x(2);
    for (int i = 0; i <= 200; ++i) {
      for (int j = 0; j <= 200; ++j) {
        x << lo[0] + (hi[0] - lo[0]) * i / 200.0, lo[1] + (hi[1] - lo[1]) * j / 200.0;
        if (p_.contains(x, 0.0)) consider(x);
      }
    }
  }
  if (!std::isfinite(best)) throw NumericalError("density vanishes on all samples");
  shift_ = best;
  QuadResult q = integrate({});
  if (!q.converged) throw NumericalError("density quadrature did not converge");
  if (!(q.values[0] > 0.0)) throw NumericalError("density integrates to zero");
  log_integral_ = shift_ + std::log(q.values[0]);
}

double SectionDensity::log_density(const Eigen::VectorXd& x) const {
  double l = opts_.weighted ? minus_h0_m(p_, m_, x) : 0.0;
  if (!std::isfinite(l)) return l;
  if (s_ != 0.0) l -= s_ * f_m(*gen_, m_, x);
  return l;
}

double SectionDensity::log_l1_norm() const {
  return p_.dim() * std::log(2.0 * std::numbers::pi) + log_integral_;
}

double SectionDensity::normalized(const Eigen::VectorXd& x) const {
  return std::exp(log_density(x) - log_integral_);
}

QuadResult SectionDensity::integrate(const std::vector<TestFunction>& taus) const {
  QuadOptions q;
  q.rel_tol = p_.dim() == 1 ? opts_.rel_tol_1d : opts_.rel_tol_2d;
  q.max_panels = opts_.max_panels;
  return integrate_log_density(
      p_, [this](const Eigen::VectorXd& x) { return log_density(x); }, shift_, taus, gen_->ridges(), m_, q);
}

std::vector<double> SectionDensity::pair(const std::vector<TestFunction>& taus) const {
  QuadResult q = integrate(taus);
  if (!q.converged) throw NumericalError("pairing quadrature did not converge");
  std::vector<double> out;
  for (std::size_t i = 0; i < taus.size(); ++i) out.push_back(q.values[i + 1] / q.values[0]);
  return out;
}

GcstImage gcst_image(const Polytope& p, GeneratorPtr gen, const IVec& m, double s) {
  if (!p.contains(to_rational(m))) throw InputError("m is not a lattice point of P");
  Eigen::VectorXd mv = to_eigen(m);
  GcstImage img;
  img.log_coefficient = -s * gen->value(mv);
  img.coefficient = std::exp(img.log_coefficient);
  double lc = img.log_coefficient;
  img.log_density = [p, gen, mv, s, lc](const Eigen::VectorXd& x) {
    double l = minus_h0_m(p, mv, x);
    if (!std::isfinite(l)) return l;
    return lc + l - s * f_m(*gen, mv, x);
  };
  return img;
}

std::vector<IVec> basis_census(const Polytope& p) { return p.integral_points(); }

}  // namespace toric
