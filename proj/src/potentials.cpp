#include "toric/potentials.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace toric {

namespace {

void require_interior(const Polytope& p, const Eigen::VectorXd& ell) {
  if (ell.minCoeff() < kMinEll) {
    std::ostringstream os;
    os << "point is not interior to P (min ell = " << ell.minCoeff() << ")";
    throw InputError(os.str());
  }
  (void)p;
}

}  // namespace

PotentialJet guillemin_jet(const Polytope& p, const Eigen::VectorXd& x) {
  const int n = p.dim();
  Eigen::VectorXd ell = p.ell(x);
  require_interior(p, ell);
  PotentialJet out{0.0, Eigen::VectorXd::Zero(n), Eigen::MatrixXd::Zero(n, n)};
  for (std::size_t j = 0; j < p.facets().size(); ++j) {
    Eigen::VectorXd v = to_eigen(p.facets()[j].normal);
    double l = ell[static_cast<Eigen::Index>(j)];
    double lg = std::log(l);
    out.value += 0.5 * l * lg;
    out.grad += 0.5 * (lg + 1.0) * v;
    out.hess += (0.5 / l) * v * v.transpose();
  }
  return out;
}

PotentialJet ray_jet(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& x) {
  PotentialJet out = guillemin_jet(p, x);
  if (s == 0.0) return out;
  GenJet j = gen.jet(x);
  out.value += s * j.value;
  out.grad += s * j.grad;
  out.hess += s * j.hess;
  return out;
}

DetReport det_identity_check(const Polytope& p, const PotentialFn& potential, const std::vector<Eigen::VectorXd>& xs) {
  DetReport rep;
  bool first = true;
  for (const auto& x : xs) {
    DetSample smp;
    smp.x = x;
    Eigen::VectorXd ell = p.ell(x);
    smp.min_ell = ell.minCoeff();
    PotentialJet j = potential(x);
    Eigen::LLT<Eigen::MatrixXd> llt(j.hess);
    smp.positive_definite = llt.info() == Eigen::Success;
    smp.det = j.hess.determinant();
    double prod = ell.prod();
    smp.delta = 1.0 / (smp.det * prod);
    if (!smp.positive_definite || !(smp.delta > 0.0)) rep.all_positive = false;
    if (!std::isfinite(smp.delta) || std::abs(smp.delta) > 1e6) rep.bounded = false;
    if (first) {
      rep.min_delta = rep.max_delta = smp.delta;
      first = false;
    } else {
      rep.min_delta = std::min(rep.min_delta, smp.delta);
      rep.max_delta = std::max(rep.max_delta, smp.delta);
    }
    rep.samples.push_back(std::move(smp));
  }
  return rep;
}

DetReport det_identity_check(const Polytope& p, const Generator& gen, double s, const std::vector<Eigen::VectorXd>& xs) {
  return det_identity_check(p, [&](const Eigen::VectorXd& x) { return ray_jet(p, gen, s, x); }, xs);
}

Eigen::VectorXd legendre_forward(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& x) {
  return ray_jet(p, gen, s, x).grad;
}

LegendreResult legendre_inverse(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& y,
                                const Eigen::VectorXd& guess) {
  if (!p.interior(guess, kMinEll)) throw InputError("Legendre guess must be interior");
  const double tol = 1e-10 * std::max(1.0, y.cwiseAbs().maxCoeff());
  LegendreResult res;
  res.x = guess;
  PotentialJet j = ray_jet(p, gen, s, res.x);
  double phi = j.value - y.dot(res.x);
  for (res.iterations = 0; res.iterations < 200; ++res.iterations) {
    Eigen::VectorXd r = j.grad - y;
    res.residual = r.norm();
    if (res.residual <= tol) return res;
    Eigen::LLT<Eigen::MatrixXd> llt(j.hess);
    if (llt.info() != Eigen::Success) throw NumericalError("Hessian of g_s is not positive definite");
    Eigen::VectorXd step = -llt.solve(r);
    double slope = r.dot(step);
    double t = 1.0;
    bool accepted = false;
    for (int k = 0; k < 80; ++k, t *= 0.5) {
      Eigen::VectorXd xn = res.x + t * step;
      if (!p.interior(xn, kMinEll)) continue;
      PotentialJet jn = ray_jet(p, gen, s, xn);
      double phin = jn.value - y.dot(xn);
      // Armijo, relaxed by a rounding allowance near the minimum.
      if (phin <= phi + 1e-4 * t * slope + 1e-13 * (1.0 + std::abs(phi)) || jn.grad.dot(step) - y.dot(step) < 0.0) {
        res.x = xn;
        j = jn;
        phi = phin;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  res.residual = (j.grad - y).norm();
  if (res.residual <= tol) return res;
  std::ostringstream os;
  os << "Legendre inversion did not converge (residual " << res.residual << ")";
  throw NumericalError(os.str());
}

LegendreResult legendre_inverse(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& y) {
  return legendre_inverse(p, gen, s, y, p.centroid_of_vertices());
}

double kahler_potential(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& y) {
  auto res = legendre_inverse(p, gen, s, y);
  return res.x.dot(y) - ray_jet(p, gen, s, res.x).value;
}

std::vector<std::complex<double>> holo_log(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& x,
                                           const Eigen::VectorXd& theta) {
  Eigen::VectorXd y = legendre_forward(p, gen, s, x);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    double th = std::remainder(theta[i], 2.0 * std::numbers::pi);
    if (th <= -std::numbers::pi) th += 2.0 * std::numbers::pi;
    out.emplace_back(y[i], th);
  }
  return out;
}

}  // namespace toric
