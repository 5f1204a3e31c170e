#include "toric/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "toric/exact.hpp"

namespace toric {

GenJet ZeroGenerator::jet(const Eigen::VectorXd&) const {
  return {0.0, Eigen::VectorXd::Zero(dim_), Eigen::MatrixXd::Zero(dim_, dim_)};
}

Bump1D::Jet BumpGenerator::eval(double x) const {
  Bump1D::Jet acc{0.0, 0.0, 0.0};
  for (const auto& b : bumps_) {
    auto j = b.profile().eval(x);
    acc.value += j.value;
    acc.slope += j.slope;
    acc.curvature += j.curvature;
  }
  return acc;
}

GenJet BumpGenerator::jet(const Eigen::VectorXd& x) const {
  auto j = eval(x[0]);
  GenJet out;
  out.value = j.value;
  out.grad = Eigen::VectorXd::Constant(1, j.slope);
  out.hess = Eigen::MatrixXd::Constant(1, 1, j.curvature);
  return out;
}

bool BumpGenerator::in_support(const Eigen::VectorXd& x) const {
  return std::any_of(bumps_.begin(), bumps_.end(),
                     [&](const BumpSpec& b) { return b.profile().open_support_contains(x[0]); });
}

GenJet WallSum::jet(const Eigen::VectorXd& x) const {
  GenJet out{0.0, Eigen::VectorXd::Zero(dim_), Eigen::MatrixXd::Zero(dim_, dim_)};
  for (const auto& w : walls_) {
    Eigen::VectorXd nu = to_eigen(w.frame.normal(0));
    auto j = w.bump.profile().eval(nu.dot(x));
    out.value += j.value;
    out.grad += j.slope * nu;
    out.hess += j.curvature * nu * nu.transpose();
  }
  return out;
}

bool WallSum::in_support(const Eigen::VectorXd& x) const {
  return std::any_of(walls_.begin(), walls_.end(), [&](const Wall& w) {
    return w.bump.profile().open_support_contains(to_eigen(w.frame.normal(0)).dot(x));
  });
}

namespace {

void check_bump(const BumpSpec& b) {
  if (!(b.alpha > 0.0) || !std::isfinite(b.alpha)) throw InputError("bump half-width must be positive");
  if (!(b.A > 0.0) || !std::isfinite(b.A)) throw InputError("bump mass must be positive");
  if (!std::isfinite(b.m)) throw InputError("bump centre must be finite");
}

}  // namespace

std::shared_ptr<const BumpGenerator> build_bump_generator(const Polytope& p, std::vector<BumpSpec> bumps) {
  if (p.dim() != 1) throw InputError("bump generators live on 1-dimensional polytopes");
  auto [lo, hi] = p.bounding_box();
  for (std::size_t k = 0; k < bumps.size(); ++k) {
    check_bump(bumps[k]);
    const auto& b = bumps[k];
    if (b.m < lo[0] || b.m > hi[0]) {
      std::ostringstream os;
      os << "bump centre " << b.m << " lies outside P";
      throw InputError(os.str());
    }
    if (k > 0) {
      const auto& a = bumps[k - 1];
      if (a.m >= b.m) throw InputError("bump centres must be strictly increasing");
      if (a.m + a.alpha > b.m - b.alpha) throw InputError("bump supports overlap");
    }
  }
  return std::make_shared<BumpGenerator>(std::move(bumps));
}

std::shared_ptr<const WallSum> build_wall_sum(const Polytope& p, std::vector<Wall> walls) {
  for (const auto& w : walls) {
    check_bump(w.bump);
    if (w.frame.dim != p.dim() || w.frame.codim != 1) throw InputError("wall frame must have codimension one");
    if (std::abs(w.bump.m - to_double(w.frame.offsets[0])) > 1e-12) {
      throw InputError("wall bump must be centred at the wall offset");
    }
  }
  return std::make_shared<WallSum>(p.dim(), std::move(walls));
}

GenJet eval_generator(const Generator& gen, const Polytope& p, const Eigen::VectorXd& x) {
  if (x.size() != p.dim() || gen.dim() != p.dim()) throw InputError("dimension mismatch");
  if (!p.contains(x, 1e-12)) throw InputError("point lies outside P");
  return gen.jet(x);
}

int hessian_rank(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (h + h.transpose()), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double thresh = 1e-8 * std::max(ev.cwiseAbs().maxCoeff(), 1.0);
  int r = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > thresh) ++r;
  }
  return r;
}

double min_eigenvalue(const Eigen::MatrixXd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (h + h.transpose()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace toric

namespace toric {

std::vector<Ridge> BumpGenerator::ridges() const {
  std::vector<Ridge> out;
  Eigen::VectorXd e = Eigen::VectorXd::Ones(1);
  for (const auto& b : bumps_) {
    for (double o : {b.m - b.alpha, b.m, b.m + b.alpha}) out.push_back({e, o});
  }
  return out;
}

std::vector<Ridge> WallSum::ridges() const {
  std::vector<Ridge> out;
  for (const auto& w : walls_) {
    Eigen::VectorXd nu = to_eigen(w.frame.normal(0));
    for (double o : {w.bump.m - w.bump.alpha, w.bump.m, w.bump.m + w.bump.alpha}) out.push_back({nu, o});
  }
  return out;
}

}  // namespace toric
