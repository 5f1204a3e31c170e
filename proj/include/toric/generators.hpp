#pragma once

// Convex generators psi on P with analytic value, gradient and Hessian.

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toric/kernels.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct GenJet {
  double value = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

/// Hyperplane <normal, x> = offset across which psi changes regime.
struct Ridge {
  Eigen::VectorXd normal;
  double offset = 0.0;
};

class Generator {
 public:
  virtual ~Generator() = default;
  virtual int dim() const = 0;
  virtual GenJet jet(const Eigen::VectorXd& x) const = 0;
  /// False only where Hess psi is known to vanish identically nearby.
  virtual bool in_support(const Eigen::VectorXd& x) const = 0;
  virtual std::string kind() const = 0;
  /// Support edges and centres, used to align quadrature panels.
  virtual std::vector<Ridge> ridges() const { return {}; }
  double value(const Eigen::VectorXd& x) const { return jet(x).value; }
};

using GeneratorPtr = std::shared_ptr<const Generator>;

class ZeroGenerator : public Generator {
 public:
  explicit ZeroGenerator(int dim) : dim_(dim) {}
  int dim() const override { return dim_; }
  GenJet jet(const Eigen::VectorXd& x) const override;
  bool in_support(const Eigen::VectorXd&) const override { return false; }
  std::string kind() const override { return "zero"; }

 private:
  int dim_;
};

struct BumpSpec {
  double m = 0.0;
  double alpha = 1.0;
  double A = 1.0;
  KernelKind kernel = KernelKind::CosineSquared;

  Bump1D profile() const { return {m, alpha, A, kernel}; }
};

/// 1-D generator psi'' = sum of bumps; psi and psi' vanish left of the first
/// support, and psi = sum_k A_k (x - m_k) right of every support.
class BumpGenerator : public Generator {
 public:
  explicit BumpGenerator(std::vector<BumpSpec> bumps) : bumps_(std::move(bumps)) {}
  int dim() const override { return 1; }
  GenJet jet(const Eigen::VectorXd& x) const override;
  bool in_support(const Eigen::VectorXd& x) const override;
  std::string kind() const override { return "bumps"; }
  std::vector<Ridge> ridges() const override;
  const std::vector<BumpSpec>& bumps() const { return bumps_; }
  /// psi, psi', psi'' at a scalar point.
  Bump1D::Jet eval(double x) const;

 private:
  std::vector<BumpSpec> bumps_;
};

struct Wall {
  FaceFrame frame;  // codimension one
  BumpSpec bump;    // in the transverse coordinate, centred at the wall
};

/// psi(x) = sum_i psi_i(<nu_i, x>) with psi_i a single bump profile.
class WallSum : public Generator {
 public:
  WallSum(int dim, std::vector<Wall> walls) : dim_(dim), walls_(std::move(walls)) {}
  int dim() const override { return dim_; }
  GenJet jet(const Eigen::VectorXd& x) const override;
  bool in_support(const Eigen::VectorXd& x) const override;
  std::string kind() const override { return "wall-sum"; }
  std::vector<Ridge> ridges() const override;
  const std::vector<Wall>& walls() const { return walls_; }

 private:
  int dim_;
  std::vector<Wall> walls_;
};

/// Validates ordering, disjointness and placement of the bumps in P.
std::shared_ptr<const BumpGenerator> build_bump_generator(const Polytope& p, std::vector<BumpSpec> bumps);
std::shared_ptr<const WallSum> build_wall_sum(const Polytope& p, std::vector<Wall> walls);

/// Evaluates psi at x, requiring x in P (within 1e-12).
GenJet eval_generator(const Generator& gen, const Polytope& p, const Eigen::VectorXd& x);

/// Numerical rank with the threshold lambda > 1e-8 * max(lambda_max, 1).
int hessian_rank(const Eigen::MatrixXd& h);
double min_eigenvalue(const Eigen::MatrixXd& h);

}  // namespace toric
