#pragma once

// Convex smoothings of a piecewise-linear f that agree with f off a slab
// thickening of its non-differentiability locus, and the checker for the
// "nice family" conditions a) to e).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "toric/generators.hpp"
#include "toric/testconfig.hpp"

namespace toric {

/// f is written as a_0(x) + h(t) with t = T x, where the rows of T are a
/// maximal independent set of wall normals (completed to a unimodular frame).
/// h is mollified by a tensor kernel of radius r in t only, so the Hessian is
/// T^t (Hess h_r) T and has rank at most the number of independent walls
/// within reach. r = eps / max_w sum_k |lambda_wk| where nu_w = sum lambda_wk
/// nu_k, which keeps psi = f wherever every wall coordinate is >= eps away.
/// Supports up to two independent wall directions.
class SmoothedPL : public Generator {
 public:
  SmoothedPL(const Decomposition& d, double eps, KernelKind kernel);

  int dim() const override { return n_; }
  GenJet jet(const Eigen::VectorXd& x) const override;
  bool in_support(const Eigen::VectorXd& x) const override;
  std::string kind() const override { return "pl-smooth"; }
  std::vector<Ridge> ridges() const override;

  double epsilon() const { return eps_; }
  KernelKind kernel() const { return kernel_; }
  double radius() const { return r_; }
  int directions() const { return k_; }
  const Eigen::MatrixXd& wall_matrix() const { return T_; }
  const FaceFrame& frame() const { return frame_; }
  const Decomposition& decomposition() const { return d_; }

  struct Hinge {
    double at;     // breakpoint in t
    double kappa;  // slope jump
  };
  const std::vector<Hinge>& hinges() const { return hinges_; }

 private:
  void jet_1d(double t, double& h, double& dh, double& d2h) const;
  void jet_2d(const Eigen::Vector2d& t, double& h, Eigen::Vector2d& dh, Eigen::Matrix2d& d2h) const;

  Decomposition d_;
  double eps_;
  KernelKind kernel_;
  int n_ = 0;
  int k_ = 0;
  double r_ = 0.0;
  FaceFrame frame_;
  Eigen::MatrixXd T_;        // k x n
  Eigen::VectorXd g0_;
  double b0_ = 0.0;
  Eigen::MatrixXd c_;        // pieces x k, slopes of h
  Eigen::VectorXd e_;        // offsets of h
  double h_left_slope_ = 0.0, h_left_offset_ = 0.0;  // k == 1
  std::vector<Hinge> hinges_;
};

/// Strictly convex variant along the walls: adds mu * theta(tau)^3 * |u - u0|^2
/// per hinge, tau the wall coordinate and u the parallel coordinates. mu is
/// chosen from analytic bounds so convexity is preserved; the Hessian gains
/// full rank on the walls. Requires a single wall direction.
class StrictSmoothedPL : public Generator {
 public:
  explicit StrictSmoothedPL(std::shared_ptr<const SmoothedPL> base);

  int dim() const override { return base_->dim(); }
  GenJet jet(const Eigen::VectorXd& x) const override;
  bool in_support(const Eigen::VectorXd& x) const override { return base_->in_support(x); }
  std::string kind() const override { return "pl-smooth-strict"; }
  std::vector<Ridge> ridges() const override { return base_->ridges(); }
  double mu() const { return mu_; }

 private:
  std::shared_ptr<const SmoothedPL> base_;
  Eigen::MatrixXd par_;  // parallel rows
  Eigen::VectorXd u0_;
  double mu_ = 0.0;
};

std::shared_ptr<const SmoothedPL> build_nice_smoothing(const Decomposition& d, double eps,
                                                       KernelKind kernel = KernelKind::Smooth);
std::shared_ptr<const StrictSmoothedPL> build_strict_smoothing(const Decomposition& d, double eps,
                                                               KernelKind kernel = KernelKind::Smooth);

struct NiceCondition {
  std::string id;  // "a" .. "e"
  std::string description;
  bool pass = true;
  double worst = 0.0;
  std::string detail;
};

struct NiceReport {
  std::vector<NiceCondition> conditions;
  bool all_pass() const;
  const NiceCondition& get(const std::string& id) const;
};

using SmoothingFactory = std::function<GeneratorPtr(double eps)>;

/// Checks conditions a) to e) on the family eps_list (at least two values).
/// `samples` are points of P; points on every face of W are added internally.
NiceReport verify_nice_family(const Decomposition& d, const SmoothingFactory& make, std::vector<double> eps_list,
                              const std::vector<Eigen::VectorXd>& samples);

/// Deterministic uniform samples of P by rejection from its bounding box.
std::vector<Eigen::VectorXd> sample_polytope(const Polytope& p, int count, std::uint64_t seed, double margin = 0.0);

}  // namespace toric
