#pragma once

// Convergence diagnostics along the ray: pairings against a fixed battery of
// test functions with rate fits, distances between polarizations, and
// lengths in the degenerating metrics.

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toric/potentials.hpp"
#include "toric/quantization.hpp"

namespace toric {

struct BatteryMember {
  std::string name;
  TestFunction f;
};

/// 1, x_i, x_i x_j, cos(pi x_i / diam) and a compact bump at the centroid.
std::vector<BatteryMember> standard_battery(const Polytope& p);
std::vector<TestFunction> functions_of(const std::vector<BatteryMember>& battery);

enum class RateModel { Power, Exponential, None };

struct RateFit {
  std::vector<double> s;
  std::vector<double> errors;
  RateModel model = RateModel::None;
  double power_exponent = 0.0, power_residual = 0.0;  // error ~ C s^{-p}
  double exp_rate = 0.0, exp_residual = 0.0;          // error ~ C e^{-g s}
  double exponent() const { return model == RateModel::Exponential ? exp_rate : power_exponent; }
};

/// Least squares on log-log and semilog scales; points with zero error are
/// dropped. The model with the smaller rms log-residual is selected.
RateFit fit_rate(const std::vector<double>& s, const std::vector<double>& errors);
std::string model_name(RateModel m);

struct Diagnostic {
  std::vector<double> s;
  std::vector<std::vector<double>> per_tau;  // [s index][tau index]
  std::vector<double> targets;
  RateFit fit;
  double final_error() const { return fit.errors.empty() ? 0.0 : fit.errors.back(); }
  bool decreasing(double slack = 0.05) const;
};

/// max_tau |pair(rho_s, tau) - tau(m)| for m in the open support.
Diagnostic delta_diagnostic(const Polytope& p, GeneratorPtr gen, const Eigen::VectorXd& m,
                            const std::vector<double>& s_grid, const std::vector<BatteryMember>& battery, bool weighted);

/// Mean of tau over `region` (a subset of P) against e^{-h0_m} (weighted)
/// or uniformly.
std::vector<double> region_means(const Polytope& p, const Polytope& region, const Eigen::VectorXd& m,
                                 const std::vector<BatteryMember>& battery, bool weighted);

/// Errors against the region means.
Diagnostic uniform_diagnostic(const Polytope& p, GeneratorPtr gen, const Eigen::VectorXd& m, const Polytope& region,
                              const std::vector<double>& s_grid, const std::vector<BatteryMember>& battery,
                              bool weighted);

/// Separable test function tau_par(x_F) * tau_perp(x_F^perp), both given as
/// functions of x.
struct SeparableTest {
  std::string name;
  TestFunction parallel;
  TestFunction transverse;
};

/// Limit tau_perp(m) times the chord mean of tau_par, the chord being
/// { x in P : transverse(x) = transverse(m) } (codimension one, dim 2).
Diagnostic face_delta_diagnostic(const Polytope& p, GeneratorPtr gen, const Eigen::VectorXd& m, const FaceFrame& frame,
                                 const std::vector<double>& s_grid, const std::vector<SeparableTest>& taus,
                                 bool weighted);

/// Orthogonal projector onto { (a, -i G a) } in C^{2n}.
Eigen::MatrixXcd polarization_projector(const Eigen::MatrixXd& g);
/// Projector onto the column span of an arbitrary full-rank basis.
Eigen::MatrixXcd projector_from_basis(const Eigen::MatrixXcd& basis);
/// Frobenius norm of the projector difference.
double polarization_distance(const Eigen::MatrixXd& ga, const Eigen::MatrixXd& gb);
/// Distance to the real polarization spanned by the angular directions (0, b).
double distance_to_real(const Eigen::MatrixXd& g);
/// Mixed plane span{(0, nu)} + {(a, -i G0 a) : <nu, a> = 0}.
Eigen::MatrixXcd mixed_limit_projector(const Eigen::MatrixXd& g0, const Eigen::VectorXd& nu);

/// Length of a polyline in (x, theta) under dx^t G_s dx + dtheta^t G_s^{-1} dtheta.
double metric_length(const Polytope& p, const Generator& gen, double s, const std::vector<Eigen::VectorXd>& path);

}  // namespace toric
