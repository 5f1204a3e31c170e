#pragma once

// Symplectic potentials g_s = g_P + s psi on the interior of P, Abreu's
// determinant identity and the Legendre transform to complex coordinates.

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "toric/generators.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct PotentialJet {
  double value = 0.0;
  Eigen::VectorXd grad;  // y
  Eigen::MatrixXd hess;  // G
};

/// Smallest facet value accepted for potential evaluation.
inline constexpr double kMinEll = 1e-14;

/// g_P = sum_r (1/2) ell_r log ell_r with analytic gradient and Hessian.
PotentialJet guillemin_jet(const Polytope& p, const Eigen::VectorXd& x);
/// g_P + s psi.
PotentialJet ray_jet(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& x);

using PotentialFn = std::function<PotentialJet(const Eigen::VectorXd&)>;

struct DetSample {
  Eigen::VectorXd x;
  double min_ell = 0.0;
  double det = 0.0;
  double delta = 0.0;  // [det G * prod ell]^{-1}
  bool positive_definite = false;
};

struct DetReport {
  std::vector<DetSample> samples;
  bool all_positive = true;  // G positive definite and delta > 0 everywhere
  bool bounded = true;       // delta finite and below 1e6
  double min_delta = 0.0, max_delta = 0.0;
};

DetReport det_identity_check(const Polytope& p, const PotentialFn& potential, const std::vector<Eigen::VectorXd>& xs);
DetReport det_identity_check(const Polytope& p, const Generator& gen, double s, const std::vector<Eigen::VectorXd>& xs);

/// y = grad g_s(x).
Eigen::VectorXd legendre_forward(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& x);

struct LegendreResult {
  Eigen::VectorXd x;
  double residual = 0.0;
  int iterations = 0;
};

/// Solves grad g_s(x) = y by damped Newton on g_s - <y, x>. Throws
/// NumericalError if the residual does not reach 1e-10 (relative to
/// max(1, |y|)) within 200 iterations.
LegendreResult legendre_inverse(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& y,
                                const Eigen::VectorXd& guess);
LegendreResult legendre_inverse(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& y);

/// Kahler potential h(y) = <x(y), y> - g_s(x(y)).
double kahler_potential(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& y);

/// log w = y + i theta with theta reduced to (-pi, pi].
std::vector<std::complex<double>> holo_log(const Polytope& p, const Generator& gen, double s, const Eigen::VectorXd& x,
                                           const Eigen::VectorXd& theta);

}  // namespace toric
