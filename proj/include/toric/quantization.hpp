#pragma once

// Fiber densities of monomial sections along the ray g_s = g_P + s psi:
// log |sigma^m_s|^2-density L(x) = -h0_m(x) - s f_m(x), their L1 norms and the
// coherent state transform coefficients.

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "toric/generators.hpp"
#include "toric/polytope.hpp"
#include "toric/quadrature.hpp"

namespace toric {

/// f_m(x) = (x - m) . grad psi(x) - psi(x).
double f_m(const Generator& gen, const Eigen::VectorXd& m, const Eigen::VectorXd& x);
/// -h0_m(x) = sum_r (1/2)[ell_r(m) log ell_r(x) + ell_r(m) - ell_r(x)], the
/// logarithm of the s = 0 density, extended to the boundary with 0 log 0 = 0
/// (returns -infinity where ell_r(x) = 0 < ell_r(m)).
double minus_h0_m(const Polytope& p, const Eigen::VectorXd& m, const Eigen::VectorXd& x);

using TestFunction = std::function<double(const Eigen::VectorXd&)>;

struct DensityOptions {
  bool weighted = true;      // include the e^{-h0_m} factor
  double rel_tol_1d = 1e-10;
  double rel_tol_2d = 1e-6;
  int max_panels = 400000;
  double max_s = 1e4;
};

class SectionDensity {
 public:
  SectionDensity(const Polytope& p, GeneratorPtr gen, Eigen::VectorXd m, double s, DensityOptions opts = {});

  const Polytope& polytope() const { return p_; }
  const Eigen::VectorXd& m() const { return m_; }
  double s() const { return s_; }
  bool weighted() const { return opts_.weighted; }

  double log_density(const Eigen::VectorXd& x) const;
  /// log of int_P e^L dx.
  double log_integral() const { return log_integral_; }
  /// log[(2 pi)^n int_P e^L dx].
  double log_l1_norm() const;
  /// e^{L(x)} / int_P e^L.
  double normalized(const Eigen::VectorXd& x) const;
  /// int_P rho tau for each tau, rho the normalized density.
  std::vector<double> pair(const std::vector<TestFunction>& taus) const;
  /// Raw shifted integrals int_P e^{L - shift} tau (component 0 is tau = 1).
  QuadResult integrate(const std::vector<TestFunction>& taus) const;
  double shift() const { return shift_; }

 private:
  Polytope p_;
  GeneratorPtr gen_;
  Eigen::VectorXd m_;
  double s_;
  DensityOptions opts_;
  double shift_ = 0.0;
  double log_integral_ = 0.0;
};

struct GcstImage {
  double log_coefficient = 0.0;  // -s psi(m)
  double coefficient = 1.0;
  /// log of the scalar image density e^{-s psi(m)} e^{L(x)}.
  std::function<double(const Eigen::VectorXd&)> log_density;
};

/// Requires m to be a lattice point of P.
GcstImage gcst_image(const Polytope& p, GeneratorPtr gen, const IVec& m, double s);

/// Lattice points of P, i.e. the monomial basis.
std::vector<IVec> basis_census(const Polytope& p);

/// Vertices of P as a counter-clockwise polygon (dim 2).
std::vector<Eigen::Vector2d> polygon_of(const Polytope& p);

/// int_P e^{log_f} tau over P with the panels aligned to the ridges and to
/// the lines through `focus`. Returns the shifted integrals plus the shift.
QuadResult integrate_log_density(const Polytope& p, const std::function<double(const Eigen::VectorXd&)>& log_f,
                                 double shift, const std::vector<TestFunction>& taus, const std::vector<Ridge>& ridges,
                                 const Eigen::VectorXd& focus, const QuadOptions& opts);

}  // namespace toric
