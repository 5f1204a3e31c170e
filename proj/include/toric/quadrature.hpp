#pragma once

// Adaptive Gauss-Legendre quadrature on intervals and convex polygons for
// vector-valued integrands. Refinement is driven by a max-heap of panel
// errors; ties are broken by creation order so results are reproducible.

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace toric {

struct GaussRule {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (cached; thread-safe after first use).
const GaussRule& gauss_legendre(int n);

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 0.0;
  int max_panels = 400000;
  int order = 15;  // Gauss points per panel edge
};

struct QuadResult {
  std::vector<double> values;
  std::vector<double> errors;
  int panels = 0;
  bool converged = false;
};

using Integrand1D = std::function<void(double x, std::span<double> out)>;
using Integrand2D = std::function<void(const Eigen::Vector2d& x, std::span<double> out)>;

/// Integrates over [breaks.front(), breaks.back()], starting from one panel per
/// break interval. Convergence: |err_c| <= rel_tol * int|f_c| + abs_tol for
/// every component c.
QuadResult integrate_1d(const Integrand1D& f, int components, std::vector<double> breaks,
                        const QuadOptions& opts = {});

/// A line <normal, x> = offset used to pre-split polygons so that known
/// ridges of the integrand fall on panel edges.
struct CutLine {
  Eigen::Vector2d normal;
  double offset;
};

/// Clips a convex polygon (counter-clockwise) to { <normal,x> >= offset }.
std::vector<Eigen::Vector2d> clip_polygon(const std::vector<Eigen::Vector2d>& poly,
                                          const Eigen::Vector2d& normal, double offset);
double polygon_area(const std::vector<Eigen::Vector2d>& poly);

/// Integrates over a convex polygon given counter-clockwise, after splitting it
/// along the cut lines and fan-triangulating every piece from its centroid.
/// `seed_levels` uniform 4-way refinements are applied before adaptivity.
QuadResult integrate_polygon(const Integrand2D& f, int components, const std::vector<Eigen::Vector2d>& polygon,
                             const std::vector<CutLine>& cuts = {}, const QuadOptions& opts = {},
                             int seed_levels = 1);

}  // namespace toric
