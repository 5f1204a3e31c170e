#pragma once

// Rational piecewise-linear convex functions f = max_i <g_i, x> + b_i.

#include <vector>

#include <Eigen/Dense>

#include "toric/exact.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct AffinePiece {
  RVec g;
  Rational b;

  Rational eval(const RVec& x) const { return dot(g, x) + b; }
  double eval(const Eigen::VectorXd& x) const;
};

class PLConvex {
 public:
  PLConvex() = default;
  PLConvex(int dim, std::vector<AffinePiece> pieces);

  int dim() const { return dim_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  int size() const { return static_cast<int>(pieces_.size()); }

  double eval(const Eigen::VectorXd& x) const;
  Rational eval(const RVec& x) const;
  /// Index of the first maximizing piece.
  int argmax(const Eigen::VectorXd& x) const;
  /// Pieces within tol of the maximum (exact ties for the rational overload).
  std::vector<int> active_set(const Eigen::VectorXd& x, double tol) const;
  std::vector<int> active_set(const RVec& x) const;

  /// Halfspaces { a_i >= a_k for all k != i }.
  std::vector<Halfspace> activity_region(int i) const;

  /// Drops duplicate pieces and pieces whose activity region meets P in a
  /// set of dimension < n. Order of the survivors is preserved.
  PLConvex pruned(const Polytope& p) const;
  /// max of f over P (attained at a vertex of some activity region).
  Rational max_on(const Polytope& p) const;

 private:
  int dim_ = 0;
  std::vector<AffinePiece> pieces_;
};

/// Halfspaces of a polytope in the generic form.
std::vector<Halfspace> polytope_halfspaces(const Polytope& p);

}  // namespace toric
