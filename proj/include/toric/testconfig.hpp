#pragma once

// Combinatorics of a piecewise-linear convex f on P: the sub-polytopes where a
// single piece is active, the faces of the non-differentiability locus W, the
// slab thickening W_eps, and the (n+1)-dimensional polytope Q.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toric/pl_convex.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct Face {
  std::vector<int> pieces;  // equal-active set (indices into the pruned f)
  int codim = 0;
  std::vector<RVec> vertices;
  RVec centroid;
  std::optional<FaceFrame> frame;
  std::string frame_error;
};

struct SubPolytope {
  int piece = 0;
  Polytope poly;
};

struct Decomposition {
  Polytope base;
  PLConvex pl;  // pruned
  std::vector<SubPolytope> parts;
  std::vector<Face> faces;

  int max_codim() const;
  /// Index of the part whose interior contains x (by strict activity), or -1.
  int part_of(const Eigen::VectorXd& x, double tol = 1e-12) const;
};

/// Faces of W: every set S of >= 2 pieces whose equality locus meets the
/// interior of P in the expected codimension and is exactly the active set
/// there. Sorted by codimension, then lexicographically by S.
std::vector<Face> nondiff_locus(const PLConvex& f, const Polytope& p);

Decomposition decompose(const PLConvex& f, const Polytope& p);

struct ThickeningHit {
  bool inside = false;
  int face = -1;  // index into Decomposition::faces
};

/// x lies in the slab of face F when every transverse coordinate is within
/// eps of c_F and its projection onto the affine hull of F, along the
/// transverse frame directions, has exactly the pieces of F active. Among
/// containing slabs the face of maximal codimension wins.
ThickeningHit thickening_membership(const Decomposition& d, double eps, const Eigen::VectorXd& x);

struct QPolytope {
  Polytope q;
  Rational K;
  bool integral = false;
};

/// Q = { (x, y) : x in P, 0 <= y <= K - f(x) }. Throws InputError if K < max f.
QPolytope build_Q(const PLConvex& f, const Polytope& p, const Rational& K);

struct CeilingPiece {
  int part = 0;
  int piece = 0;
  std::vector<RVec> vertices;  // (x, K - a_piece(x)) over the vertices of P_j
};

std::vector<CeilingPiece> central_fiber(const Decomposition& d, const QPolytope& q);

}  // namespace toric
