#pragma once

// Lattice polytopes in facet form, { x : <x, v_j> - lambda_j >= 0 }.

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "toric/exact.hpp"

namespace toric {

struct Facet {
  IVec normal;      // primitive, inward pointing
  Rational offset;  // lambda_j
};

enum class DelzantPolicy { Require, Report };

class Polytope {
 public:
  /// Builds the polytope, computes vertices and drops redundant halfspaces.
  /// Throws InputError for non-primitive normals, empty, unbounded or
  /// lower-dimensional input, and (with DelzantPolicy::Require) for any
  /// vertex whose incident normals are not a lattice basis.
  static Polytope from_facets(int dim, std::vector<Facet> facets, bool corrected = false,
                              DelzantPolicy policy = DelzantPolicy::Require);

  int dim() const { return dim_; }
  bool corrected() const { return corrected_; }
  bool delzant() const { return delzant_; }
  const std::string& delzant_report() const { return delzant_report_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<RVec>& vertices() const { return vertices_; }
  std::vector<Eigen::VectorXd> vertices_double() const;

  /// ell_j(x) = <x, v_j> - lambda_j for every facet.
  Eigen::VectorXd ell(const Eigen::VectorXd& x) const;
  RVec ell(const RVec& x) const;
  bool contains(const Eigen::VectorXd& x, double tol = 0.0) const;
  bool contains(const RVec& x) const;
  bool interior(const Eigen::VectorXd& x, double min_ell = 0.0) const;

  /// P ∩ Z^n in lexicographic order.
  std::vector<IVec> integral_points() const;

  /// Facet indices through a vertex.
  std::vector<int> tight_facets(const RVec& x) const;

  Eigen::VectorXd centroid_of_vertices() const;
  /// Lebesgue volume; exact for dim <= 2, throws otherwise.
  Rational volume() const;
  /// Vertices of a polygon in counter-clockwise order (dim == 2 only).
  std::vector<Eigen::VectorXd> polygon_ccw() const;
  /// Bounding box [lo, hi] of the vertices.
  std::pair<Eigen::VectorXd, Eigen::VectorXd> bounding_box() const;
  double diameter() const;

 private:
  int dim_ = 0;
  bool corrected_ = false;
  bool delzant_ = true;
  std::string delzant_report_;
  std::vector<Facet> facets_;
  std::vector<RVec> vertices_;
};

/// Unimodular coordinates adapted to a face: parallel coordinates first,
/// then one transverse coordinate <nu_k, x> per face normal.
struct FaceFrame {
  int dim = 0;
  int codim = 0;
  IMat unimodular;  // rows: dim - codim parallel rows, then the codim normals
  IMat inverse;
  RVec offsets;     // c_F: the face lies in { transverse = c_F }

  Eigen::MatrixXd matrix() const;
  Eigen::VectorXd to_frame(const Eigen::VectorXd& x) const;
  Eigen::VectorXd parallel(const Eigen::VectorXd& x) const;
  Eigen::VectorXd transverse(const Eigen::VectorXd& x) const;
  /// Columns of the inverse belonging to the transverse coordinates: moving x
  /// along column k changes transverse coordinate k by one and nothing else.
  Eigen::MatrixXd transverse_directions() const;
  Eigen::MatrixXd parallel_directions() const;
  IVec normal(int k) const { return unimodular[dim - codim + k]; }
};

/// Completes linearly independent primitive normals to a unimodular frame.
/// Throws InputError when a normal is not primitive or the normals do not span
/// a saturated sublattice of Z^n.
FaceFrame face_frame(int dim, const IMat& normals, const RVec& offsets);
FaceFrame face_frame(const Polytope& p, const IMat& normals, const RVec& offsets);

}  // namespace toric
