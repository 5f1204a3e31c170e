#include "toric/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace toric {

namespace {

std::string format_point(const RVec& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << to_string(x[i]);
  os << ')';
  return os.str();
}

std::vector<Halfspace> as_halfspaces(const std::vector<Facet>& facets) {
  std::vector<Halfspace> hs;
  hs.reserve(facets.size());
  for (const auto& f : facets) hs.push_back({to_rational(f.normal), f.offset});
  return hs;
}

// The recession cone {d : V d >= 0} is nontrivial iff it contains an extreme
// ray, which lies on n-1 independent hyperplanes <v_j, d> = 0.
bool is_bounded(int dim, const std::vector<Facet>& facets) {
  RMat all;
  for (const auto& f : facets) all.push_back(to_rational(f.normal));
  if (rank(all) < dim) return false;
  auto check_ray = [&](const RVec& d) {
    for (const auto& f : facets) {
      if (dot(f.normal, d) < 0) return false;
    }
    return true;
  };
  const int m = static_cast<int>(facets.size());
  std::vector<int> idx(dim - 1);
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == dim - 1) {
      RMat a;
      for (int i : idx) a.push_back(to_rational(facets[i].normal));
      RMat ns = nullspace(a, dim);
      if (ns.size() != 1) return true;
      RVec neg = ns[0];
      for (auto& x : neg) x = -x;
      return !(check_ray(ns[0]) || check_ray(neg));
    }
    for (int i = start; i < m; ++i) {
      idx[depth] = i;
      if (!rec(i + 1, depth + 1)) return false;
    }
    return true;
  };
  return rec(0, 0);
}

}  // namespace

Polytope Polytope::from_facets(int dim, std::vector<Facet> facets, bool corrected, DelzantPolicy policy) {
  if (dim <= 0) throw InputError("polytope dimension must be positive");
  if (facets.size() < static_cast<std::size_t>(dim) + 1) throw InputError("too few facets for a bounded polytope");
  for (const auto& f : facets) {
    if (static_cast<int>(f.normal.size()) != dim) throw InputError("facet normal has wrong dimension");
    std::int64_t g = gcd_all(f.normal);
    if (g == 0) throw InputError("zero facet normal");
    if (g != 1) {
      std::ostringstream os;
      os << "facet normal is not primitive (gcd " << g << ")";
      throw InputError(os.str());
    }
  }
  if (!is_bounded(dim, facets)) throw InputError("polytope is unbounded");

  Polytope p;
  p.dim_ = dim;
  p.corrected_ = corrected;
  p.vertices_ = enumerate_vertices(dim, as_halfspaces(facets));
  if (p.vertices_.empty()) throw InputError("polytope is empty");
  if (affine_dimension(p.vertices_) < dim) throw InputError("polytope is not full-dimensional");

  // Keep facets whose tight vertices span a hyperplane; drop duplicates.
  std::vector<Facet> kept;
  for (const auto& f : facets) {
    bool dup = std::any_of(kept.begin(), kept.end(),
                           [&](const Facet& k) { return k.normal == f.normal && k.offset == f.offset; });
    if (dup) continue;
    std::vector<RVec> tight;
    for (const auto& v : p.vertices_) {
      if (dot(f.normal, v) == f.offset) tight.push_back(v);
    }
    if (affine_dimension(tight) >= dim - 1) kept.push_back(f);
  }
  p.facets_ = std::move(kept);

  std::ostringstream report;
  for (const auto& v : p.vertices_) {
    auto tight = p.tight_facets(v);
    bool ok = static_cast<int>(tight.size()) == dim;
    std::int64_t det = 0;
    if (ok) {
      IMat m;
      for (int t : tight) m.push_back(p.facets_[t].normal);
      det = determinant(m);
      ok = std::abs(det) == 1;
    }
    if (!ok) {
      p.delzant_ = false;
      report << "vertex " << format_point(v) << ": " << tight.size() << " incident facets";
      if (static_cast<int>(tight.size()) == dim) report << ", |det| = " << std::abs(det);
      report << "; ";
    }
  }
  p.delzant_report_ = report.str();
  if (!p.delzant_ && policy == DelzantPolicy::Require) {
    throw InputError("polytope is not Delzant: " + p.delzant_report_);
  }
  return p;
}

std::vector<Eigen::VectorXd> Polytope::vertices_double() const {
  std::vector<Eigen::VectorXd> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) out.push_back(to_eigen(v));
  return out;
}

Eigen::VectorXd Polytope::ell(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(facets_.size()));
  for (std::size_t j = 0; j < facets_.size(); ++j) {
    double acc = -to_double(facets_[j].offset);
    for (int i = 0; i < dim_; ++i) acc += static_cast<double>(facets_[j].normal[i]) * x[i];
    out[static_cast<Eigen::Index>(j)] = acc;
  }
  return out;
}

RVec Polytope::ell(const RVec& x) const {
  RVec out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(dot(f.normal, x) - f.offset);
  return out;
}

bool Polytope::contains(const Eigen::VectorXd& x, double tol) const {
  return (ell(x).array() >= -tol).all();
}

bool Polytope::contains(const RVec& x) const {
  for (const auto& f : facets_) {
    if (dot(f.normal, x) < f.offset) return false;
  }
  return true;
}

bool Polytope::interior(const Eigen::VectorXd& x, double min_ell) const {
  return (ell(x).array() > min_ell).all();
}

std::vector<IVec> Polytope::integral_points() const {
  IVec lo(dim_), hi(dim_);
  for (int i = 0; i < dim_; ++i) {
    Rational mn = vertices_[0][i], mx = vertices_[0][i];
    for (const auto& v : vertices_) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = static_cast<std::int64_t>(std::floor(to_double(mn))) - 1;
    hi[i] = static_cast<std::int64_t>(std::ceil(to_double(mx))) + 1;
  }
  std::vector<IVec> out;
  IVec cur = lo;
  while (true) {
    if (contains(to_rational(cur))) out.push_back(cur);
    int i = dim_ - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<int> Polytope::tight_facets(const RVec& x) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < facets_.size(); ++j) {
    if (dot(facets_[j].normal, x) == facets_[j].offset) out.push_back(static_cast<int>(j));
  }
  return out;
}

Eigen::VectorXd Polytope::centroid_of_vertices() const {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(dim_);
  for (const auto& v : vertices_) c += to_eigen(v);
  return c / static_cast<double>(vertices_.size());
}

std::vector<Eigen::VectorXd> Polytope::polygon_ccw() const {
  if (dim_ != 2) throw InputError("polygon_ccw requires a 2-dimensional polytope");
  auto pts = vertices_double();
  Eigen::VectorXd c = centroid_of_vertices();
  std::sort(pts.begin(), pts.end(), [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
  });
  return pts;
}

namespace {

// Exact area of the convex hull of planar points given in any order.
Rational convex_area(std::vector<RVec> pts) {
  if (pts.size() < 3) return Rational(0);
  RVec c{Rational(0), Rational(0)};
  for (const auto& v : pts) {
    c[0] += v[0];
    c[1] += v[1];
  }
  c[0] /= static_cast<std::int64_t>(pts.size());
  c[1] /= static_cast<std::int64_t>(pts.size());
  auto half = [&](const RVec& a) {
    Rational x = a[0] - c[0], y = a[1] - c[1];
    return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
  };
  std::sort(pts.begin(), pts.end(), [&](const RVec& a, const RVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    return cross > 0;
  });
  Rational twice(0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice) / 2;
}

}  // namespace

Rational Polytope::volume() const {
  if (dim_ == 1) {
    Rational mn = vertices_.front()[0], mx = vertices_.front()[0];
    for (const auto& v : vertices_) {
      mn = std::min(mn, v[0]);
      mx = std::max(mx, v[0]);
    }
    return mx - mn;
  }
  if (dim_ == 2) return convex_area(vertices_);
  if (dim_ == 3) {
    // Pyramids over the facets from the vertex centroid. A facet projected
    // along a coordinate k with normal entry v_k != 0 contributes
    // ell(c) * area(projection) / (3 |v_k|).
    RVec c(3, Rational(0));
    for (const auto& v : vertices_) {
      for (int i = 0; i < 3; ++i) c[i] += v[i];
    }
    for (auto& ci : c) ci /= static_cast<std::int64_t>(vertices_.size());
    Rational total(0);
    for (const auto& f : facets_) {
      int k = 0;
      while (f.normal[k] == 0) ++k;
      std::vector<RVec> proj;
      for (const auto& v : vertices_) {
        Rational ell = -f.offset;
        for (int i = 0; i < 3; ++i) ell += Rational(f.normal[i]) * v[i];
        if (ell != 0) continue;
        RVec q;
        for (int i = 0; i < 3; ++i) {
          if (i != k) q.push_back(v[i]);
        }
        proj.push_back(q);
      }
      Rational ell_c = -f.offset;
      for (int i = 0; i < 3; ++i) ell_c += Rational(f.normal[i]) * c[i];
      total += ell_c * convex_area(proj) / Rational(3 * std::abs(f.normal[k]));
    }
    return total;
  }
  throw InputError("volume is implemented for dimension <= 3");
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> Polytope::bounding_box() const {
  Eigen::VectorXd lo = to_eigen(vertices_[0]), hi = lo;
  for (const auto& v : vertices_) {
    Eigen::VectorXd d = to_eigen(v);
    lo = lo.cwiseMin(d);
    hi = hi.cwiseMax(d);
  }
  return {lo, hi};
}

double Polytope::diameter() const {
  double d = 0.0;
  auto pts = vertices_double();
  for (const auto& a : pts) {
    for (const auto& b : pts) d = std::max(d, (a - b).norm());
  }
  return d;
}

// ---------------------------------------------------------------- frames

Eigen::MatrixXd FaceFrame::matrix() const {
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = static_cast<double>(unimodular[i][j]);
  }
  return m;
}

Eigen::VectorXd FaceFrame::to_frame(const Eigen::VectorXd& x) const { return matrix() * x; }

Eigen::VectorXd FaceFrame::parallel(const Eigen::VectorXd& x) const { return to_frame(x).head(dim - codim); }

Eigen::VectorXd FaceFrame::transverse(const Eigen::VectorXd& x) const { return to_frame(x).tail(codim); }

Eigen::MatrixXd FaceFrame::transverse_directions() const {
  Eigen::MatrixXd d(dim, codim);
  for (int k = 0; k < codim; ++k) {
    for (int i = 0; i < dim; ++i) d(i, k) = static_cast<double>(inverse[i][dim - codim + k]);
  }
  return d;
}

Eigen::MatrixXd FaceFrame::parallel_directions() const {
  Eigen::MatrixXd d(dim, dim - codim);
  for (int k = 0; k < dim - codim; ++k) {
    for (int i = 0; i < dim; ++i) d(i, k) = static_cast<double>(inverse[i][k]);
  }
  return d;
}

namespace {

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

FaceFrame face_frame(int dim, const IMat& normals, const RVec& offsets) {
  const int j = static_cast<int>(normals.size());
  if (j == 0 || j > dim) throw InputError("face frame needs between 1 and n normals");
  if (offsets.size() != normals.size()) throw InputError("face frame: one offset per normal required");
  for (const auto& v : normals) {
    if (static_cast<int>(v.size()) != dim) throw InputError("face frame: normal has wrong dimension");
    if (gcd_all(v) != 1) throw InputError("face frame: normal is not primitive");
  }
  // Column-style Hermite reduction: normals * V = [B 0] with B lower triangular.
  IMat n = normals;
  IMat v(dim, IVec(dim, 0));
  for (int i = 0; i < dim; ++i) v[i][i] = 1;
  auto col_op = [&](int a, int b, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
    // [col_a, col_b] <- [p col_a + q col_b, r col_a + s col_b]
    for (auto* m : {&n, &v}) {
      for (auto& row : *m) {
        std::int64_t ca = row[a], cb = row[b];
        row[a] = p * ca + q * cb;
        row[b] = r * ca + s * cb;
      }
    }
  };
  for (int i = 0; i < j; ++i) {
    for (int c = i + 1; c < dim; ++c) {
      std::int64_t x = n[i][i], y = n[i][c];
      if (y == 0) continue;
      std::int64_t p, q;
      std::int64_t g = ext_gcd(x, y, p, q);
      col_op(i, c, p, q, -y / g, x / g);
    }
    if (n[i][i] == 0) throw InputError("face frame: normals are linearly dependent");
  }
  std::int64_t det_b = 1;
  for (int i = 0; i < j; ++i) det_b *= n[i][i];
  if (std::abs(det_b) != 1) {
    throw InputError("face frame: normals span a non-saturated sublattice (index " +
                     std::to_string(std::abs(det_b)) + "); no unimodular completion exists");
  }
  IMat vinv = unimodular_inverse(v);
  FaceFrame f;
  f.dim = dim;
  f.codim = j;
  for (int r = j; r < dim; ++r) f.unimodular.push_back(vinv[r]);
  for (const auto& nr : normals) f.unimodular.push_back(nr);
  if (std::abs(determinant(f.unimodular)) != 1) throw NumericalError("face frame completion failed");
  f.inverse = unimodular_inverse(f.unimodular);
  f.offsets = offsets;
  return f;
}

FaceFrame face_frame(const Polytope& p, const IMat& normals, const RVec& offsets) {
  return face_frame(p.dim(), normals, offsets);
}

}  // namespace toric
