#include "toric/pl_convex.hpp"

#include <algorithm>

namespace toric {

double AffinePiece::eval(const Eigen::VectorXd& x) const {
  double v = to_double(b);
  for (std::size_t k = 0; k < g.size(); ++k) v += to_double(g[k]) * x[static_cast<Eigen::Index>(k)];
  return v;
}

PLConvex::PLConvex(int dim, std::vector<AffinePiece> pieces) : dim_(dim), pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InputError("piecewise-linear function needs at least one piece");
  for (const auto& a : pieces_) {
    if (static_cast<int>(a.g.size()) != dim_) throw InputError("affine piece has wrong dimension");
  }
}

double PLConvex::eval(const Eigen::VectorXd& x) const {
  double best = pieces_[0].eval(x);
  for (std::size_t i = 1; i < pieces_.size(); ++i) best = std::max(best, pieces_[i].eval(x));
  return best;
}

Rational PLConvex::eval(const RVec& x) const {
  Rational best = pieces_[0].eval(x);
  for (std::size_t i = 1; i < pieces_.size(); ++i) best = std::max(best, pieces_[i].eval(x));
  return best;
}

int PLConvex::argmax(const Eigen::VectorXd& x) const {
  int arg = 0;
  double best = pieces_[0].eval(x);
  for (int i = 1; i < size(); ++i) {
    double v = pieces_[i].eval(x);
    if (v > best) {
      best = v;
      arg = i;
    }
  }
  return arg;
}

std::vector<int> PLConvex::active_set(const Eigen::VectorXd& x, double tol) const {
  double best = eval(x);
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (pieces_[i].eval(x) >= best - tol) out.push_back(i);
  }
  return out;
}

std::vector<int> PLConvex::active_set(const RVec& x) const {
  Rational best = eval(x);
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (pieces_[i].eval(x) == best) out.push_back(i);
  }
  return out;
}

std::vector<Halfspace> PLConvex::activity_region(int i) const {
  std::vector<Halfspace> hs;
  for (int k = 0; k < size(); ++k) {
    if (k == i) continue;
    RVec n(dim_);
    for (int c = 0; c < dim_; ++c) n[c] = pieces_[i].g[c] - pieces_[k].g[c];
    hs.push_back({n, pieces_[k].b - pieces_[i].b});
  }
  return hs;
}

std::vector<Halfspace> polytope_halfspaces(const Polytope& p) {
  std::vector<Halfspace> hs;
  for (const auto& f : p.facets()) hs.push_back({to_rational(f.normal), f.offset});
  return hs;
}

PLConvex PLConvex::pruned(const Polytope& p) const {
  std::vector<AffinePiece> unique;
  for (const auto& a : pieces_) {
    bool dup = std::any_of(unique.begin(), unique.end(), [&](const AffinePiece& u) { return u.g == a.g && u.b == a.b; });
    if (!dup) unique.push_back(a);
  }
  PLConvex dedup(dim_, unique);
  std::vector<AffinePiece> kept;
  auto base = polytope_halfspaces(p);
  for (int i = 0; i < dedup.size(); ++i) {
    auto hs = base;
    for (auto& h : dedup.activity_region(i)) hs.push_back(h);
    if (affine_dimension(enumerate_vertices(dim_, hs)) == dim_) kept.push_back(dedup.pieces_[i]);
  }
  return PLConvex(dim_, kept);
}

Rational PLConvex::max_on(const Polytope& p) const {
  auto base = polytope_halfspaces(p);
  bool first = true;
  Rational best = 0;
  for (int i = 0; i < size(); ++i) {
    auto hs = base;
    for (auto& h : activity_region(i)) hs.push_back(h);
    for (const auto& v : enumerate_vertices(dim_, hs)) {
      Rational val = eval(v);
      if (first || val > best) best = val;
      first = false;
    }
  }
  return best;
}

}  // namespace toric
