#include "toric/testconfig.hpp"

#include <algorithm>
#include <cmath>

namespace toric {

namespace {

Facet to_facet(const Halfspace& h) {
  Rational factor;
  IVec n = primitive_direction(h.normal, &factor);
  return {n, h.offset * factor};
}

RVec difference(const AffinePiece& a, const AffinePiece& b) {
  RVec d(a.g.size());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = a.g[k] - b.g[k];
  return d;
}

}  // namespace

int Decomposition::max_codim() const {
  int m = 0;
  for (const auto& f : faces) m = std::max(m, f.codim);
  return m;
}

int Decomposition::part_of(const Eigen::VectorXd& x, double tol) const {
  auto active = pl.active_set(x, tol);
  if (active.size() != 1) return -1;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j].piece == active[0]) return static_cast<int>(j);
  }
  return -1;
}

std::vector<Face> nondiff_locus(const PLConvex& f_in, const Polytope& p) {
  PLConvex f = f_in.pruned(p);
  const int n = p.dim();
  const int r = f.size();
  if (r > 16) throw InputError("too many affine pieces for face enumeration");
  auto base = polytope_halfspaces(p);
  std::vector<Face> faces;
  for (unsigned mask = 1; mask < (1u << r); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < r; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    if (s.size() < 2) continue;
    const auto& a0 = f.pieces()[s[0]];
    std::vector<Halfspace> eq;
    RMat rows;
    for (std::size_t t = 1; t < s.size(); ++t) {
      RVec d = difference(f.pieces()[s[t]], a0);
      eq.push_back({d, a0.b - f.pieces()[s[t]].b});
      rows.push_back(d);
    }
    auto ineq = base;
    for (int k = 0; k < r; ++k) {
      if (mask & (1u << k)) continue;
      ineq.push_back({difference(a0, f.pieces()[k]), f.pieces()[k].b - a0.b});
    }
    // Keep an independent set of equalities; the rest are checked afterwards.
    std::vector<Halfspace> basis_eq;
    RMat basis_rows;
    for (const auto& h : eq) {
      auto trial = basis_rows;
      trial.push_back(h.normal);
      if (rank(trial) > static_cast<int>(basis_rows.size())) {
        basis_rows = std::move(trial);
        basis_eq.push_back(h);
      }
    }
    auto verts = enumerate_vertices(n, ineq, basis_eq);
    std::erase_if(verts, [&](const RVec& v) {
      return std::any_of(eq.begin(), eq.end(), [&](const Halfspace& h) { return dot(h.normal, v) != h.offset; });
    });
    if (verts.empty()) continue;
    int codim = rank(rows);
    if (affine_dimension(verts) != n - codim) continue;
    RVec c(n, Rational(0));
    for (const auto& v : verts) {
      for (int k = 0; k < n; ++k) c[k] += v[k];
    }
    for (auto& ck : c) ck /= static_cast<std::int64_t>(verts.size());
    auto ell = p.ell(c);
    if (std::any_of(ell.begin(), ell.end(), [](const Rational& q) { return q <= 0; })) continue;
    if (f.active_set(c) != s) continue;

    Face face;
    face.pieces = s;
    face.codim = codim;
    face.vertices = verts;
    face.centroid = c;
    IMat normals;
    RMat chosen;
    for (const auto& d : rows) {
      auto trial = chosen;
      trial.push_back(d);
      if (rank(trial) > static_cast<int>(chosen.size())) {
        chosen = trial;
        normals.push_back(primitive_direction(d));
      }
    }
    RVec offsets;
    for (const auto& nu : normals) offsets.push_back(dot(nu, c));
    try {
      face.frame = face_frame(n, normals, offsets);
    } catch (const InputError& e) {
      face.frame_error = e.what();
    }
    faces.push_back(std::move(face));
  }
  std::stable_sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) { return a.codim < b.codim; });
  return faces;
}

Decomposition decompose(const PLConvex& f, const Polytope& p) {
  Decomposition d;
  d.base = p;
  d.pl = f.pruned(p);
  for (int i = 0; i < d.pl.size(); ++i) {
    std::vector<Facet> facets = p.facets();
    for (const auto& h : d.pl.activity_region(i)) facets.push_back(to_facet(h));
    d.parts.push_back({i, Polytope::from_facets(p.dim(), facets, p.corrected(), DelzantPolicy::Report)});
  }
  d.faces = nondiff_locus(d.pl, p);
  return d;
}

ThickeningHit thickening_membership(const Decomposition& d, double eps, const Eigen::VectorXd& x) {
  ThickeningHit hit;
  for (std::size_t i = 0; i < d.faces.size(); ++i) {
    const auto& face = d.faces[i];
    if (!face.frame) continue;
    const auto& fr = *face.frame;
    Eigen::VectorXd c = to_eigen(fr.offsets);
    Eigen::VectorXd t = fr.transverse(x) - c;
    if (t.cwiseAbs().maxCoeff() >= eps) continue;
    Eigen::VectorXd proj = x - fr.transverse_directions() * t;
    const auto& a0 = d.pl.pieces()[face.pieces[0]];
    double v0 = a0.eval(proj);
    bool ok = true;
    for (int k = 0; k < d.pl.size() && ok; ++k) {
      if (std::find(face.pieces.begin(), face.pieces.end(), k) != face.pieces.end()) continue;
      if (d.pl.pieces()[k].eval(proj) >= v0 - 1e-12) ok = false;
    }
    if (!ok) continue;
    if (!hit.inside || face.codim > d.faces[hit.face].codim) {
      hit.inside = true;
      hit.face = static_cast<int>(i);
    }
  }
  return hit;
}

QPolytope build_Q(const PLConvex& f, const Polytope& p, const Rational& K) {
  Rational mx = f.max_on(p);
  if (K < mx) throw InputError("ceiling K = " + to_string(K) + " is below max f = " + to_string(mx));
  const int n = p.dim();
  std::vector<Facet> facets;
  for (const auto& fa : p.facets()) {
    IVec v = fa.normal;
    v.push_back(0);
    facets.push_back({v, fa.offset});
  }
  IVec up(n + 1, 0);
  up[n] = 1;
  facets.push_back({up, 0});
  for (const auto& a : f.pieces()) {
    RVec nv(n + 1);
    for (int k = 0; k < n; ++k) nv[k] = -a.g[k];
    nv[n] = -1;
    facets.push_back(to_facet({nv, a.b - K}));
  }
  QPolytope out{Polytope::from_facets(n + 1, facets, p.corrected(), DelzantPolicy::Report), K, true};
  for (const auto& v : out.q.vertices()) {
    for (const auto& c : v) {
      if (c.denominator() != 1) out.integral = false;
    }
  }
  return out;
}

std::vector<CeilingPiece> central_fiber(const Decomposition& d, const QPolytope& q) {
  std::vector<CeilingPiece> out;
  for (std::size_t j = 0; j < d.parts.size(); ++j) {
    CeilingPiece c;
    c.part = static_cast<int>(j);
    c.piece = d.parts[j].piece;
    const auto& a = d.pl.pieces()[c.piece];
    for (const auto& v : d.parts[j].poly.vertices()) {
      RVec w = v;
      w.push_back(q.K - a.eval(v));
      c.vertices.push_back(w);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace toric
