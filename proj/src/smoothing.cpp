#include "toric/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "toric/quadrature.hpp"

namespace toric {

namespace {

constexpr int kSliceOrder = 20;
constexpr int kSlicePanels = 8;

// Composite Gauss-Legendre nodes and weights on [a, b].
void composite_rule(double a, double b, std::vector<double>& xs, std::vector<double>& ws) {
  const auto& rule = gauss_legendre(kSliceOrder);
  xs.clear();
  ws.clear();
  const double h = (b - a) / kSlicePanels;
  for (int p = 0; p < kSlicePanels; ++p) {
    double mid = a + (p + 0.5) * h;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      xs.push_back(mid + 0.5 * h * rule.nodes[q]);
      ws.push_back(0.5 * h * rule.weights[q]);
    }
  }
}

// Coefficients of g in the frame basis; entries past dim - codim multiply the
// normals. Throws when g has a component along the parallel rows.
RVec frame_coefficients(const FaceFrame& fr, const RVec& g) {
  RVec out(fr.dim, Rational(0));
  for (int j = 0; j < fr.dim; ++j) {
    for (int i = 0; i < fr.dim; ++i) out[j] += g[i] * Rational(fr.inverse[i][j]);
  }
  for (int j = 0; j < fr.dim - fr.codim; ++j) {
    if (out[j] != 0) throw InputError("affine pieces differ outside the span of the wall normals");
  }
  return RVec(out.begin() + (fr.dim - fr.codim), out.end());
}

struct SliceMoments {
  double mass = 0.0;
  Eigen::Vector2d first = Eigen::Vector2d::Zero();
};

// Integrals of K(u1)K(u2) and u K(u1)K(u2) over a convex polygon inside the
// unit box, by exact inner integration in u2 and Gauss-Legendre in u1.
SliceMoments slice_moments(const std::vector<Eigen::Vector2d>& poly, const BumpKernel& k) {
  SliceMoments out;
  std::vector<double> xs;
  for (const auto& v : poly) xs.push_back(v.x());
  std::sort(xs.begin(), xs.end());
  const std::size_t m = poly.size();
  std::vector<double> nodes, weights;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    double a = xs[s], b = xs[s + 1];
    if (b - a < 1e-15) continue;
    composite_rule(a, b, nodes, weights);
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      double x = nodes[q];
      double lo = 1e300, hi = -1e300;
      for (std::size_t e = 0; e < m; ++e) {
        const auto& p = poly[e];
        const auto& r = poly[(e + 1) % m];
        double x0 = std::min(p.x(), r.x()), x1 = std::max(p.x(), r.x());
        if (x < x0 || x > x1 || x1 - x0 < 1e-300) continue;
        double y = p.y() + (r.y() - p.y()) * (x - p.x()) / (r.x() - p.x());
        lo = std::min(lo, y);
        hi = std::max(hi, y);
      }
      if (hi <= lo) continue;
      double w = weights[q] * k.density(x);
      double dm = k.cdf(hi) - k.cdf(lo);
      out.mass += w * dm;
      out.first.x() += w * x * dm;
      out.first.y() += w * (k.first_moment(hi) - k.first_moment(lo));
    }
  }
  return out;
}

}  // namespace

SmoothedPL::SmoothedPL(const Decomposition& d, double eps, KernelKind kernel)
    : d_(d), eps_(eps), kernel_(kernel), n_(d.base.dim()) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InputError("epsilon must be positive");
  const auto& pieces = d_.pl.pieces();
  g0_ = to_eigen(pieces[0].g);
  b0_ = to_double(pieces[0].b);

  IMat walls;
  for (const auto& face : d_.faces) {
    if (face.codim != 1) continue;
    if (!face.frame) throw InputError("wall has no unimodular frame: " + face.frame_error);
    walls.push_back(face.frame->normal(0));
  }
  IMat chosen;
  RMat chosen_r;
  for (const auto& w : walls) {
    auto trial = chosen_r;
    trial.push_back(to_rational(w));
    if (rank(trial) > static_cast<int>(chosen_r.size())) {
      chosen_r = trial;
      chosen.push_back(w);
    }
  }
  k_ = static_cast<int>(chosen.size());
  if (k_ > 2) throw InputError("smoothing supports at most two independent wall directions");
  T_ = Eigen::MatrixXd::Zero(k_, n_);
  c_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(pieces.size()), k_);
  e_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(pieces.size()));
  if (k_ == 0) return;

  frame_ = face_frame(n_, chosen, RVec(k_, Rational(0)));
  for (int i = 0; i < k_; ++i) T_.row(i) = to_eigen(chosen[i]).transpose();
  double reach = 0.0;
  for (const auto& w : walls) {
    auto lam = frame_coefficients(frame_, to_rational(w));
    double sum = 0.0;
    for (const auto& l : lam) sum += std::abs(to_double(l));
    reach = std::max(reach, sum);
  }
  r_ = eps_ / reach;

  std::vector<RVec> c_exact;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    RVec diff(n_);
    for (int q = 0; q < n_; ++q) diff[q] = pieces[i].g[q] - pieces[0].g[q];
    c_exact.push_back(frame_coefficients(frame_, diff));
    for (int q = 0; q < k_; ++q) c_(static_cast<Eigen::Index>(i), q) = to_double(c_exact.back()[q]);
    e_[static_cast<Eigen::Index>(i)] = to_double(pieces[i].b - pieces[0].b);
  }
  if (k_ != 1) return;

  // Upper envelope of the lines c_i t + e_i, walked from t = -infinity.
  const int r = static_cast<int>(pieces.size());
  auto slope = [&](int i) { return c_exact[i][0]; };
  auto offset = [&](int i) { return pieces[i].b - pieces[0].b; };
  int cur = 0;
  for (int i = 1; i < r; ++i) {
    if (slope(i) < slope(cur) || (slope(i) == slope(cur) && offset(i) > offset(cur))) cur = i;
  }
  h_left_slope_ = to_double(slope(cur));
  h_left_offset_ = to_double(offset(cur));
  bool have_t = false;
  Rational t_cur;
  while (true) {
    int next = -1;
    Rational t_next;
    for (int q = 0; q < r; ++q) {
      if (slope(q) <= slope(cur)) continue;
      Rational t = (offset(cur) - offset(q)) / (slope(q) - slope(cur));
      if (have_t && t < t_cur) continue;
      if (next < 0 || t < t_next || (t == t_next && slope(q) > slope(next))) {
        next = q;
        t_next = t;
      }
    }
    if (next < 0) break;
    hinges_.push_back({to_double(t_next), to_double(slope(next) - slope(cur))});
    cur = next;
    t_cur = t_next;
    have_t = true;
  }
  for (std::size_t b = 1; b < hinges_.size(); ++b) {
    if (hinges_[b].at - hinges_[b - 1].at < 2.0 * r_) {
      std::ostringstream os;
      os << "epsilon " << eps_ << " too large: parallel walls closer than the smoothing width";
      throw InputError(os.str());
    }
  }
}

void SmoothedPL::jet_1d(double t, double& h, double& dh, double& d2h) const {
  h = h_left_slope_ * t + h_left_offset_;
  dh = h_left_slope_;
  d2h = 0.0;
  for (const auto& hg : hinges_) {
    auto j = Bump1D{hg.at, r_, hg.kappa, kernel_}.eval(t);
    h += j.value;
    dh += j.slope;
    d2h += j.curvature;
  }
}

void SmoothedPL::jet_2d(const Eigen::Vector2d& t, double& h, Eigen::Vector2d& dh, Eigen::Matrix2d& d2h) const {
  const int np = static_cast<int>(c_.rows());
  auto hval = [&](int i, const Eigen::Vector2d& s) { return c_.row(i).dot(s) + e_[i]; };
  auto argmax = [&](const Eigen::Vector2d& s) {
    int best = 0;
    for (int i = 1; i < np; ++i) {
      if (hval(i, s) > hval(best, s)) best = i;
    }
    return best;
  };
  const Eigen::Vector2d corners[4] = {t + Eigen::Vector2d(-r_, -r_), t + Eigen::Vector2d(r_, -r_),
                                      t + Eigen::Vector2d(r_, r_), t + Eigen::Vector2d(-r_, r_)};
  int i0 = argmax(corners[0]);
  bool same = true;
  for (int q = 1; q < 4 && same; ++q) same = hval(argmax(corners[q]), corners[q]) <= hval(i0, corners[q]);
  dh.setZero();
  d2h.setZero();
  if (same) {
    h = hval(i0, t);
    dh = c_.row(i0).transpose();
    return;
  }
  const auto& k = BumpKernel::get(kernel_);
  const std::vector<Eigen::Vector2d> box = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
  auto offset = [&](int i, int j) {
    Eigen::Vector2d dc = (c_.row(j) - c_.row(i)).transpose();
    return (e_[j] - e_[i] + dc.dot(t)) / r_;
  };
  h = 0.0;
  std::vector<bool> present(np, false);
  for (int i = 0; i < np; ++i) {
    auto poly = box;
    bool clipped = false;
    for (int j = 0; j < np && poly.size() >= 3; ++j) {
      if (j == i) continue;
      Eigen::Vector2d nrm = (c_.row(j) - c_.row(i)).transpose();
      double off = offset(i, j);
      bool all_in = true;
      for (const auto& v : poly) all_in = all_in && nrm.dot(v) >= off;
      if (all_in) continue;
      poly = clip_polygon(poly, nrm, off);
      clipped = true;
    }
    if (poly.size() < 3 || std::abs(polygon_area(poly)) < 1e-14) continue;
    present[i] = true;
    SliceMoments mom;
    if (clipped) {
      mom = slice_moments(poly, k);
    } else {
      mom.mass = 1.0;
    }
    Eigen::Vector2d ci = c_.row(i).transpose();
    h += hval(i, t) * mom.mass - r_ * ci.dot(mom.first);
    dh += ci * mom.mass;
  }
  std::vector<double> nodes, weights;
  for (int i = 0; i < np; ++i) {
    if (!present[i]) continue;
    for (int j = i + 1; j < np; ++j) {
      if (!present[j]) continue;
      Eigen::Vector2d dc = (c_.row(j) - c_.row(i)).transpose();
      double len2 = dc.squaredNorm();
      if (len2 == 0.0) continue;
      // Line (c_j - c_i) . u = offset(i, j) clipped to the box and to the
      // region where i (hence j) is still maximal.
      Eigen::Vector2d p0 = dc * (offset(i, j) / len2);
      Eigen::Vector2d dir(-dc.y(), dc.x());
      double lo = -1e300, hi = 1e300;
      auto restrict = [&](const Eigen::Vector2d& nrm, double off) {
        double a = nrm.dot(dir), b = off - nrm.dot(p0);
        if (std::abs(a) < 1e-300) {
          if (b > 0) hi = -1e300;
          return;
        }
        if (a > 0) lo = std::max(lo, b / a);
        else hi = std::min(hi, b / a);
      };
      restrict({1, 0}, -1);
      restrict({-1, 0}, -1);
      restrict({0, 1}, -1);
      restrict({0, -1}, -1);
      for (int q = 0; q < np; ++q) {
        if (q == i || q == j) continue;
        restrict((c_.row(q) - c_.row(i)).transpose(), offset(i, q));
      }
      if (hi <= lo) continue;
      double line = 0.0;
      composite_rule(lo, hi, nodes, weights);
      for (std::size_t q = 0; q < nodes.size(); ++q) {
        Eigen::Vector2d u = p0 + nodes[q] * dir;
        line += weights[q] * k.density(u.x()) * k.density(u.y());
      }
      line *= dir.norm() / r_;
      d2h += dc * dc.transpose() * (line / std::sqrt(len2));
    }
  }
}

GenJet SmoothedPL::jet(const Eigen::VectorXd& x) const {
  GenJet out;
  out.value = g0_.dot(x) + b0_;
  out.grad = g0_;
  out.hess = Eigen::MatrixXd::Zero(n_, n_);
  if (k_ == 0) return out;
  Eigen::VectorXd t = T_ * x;
  if (k_ == 1) {
    double h, dh, d2h;
    jet_1d(t[0], h, dh, d2h);
    out.value += h;
    out.grad += dh * T_.row(0).transpose();
    out.hess += d2h * T_.row(0).transpose() * T_.row(0);
    return out;
  }
  double h;
  Eigen::Vector2d dh;
  Eigen::Matrix2d d2h;
  jet_2d(Eigen::Vector2d(t[0], t[1]), h, dh, d2h);
  out.value += h;
  out.grad += T_.transpose() * dh;
  out.hess += T_.transpose() * d2h * T_;
  return out;
}

bool SmoothedPL::in_support(const Eigen::VectorXd& x) const {
  if (k_ == 0) return false;
  Eigen::VectorXd t = T_ * x;
  if (k_ == 1) {
    return std::any_of(hinges_.begin(), hinges_.end(), [&](const Hinge& h) { return std::abs(t[0] - h.at) < r_; });
  }
  const int np = static_cast<int>(c_.rows());
  int first = -1;
  for (int q = 0; q < 4; ++q) {
    Eigen::Vector2d s(t[0] + ((q & 1) ? r_ : -r_), t[1] + ((q & 2) ? r_ : -r_));
    int best = 0;
    for (int i = 1; i < np; ++i) {
      if (c_.row(i).dot(s) + e_[i] > c_.row(best).dot(s) + e_[best]) best = i;
    }
    if (first < 0) first = best;
    else if (best != first) return true;
  }
  return false;
}

std::vector<Ridge> SmoothedPL::ridges() const {
  std::vector<Ridge> out;
  if (k_ == 1) {
    Eigen::VectorXd nu = T_.row(0).transpose();
    for (const auto& h : hinges_) {
      for (double o : {h.at - r_, h.at, h.at + r_}) out.push_back({nu, o});
    }
    return out;
  }
  // Walls of f, with their reach on both sides.
  for (const auto& face : d_.faces) {
    if (face.codim != 1 || !face.frame) continue;
    Eigen::VectorXd nu = to_eigen(face.frame->normal(0));
    double c = to_double(face.frame->offsets[0]);
    for (double o : {c - eps_, c, c + eps_}) out.push_back({nu, o});
  }
  return out;
}

StrictSmoothedPL::StrictSmoothedPL(std::shared_ptr<const SmoothedPL> base) : base_(std::move(base)) {
  if (base_->directions() != 1) throw InputError("strict smoothing needs exactly one wall direction");
  const int n = base_->dim();
  const auto& fr = base_->frame();
  par_ = fr.matrix().topRows(n - 1);
  const auto verts = base_->decomposition().base.vertices_double();
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(n - 1, 1e300), hi = Eigen::VectorXd::Constant(n - 1, -1e300);
  for (const auto& v : verts) {
    Eigen::VectorXd u = par_ * v;
    lo = lo.cwiseMin(u);
    hi = hi.cwiseMax(u);
  }
  u0_ = 0.5 * (lo + hi);
  double rad2 = 0.0;
  for (const auto& v : verts) rad2 = std::max(rad2, (par_ * v - u0_).squaredNorm());
  const double q_max = std::max(rad2, 1e-300);
  const double dq_max2 = 4.0 * q_max;  // |grad q|^2 = 4 |u - u0|^2
  const auto& k = BumpKernel::get(base_->kernel());
  double a1 = 0.0, a2 = 0.0;
  for (int i = 1; i < 4000; ++i) {
    double u = -1.0 + i / 2000.0;
    double kv = k.density(u), k1 = k.density_d1(u), k2 = k.density_d2(u);
    a1 = std::max(a1, std::abs(3.0 * kv * k2 + 6.0 * k1 * k1));
    a2 = std::max(a2, k1 * k1);
  }
  double kappa = 1e300;
  for (const auto& h : base_->hinges()) kappa = std::min(kappa, h.kappa);
  if (base_->hinges().empty()) return;
  const double r = base_->radius();
  // Keeps the wall-wall entry >= half of the base curvature and the Schur
  // complement nonnegative.
  double mu1 = kappa * r / (2.0 * q_max * a1);
  double mu2 = kappa * r / (9.0 * a2 * dq_max2);
  mu_ = 0.5 * std::min(mu1, mu2);
}

GenJet StrictSmoothedPL::jet(const Eigen::VectorXd& x) const {
  GenJet out = base_->jet(x);
  if (mu_ == 0.0) return out;
  const auto& k = BumpKernel::get(base_->kernel());
  const double r = base_->radius();
  Eigen::VectorXd nu = base_->wall_matrix().row(0).transpose();
  double t = nu.dot(x);
  Eigen::VectorXd v = par_ * x - u0_;
  double q = v.squaredNorm();
  Eigen::VectorXd dq = 2.0 * v;
  for (const auto& h : base_->hinges()) {
    double u = (t - h.at) / r;
    if (u <= -1.0 || u >= 1.0) continue;
    double th = k.density(u), th1 = k.density_d1(u) / r, th2 = k.density_d2(u) / (r * r);
    double c0 = th * th * th, c1 = 3.0 * th * th * th1, c2 = 6.0 * th * th1 * th1 + 3.0 * th * th * th2;
    Eigen::VectorXd pd = par_.transpose() * dq;
    out.value += mu_ * c0 * q;
    out.grad += mu_ * (c1 * q * nu + c0 * pd);
    out.hess += mu_ * (c2 * q * nu * nu.transpose() + c1 * (nu * pd.transpose() + pd * nu.transpose()) +
                       2.0 * c0 * par_.transpose() * par_);
  }
  return out;
}

std::shared_ptr<const SmoothedPL> build_nice_smoothing(const Decomposition& d, double eps, KernelKind kernel) {
  return std::make_shared<SmoothedPL>(d, eps, kernel);
}

std::shared_ptr<const StrictSmoothedPL> build_strict_smoothing(const Decomposition& d, double eps, KernelKind kernel) {
  return std::make_shared<StrictSmoothedPL>(build_nice_smoothing(d, eps, kernel));
}

bool NiceReport::all_pass() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const NiceCondition& c) { return c.pass; });
}

const NiceCondition& NiceReport::get(const std::string& id) const {
  for (const auto& c : conditions) {
    if (c.id == id) return c;
  }
  throw InputError("unknown condition " + id);
}

std::vector<Eigen::VectorXd> sample_polytope(const Polytope& p, int count, std::uint64_t seed, double margin) {
  std::mt19937_64 rng(seed);
  auto [lo, hi] = p.bounding_box();
  std::vector<Eigen::VectorXd> out;
  long attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000L * count + 1000) throw NumericalError("polytope sampling failed");
    Eigen::VectorXd x(p.dim());
    for (int i = 0; i < p.dim(); ++i) {
      double u = std::generate_canonical<double, 53>(rng);
      x[i] = lo[i] + u * (hi[i] - lo[i]);
    }
    if (p.ell(x).minCoeff() > margin) out.push_back(x);
  }
  return out;
}

namespace {

struct FacePoint {
  Eigen::VectorXd x;
  int face;
};

std::vector<FacePoint> face_points(const Decomposition& d) {
  std::vector<FacePoint> out;
  for (std::size_t f = 0; f < d.faces.size(); ++f) {
    const auto& face = d.faces[f];
    if (!face.frame) continue;
    Eigen::VectorXd c = to_eigen(face.centroid);
    out.push_back({c, static_cast<int>(f)});
    for (const auto& v : face.vertices) {
      Eigen::VectorXd w = to_eigen(v);
      for (double lam : {0.5, 0.75}) out.push_back({c + lam * (w - c), static_cast<int>(f)});
    }
  }
  return out;
}

void note(NiceCondition& c, bool ok, const std::string& what) {
  if (!ok && c.pass) c.detail = what;
  c.pass = c.pass && ok;
}

std::string where(const Eigen::VectorXd& x, double eps) {
  std::ostringstream os;
  os << "eps=" << eps << " x=(";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

NiceReport verify_nice_family(const Decomposition& d, const SmoothingFactory& make, std::vector<double> eps_list,
                              const std::vector<Eigen::VectorXd>& samples) {
  if (eps_list.size() < 2) throw InputError("a family needs at least two epsilon values");
  std::sort(eps_list.begin(), eps_list.end());
  const int n = d.base.dim();
  NiceReport rep;
  NiceCondition a{"a", "smooth and convex", true, 0.0, ""};
  NiceCondition b{"b", "smooth in epsilon", true, 0.0, ""};
  NiceCondition c{"c", "equals f off W_eps", true, 0.0, ""};
  NiceCondition dd{"d", "rank >= j and transverse block positive definite on faces", true, 0.0, ""};
  NiceCondition e{"e", "rank exactly j on faces for small epsilon", true, 0.0, ""};

  auto fpts = face_points(d);
  std::vector<Eigen::VectorXd> all = samples;
  for (const auto& fp : fpts) all.push_back(fp.x);

  for (double eps : eps_list) {
    GeneratorPtr gen = make(eps);
    for (const auto& x : all) {
      GenJet j = gen->jet(x);
      double me = min_eigenvalue(j.hess);
      a.worst = std::min(a.worst, me);
      note(a, me >= -1e-10, "negative curvature " + std::to_string(me) + " at " + where(x, eps));
      // Finite-difference consistency of value, gradient and Hessian.
      const double hv = 1e-6, hg = 1e-5;
      double scale_g = std::max(1.0, j.grad.cwiseAbs().maxCoeff());
      double scale_h = std::max(1.0, j.hess.cwiseAbs().maxCoeff());
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd step = Eigen::VectorXd::Unit(n, i);
        double fd = (gen->value(x + hv * step) - gen->value(x - hv * step)) / (2.0 * hv);
        double err_g = std::abs(fd - j.grad[i]) / scale_g;
        GenJet jp = gen->jet(x + hg * step), jm = gen->jet(x - hg * step);
        Eigen::VectorXd fdh = (jp.grad - jm.grad) / (2.0 * hg);
        double err_h = (fdh - j.hess.col(i)).cwiseAbs().maxCoeff() / scale_h;
        double err = std::max(err_g, err_h);
        note(a, err <= 1e-6, "derivative mismatch " + std::to_string(err) + " at " + where(x, eps));
      }
      ThickeningHit hit = thickening_membership(d, eps, x);
      if (!hit.inside) {
        double diff = std::abs(j.value - d.pl.eval(x));
        c.worst = std::max(c.worst, diff);
        note(c, diff <= 1e-12 * std::max(1.0, std::abs(d.pl.eval(x))), "psi != f off W_eps at " + where(x, eps));
      }
    }
    for (const auto& fp : fpts) {
      const auto& face = d.faces[fp.face];
      GenJet j = gen->jet(fp.x);
      int rk = hessian_rank(j.hess);
      Eigen::MatrixXd dirs = face.frame->transverse_directions();
      double block = min_eigenvalue(dirs.transpose() * j.hess * dirs);
      double thresh = 1e-8 * std::max(1.0, j.hess.cwiseAbs().maxCoeff());
      note(dd, rk >= face.codim && block > thresh,
           "rank " + std::to_string(rk) + " on codim-" + std::to_string(face.codim) + " face at " + where(fp.x, eps));
      if (eps == eps_list.front()) {
        note(e, rk == face.codim,
             "rank " + std::to_string(rk) + " on codim-" + std::to_string(face.codim) + " face at " + where(fp.x, eps));
      }
    }
  }
  // Nesting of the thickenings.
  for (const auto& x : all) {
    for (std::size_t i = 0; i + 1 < eps_list.size(); ++i) {
      bool small = thickening_membership(d, eps_list[i], x).inside;
      bool large = thickening_membership(d, eps_list[i + 1], x).inside;
      note(c, !small || large, "thickenings not nested at " + where(x, eps_list[i]));
    }
  }
  // Smoothness in epsilon: central differences at two step sizes agree.
  for (double eps : eps_list) {
    double h = 1e-3 * eps;
    GeneratorPtr gp = make(eps + h), gm = make(eps - h), gp2 = make(eps + 0.5 * h), gm2 = make(eps - 0.5 * h);
    GeneratorPtr g0 = make(eps);
    for (const auto& x : all) {
      double v0 = g0->value(x);
      double d1 = (gp->value(x) - gm->value(x)) / (2.0 * h);
      double d2 = (gp2->value(x) - gm2->value(x)) / h;
      double curv = (gp->value(x) - 2.0 * v0 + gm->value(x)) / (h * h);
      double err = std::abs(d1 - d2) / std::max(1.0, std::abs(d1));
      b.worst = std::max(b.worst, err);
      note(b, err <= 1e-4 && std::isfinite(curv), "non-smooth epsilon dependence at " + where(x, eps));
    }
  }
  rep.conditions = {a, b, c, dd, e};
  return rep;
}

}  // namespace toric
