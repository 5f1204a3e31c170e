#include "toric/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>

namespace toric {

const GaussRule& gauss_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pn = n == 0 ? 1.0 : p1, pn1 = p0;
      if (n == 1) {
        pn = x;
        pn1 = 1.0;
      }
      dp = n * (x * pn - pn1) / (x * x - 1.0);
      double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  // Symmetrize to make odd moments vanish exactly.
  for (int i = 0; i < n / 2; ++i) {
    double xs = 0.5 * (rule.nodes[n - 1 - i] - rule.nodes[i]);
    double ws = 0.5 * (rule.weights[i] + rule.weights[n - 1 - i]);
    rule.nodes[i] = -xs;
    rule.nodes[n - 1 - i] = xs;
    rule.weights[i] = rule.weights[n - 1 - i] = ws;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return cache.emplace(n, std::move(rule)).first->second;
}

namespace {

struct PanelEstimate {
  std::vector<double> value, error, l1;
};

template <class Region, class Estimator, class Splitter>
QuadResult adaptive(std::vector<Region> seeds, int components, const QuadOptions& opts, Estimator&& estimate,
                    Splitter&& split) {
  struct Item {
    double priority;
    long id;
    Region region;
    PanelEstimate est;
  };
  auto cmp = [](const Item& a, const Item& b) {
    if (a.priority != b.priority) return a.priority < b.priority;
    return a.id > b.id;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  std::vector<double> total(components, 0.0), err(components, 0.0), l1(components, 0.0);
  long next_id = 0;
  auto priority_of = [&](const PanelEstimate& e) {
    double p = 0.0;
    for (int c = 0; c < components; ++c) {
      double tol = opts.rel_tol * std::max(l1[c], e.l1[c]) + opts.abs_tol + 1e-300;
      p = std::max(p, e.error[c] / tol);
    }
    return p;
  };
  auto push = [&](Region r) {
    PanelEstimate e = estimate(r);
    for (int c = 0; c < components; ++c) {
      total[c] += e.value[c];
      err[c] += e.error[c];
      l1[c] += e.l1[c];
    }
    heap.push({priority_of(e), next_id++, std::move(r), std::move(e)});
  };
  for (auto& s : seeds) push(std::move(s));
  int panels = static_cast<int>(seeds.size());
  auto done = [&] {
    for (int c = 0; c < components; ++c) {
      if (err[c] > opts.rel_tol * l1[c] + opts.abs_tol) return false;
    }
    return true;
  };
  bool converged = done();
  while (!converged && panels < opts.max_panels && !heap.empty()) {
    Item worst = heap.top();
    heap.pop();
    for (int c = 0; c < components; ++c) {
      total[c] -= worst.est.value[c];
      err[c] -= worst.est.error[c];
      l1[c] -= worst.est.l1[c];
    }
    auto children = split(worst.region);
    panels += static_cast<int>(children.size()) - 1;
    for (auto& ch : children) push(std::move(ch));
    converged = done();
  }
  // Re-sum in creation order for a deterministic total.
  std::vector<Item> items;
  items.reserve(heap.size());
  while (!heap.empty()) {
    items.push_back(heap.top());
    heap.pop();
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
  QuadResult out;
  out.values.assign(components, 0.0);
  out.errors.assign(components, 0.0);
  for (const auto& it : items) {
    for (int c = 0; c < components; ++c) {
      out.values[c] += it.est.value[c];
      out.errors[c] += it.est.error[c];
    }
  }
  out.panels = panels;
  out.converged = converged;
  return out;
}

}  // namespace

QuadResult integrate_1d(const Integrand1D& f, int components, std::vector<double> breaks, const QuadOptions& opts) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<std::pair<double, double>> seeds;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) seeds.emplace_back(breaks[i], breaks[i + 1]);
  const auto& rule = gauss_legendre(opts.order);
  std::vector<double> buf(components);
  auto gl = [&](double a, double b, std::vector<double>& acc, std::vector<double>* abs_acc) {
    double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      f(mid + half * rule.nodes[i], buf);
      double w = half * rule.weights[i];
      for (int c = 0; c < components; ++c) {
        acc[c] += w * buf[c];
        if (abs_acc) (*abs_acc)[c] += w * std::abs(buf[c]);
      }
    }
  };
  auto estimate = [&](const std::pair<double, double>& p) {
    PanelEstimate e;
    std::vector<double> whole(components, 0.0);
    e.value.assign(components, 0.0);
    e.l1.assign(components, 0.0);
    e.error.assign(components, 0.0);
    double mid = 0.5 * (p.first + p.second);
    gl(p.first, p.second, whole, nullptr);
    gl(p.first, mid, e.value, &e.l1);
    gl(mid, p.second, e.value, &e.l1);
    for (int c = 0; c < components; ++c) e.error[c] = std::abs(whole[c] - e.value[c]);
    return e;
  };
  auto split = [](const std::pair<double, double>& p) {
    double mid = 0.5 * (p.first + p.second);
    return std::vector<std::pair<double, double>>{{p.first, mid}, {mid, p.second}};
  };
  return adaptive(std::move(seeds), components, opts, estimate, split);
}

std::vector<Eigen::Vector2d> clip_polygon(const std::vector<Eigen::Vector2d>& poly, const Eigen::Vector2d& normal,
                                          double offset) {
  std::vector<Eigen::Vector2d> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % n];
    double da = normal.dot(a) - offset, db = normal.dot(b) - offset;
    if (da >= 0) out.push_back(a);
    if ((da > 0 && db < 0) || (da < 0 && db > 0)) {
      double t = da / (da - db);
      out.push_back(a + t * (b - a));
    }
  }
  return out;
}

double polygon_area(const std::vector<Eigen::Vector2d>& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    twice += a.x() * b.y() - a.y() * b.x();
  }
  return 0.5 * twice;
}

namespace {

struct Triangle {
  Eigen::Vector2d a, b, c;
};

std::vector<Triangle> subdivide(const Triangle& t) {
  Eigen::Vector2d ab = 0.5 * (t.a + t.b), bc = 0.5 * (t.b + t.c), ca = 0.5 * (t.c + t.a);
  return {{t.a, ab, ca}, {ab, t.b, bc}, {ca, bc, t.c}, {ab, bc, ca}};
}

}  // namespace

QuadResult integrate_polygon(const Integrand2D& f, int components, const std::vector<Eigen::Vector2d>& polygon,
                             const std::vector<CutLine>& cuts, const QuadOptions& opts, int seed_levels) {
  const double total_area = std::abs(polygon_area(polygon));
  std::vector<std::vector<Eigen::Vector2d>> pieces{polygon};
  for (const auto& cut : cuts) {
    std::vector<std::vector<Eigen::Vector2d>> next;
    for (const auto& p : pieces) {
      auto hi = clip_polygon(p, cut.normal, cut.offset);
      auto lo = clip_polygon(p, -cut.normal, -cut.offset);
      for (auto* q : {&hi, &lo}) {
        if (q->size() >= 3 && std::abs(polygon_area(*q)) > 1e-14 * total_area) next.push_back(std::move(*q));
      }
    }
    pieces = std::move(next);
  }
  std::vector<Triangle> seeds;
  for (const auto& p : pieces) {
    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& v : p) c += v;
    c /= static_cast<double>(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      Triangle t{c, p[i], p[(i + 1) % p.size()]};
      Eigen::Vector2d e1 = t.b - t.a, e2 = t.c - t.a;
      if (std::abs(e1.x() * e2.y() - e1.y() * e2.x()) > 1e-16 * total_area) seeds.push_back(t);
    }
  }
  for (int l = 0; l < seed_levels; ++l) {
    std::vector<Triangle> next;
    for (const auto& t : seeds) {
      for (auto& ch : subdivide(t)) next.push_back(ch);
    }
    seeds = std::move(next);
  }
  const int order = std::min(opts.order, 8);
  const auto& rule = gauss_legendre(order);
  std::vector<double> buf(components);
  auto duffy = [&](const Triangle& t, std::vector<double>& acc, std::vector<double>* abs_acc) {
    Eigen::Vector2d e1 = t.b - t.a, e2 = t.c - t.b;
    double jac = std::abs(e1.x() * e2.y() - e1.y() * e2.x());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double u = 0.5 * (rule.nodes[i] + 1.0), wu = 0.5 * rule.weights[i];
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        double v = 0.5 * (rule.nodes[j] + 1.0), wv = 0.5 * rule.weights[j];
        Eigen::Vector2d x = t.a + u * e1 + u * v * e2;
        f(x, buf);
        double w = wu * wv * u * jac;
        for (int c = 0; c < components; ++c) {
          acc[c] += w * buf[c];
          if (abs_acc) (*abs_acc)[c] += w * std::abs(buf[c]);
        }
      }
    }
  };
  auto estimate = [&](const Triangle& t) {
    PanelEstimate e;
    std::vector<double> whole(components, 0.0);
    e.value.assign(components, 0.0);
    e.l1.assign(components, 0.0);
    e.error.assign(components, 0.0);
    duffy(t, whole, nullptr);
    for (const auto& ch : subdivide(t)) duffy(ch, e.value, &e.l1);
    for (int c = 0; c < components; ++c) e.error[c] = std::abs(whole[c] - e.value[c]);
    return e;
  };
  return adaptive(std::move(seeds), components, opts, estimate, subdivide);
}

}  // namespace toric
