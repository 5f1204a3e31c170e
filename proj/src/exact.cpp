#include "toric/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace toric {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InputError("empty rational literal");
  auto parse_int = [&](const std::string& t) -> std::int64_t {
    if (t.empty() || t == "-" || t == "+") throw InputError("bad rational literal '" + s + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (const std::exception&) {
      throw InputError("bad rational literal '" + s + "'");
    }
    if (pos != t.size()) throw InputError("bad rational literal '" + s + "'");
    return v;
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::int64_t num = parse_int(s.substr(0, slash));
    std::int64_t den = parse_int(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(num, den);
  }
  if (auto dot_pos = s.find('.'); dot_pos != std::string::npos) {
    std::string whole = s.substr(0, dot_pos);
    std::string frac = s.substr(dot_pos + 1);
    if (frac.empty() || frac.size() > 15 ||
        !std::all_of(frac.begin(), frac.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw InputError("bad decimal literal '" + s + "'");
    }
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    std::int64_t w = parse_int(whole);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t f = parse_int(frac);
    Rational q(std::abs(w) * scale + f, scale);
    return negative ? -q : q;
  }
  return Rational(parse_int(s));
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

Eigen::VectorXd to_eigen(const RVec& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = to_double(v[i]);
  return out;
}

Eigen::VectorXd to_eigen(const IVec& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = static_cast<double>(v[i]);
  return out;
}

RVec to_rational(const IVec& v) {
  RVec out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

Rational dot(const RVec& a, const RVec& b) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational dot(const IVec& a, const RVec& b) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::int64_t gcd_all(const IVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

IVec primitive_direction(const RVec& v, Rational* factor) {
  std::int64_t l = 1;
  for (const auto& q : v) l = std::lcm(l, q.denominator());
  IVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] * l).numerator();
  std::int64_t g = gcd_all(out);
  if (g == 0) throw InputError("zero vector has no primitive direction");
  for (auto& x : out) x /= g;
  if (factor) *factor = Rational(l, g);
  return out;
}

namespace {

// Row-reduces in place; returns pivot columns.
std::vector<int> row_reduce(RMat& a, int cols) {
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(a.size());
  for (int col = 0; col < cols && row < rows; ++col) {
    int sel = -1;
    for (int r = row; r < rows; ++r) {
      if (a[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(a[row], a[sel]);
    Rational p = a[row][col];
    for (auto& x : a[row]) x /= p;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t c = 0; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RVec> solve(RMat a, RVec b) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
  auto piv = row_reduce(a, n);
  if (static_cast<int>(piv.size()) < n) return std::nullopt;
  RVec x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

int rank(RMat a) {
  if (a.empty()) return 0;
  return static_cast<int>(row_reduce(a, static_cast<int>(a[0].size())).size());
}

RMat nullspace(RMat a, int cols) {
  auto piv = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : piv) is_pivot[p] = true;
  RMat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RVec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::int64_t determinant(IMat a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int sel = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          sel = r;
          break;
        }
      }
      if (sel < 0) return 0;
      std::swap(a[k], a[sel]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IMat unimodular_inverse(const IMat& u) {
  const int n = static_cast<int>(u.size());
  if (std::abs(determinant(u)) != 1) throw NumericalError("matrix is not unimodular");
  RMat aug(n, RVec(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = u[i][j];
    aug[i][n + i] = 1;
  }
  row_reduce(aug, n);
  IMat inv(n, IVec(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& q = aug[i][n + j];
      if (q.denominator() != 1) throw NumericalError("non-integral inverse of unimodular matrix");
      inv[i][j] = q.numerator();
    }
  }
  return inv;
}

namespace {

template <class F>
void for_each_subset(int m, int k, F&& fn) {
  if (k > m || k < 0) return;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<RVec> enumerate_vertices(int dim, const std::vector<Halfspace>& ineq,
                                     const std::vector<Halfspace>& eq) {
  std::vector<RVec> out;
  const int k = dim - static_cast<int>(eq.size());
  if (k < 0) return out;
  for_each_subset(static_cast<int>(ineq.size()), k, [&](const std::vector<int>& idx) {
    RMat a;
    RVec b;
    for (const auto& e : eq) {
      a.push_back(e.normal);
      b.push_back(e.offset);
    }
    for (int i : idx) {
      a.push_back(ineq[i].normal);
      b.push_back(ineq[i].offset);
    }
    auto x = solve(a, b);
    if (!x) return;
    for (const auto& h : ineq) {
      if (dot(h.normal, *x) < h.offset) return;
    }
    out.push_back(std::move(*x));
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int affine_dimension(const std::vector<RVec>& points) {
  if (points.empty()) return -1;
  RMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RVec d(points[i].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
    diffs.push_back(std::move(d));
  }
  return rank(diffs);
}

}  // namespace toric
