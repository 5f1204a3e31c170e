#include <doctest.h>

#include <algorithm>

#include "toric/polytope.hpp"

using namespace toric;

namespace {

Polytope simplex(int n) {
  return Polytope::from_facets(2, {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(-n)}});
}

// Brute-force lattice count from the inequalities alone.
int lattice_count(const std::vector<Facet>& facets, int lo, int hi) {
  int count = 0;
  for (int a = lo; a <= hi; ++a) {
    for (int b = lo; b <= hi; ++b) {
      bool in = std::all_of(facets.begin(), facets.end(), [&](const Facet& f) {
        return Rational(f.normal[0] * a + f.normal[1] * b) >= f.offset;
      });
      count += in;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("rational comparisons with integers terminate") {
  Rational q(3, 1);
  CHECK(q == 3);
  CHECK_FALSE(Rational(1, 2) == 0);
  CHECK(rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
}

TEST_CASE("simplex vertices, volume and lattice points") {
  for (int n = 1; n <= 4; ++n) {
    auto p = simplex(n);
    CHECK(p.vertices().size() == 3);
    CHECK(p.volume() == Rational(n * n, 2));
    CHECK(static_cast<int>(p.integral_points().size()) == lattice_count(p.facets(), -1, n + 1));
    CHECK(p.delzant());
  }
}

TEST_CASE("facet values vanish exactly on their facets") {
  auto p = simplex(3);
  for (const auto& v : p.vertices()) {
    auto ell = p.ell(v);
    CHECK(std::count(ell.begin(), ell.end(), Rational(0)) == 2);
    CHECK(std::all_of(ell.begin(), ell.end(), [](const Rational& q) { return q >= 0; }));
  }
}

TEST_CASE("non-Delzant vertex is rejected or reported") {
  // Normals (1,0) and (-1,-2) span an index-2 sublattice at (0,2).
  std::vector<Facet> f{{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -2}, Rational(-4)}};
  CHECK_THROWS_AS(Polytope::from_facets(2, f), InputError);
  auto p = Polytope::from_facets(2, f, false, DelzantPolicy::Report);
  CHECK_FALSE(p.delzant());
  CHECK_FALSE(p.delzant_report().empty());
}

TEST_CASE("bad input is rejected") {
  CHECK_THROWS_AS(Polytope::from_facets(1, {{{2}, Rational(0)}, {{-1}, Rational(-2)}}), InputError);
  CHECK_THROWS_AS(Polytope::from_facets(1, {{{1}, Rational(0)}}), InputError);
  CHECK_THROWS_AS(Polytope::from_facets(1, {{{1}, Rational(3)}, {{-1}, Rational(-2)}}), InputError);
}

TEST_CASE("prism volume in dimension three") {
  std::vector<Facet> f{{{1, 0, 0}, Rational(0)}, {{0, 1, 0}, Rational(0)}, {{-1, -1, 0}, Rational(-3)},
                       {{0, 0, 1}, Rational(0)}, {{0, 0, -1}, Rational(-2)}};
  auto q = Polytope::from_facets(3, f);
  CHECK(q.vertices().size() == 6);
  CHECK(q.volume() == Rational(9));
  // Unit cube corner cut: x + y + z <= 1 inside the positive orthant.
  auto t = Polytope::from_facets(3, {{{1, 0, 0}, Rational(0)}, {{0, 1, 0}, Rational(0)}, {{0, 0, 1}, Rational(0)},
                                     {{-1, -1, -1}, Rational(-1)}});
  CHECK(t.volume() == Rational(1, 6));
}

TEST_CASE("face frames are unimodular and adapted") {
  auto check = [](const FaceFrame& fr) {
    CHECK(std::abs(determinant(fr.unimodular)) == 1);
    // inverse really inverts
    for (int i = 0; i < fr.dim; ++i) {
      for (int j = 0; j < fr.dim; ++j) {
        std::int64_t s = 0;
        for (int k = 0; k < fr.dim; ++k) s += fr.unimodular[i][k] * fr.inverse[k][j];
        CHECK(s == (i == j ? 1 : 0));
      }
    }
  };
  check(face_frame(2, {{1, 0}}, {Rational(1)}));
  check(face_frame(2, {{1, -1}}, {Rational(0)}));
  check(face_frame(3, {{2, 3, 5}}, {Rational(0)}));
  check(face_frame(3, {{1, 1, 0}, {0, 1, 1}}, {Rational(0), Rational(0)}));
  auto fr = face_frame(2, {{1, 1}}, {Rational(2)});
  Eigen::Vector2d x(0.5, 1.5);
  CHECK(fr.transverse(x)[0] == doctest::Approx(2.0));
  Eigen::VectorXd d = fr.transverse_directions().col(0);
  CHECK(fr.transverse(x + d)[0] == doctest::Approx(3.0));
  CHECK(fr.parallel(x + d)[0] == doctest::Approx(fr.parallel(x)[0]));
  CHECK_THROWS_AS(face_frame(2, {{2, 0}}, {Rational(0)}), InputError);
  CHECK_THROWS_AS(face_frame(2, {{1, 1}, {1, -1}}, {Rational(0), Rational(0)}), InputError);
}
