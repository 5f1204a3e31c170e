#include <doctest.h>

#include <set>

#include "toric/smoothing.hpp"
#include "toric/testconfig.hpp"

using namespace toric;

namespace {

Polytope simplex(int n) {
  return Polytope::from_facets(2, {{{1, 0}, Rational(0)}, {{0, 1}, Rational(0)}, {{-1, -1}, Rational(-n)}});
}

AffinePiece piece(int a, int b, int c) { return {{Rational(a), Rational(b)}, Rational(c)}; }

Eigen::VectorXd vec(double a, double b) {
  Eigen::VectorXd v(2);
  v << a, b;
  return v;
}

}  // namespace

TEST_CASE("pruning drops pieces that are never active") {
  auto p = simplex(3);
  PLConvex f(2, {piece(0, 0, 0), piece(1, 0, -1), piece(1, 0, -5), piece(0, 0, 0)});
  CHECK(f.pruned(p).size() == 2);
  CHECK(f.max_on(p) == Rational(2));
  CHECK(f.eval(RVec{Rational(3), Rational(0)}) == Rational(2));
}

TEST_CASE("sum of two hinges decomposes into four parts") {
  auto p = simplex(3);
  auto d = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1), piece(0, 1, -1), piece(1, 1, -2)}), p);
  REQUIRE(d.parts.size() == 4);
  Rational vol(0);
  for (const auto& part : d.parts) {
    vol += part.poly.volume();
    CHECK(part.poly.delzant());
  }
  CHECK(vol == p.volume());
  int codim1 = 0, codim2 = 0;
  for (const auto& f : d.faces) {
    CHECK(f.frame.has_value());
    codim1 += f.codim == 1;
    codim2 += f.codim == 2;
  }
  CHECK(codim1 == 4);
  CHECK(codim2 == 1);
  CHECK(d.max_codim() == 2);
  CHECK(d.part_of(vec(0.5, 0.5)) >= 0);
  CHECK(d.part_of(vec(1.0, 0.5)) == -1);
}

TEST_CASE("thickening membership picks the deepest face") {
  auto p = simplex(3);
  auto d = decompose(PLConvex(2, {piece(0, 0, 0), piece(1, 0, -1), piece(0, 1, -1)}), p);
  auto hit = thickening_membership(d, 0.1, vec(1.05, 0.5));
  REQUIRE(hit.inside);
  CHECK(d.faces[hit.face].codim == 1);
  hit = thickening_membership(d, 0.1, vec(1.05, 0.97));
  REQUIRE(hit.inside);
  CHECK(d.faces[hit.face].codim == 2);
  CHECK_FALSE(thickening_membership(d, 0.1, vec(0.5, 0.5)).inside);
  CHECK_FALSE(thickening_membership(d, 0.1, vec(1.15, 0.5)).inside);
}

TEST_CASE("Q polytope and central fibre") {
  auto seg = Polytope::from_facets(1, {{{1}, Rational(0)}, {{-1}, Rational(-2)}});
  PLConvex f(1, {{{Rational(0)}, Rational(0)}, {{Rational(1)}, Rational(-1)}});
  auto q = build_Q(f, seg, Rational(1));
  std::set<RVec> got(q.q.vertices().begin(), q.q.vertices().end());
  std::set<RVec> want{{Rational(0), Rational(0)}, {Rational(2), Rational(0)}, {Rational(0), Rational(1)},
                      {Rational(1), Rational(1)}};
  CHECK(got == want);
  CHECK(q.integral);
  CHECK(q.q.volume() == Rational(3, 2));
  CHECK_THROWS_AS(build_Q(f, seg, Rational(1, 2)), InputError);
  auto d = decompose(f, seg);
  auto fibre = central_fiber(d, q);
  CHECK(fibre.size() == 2);
}

TEST_CASE("wall normals are primitive") {
  auto p = simplex(4);
  auto d = decompose(PLConvex(2, {piece(0, 0, 0), piece(2, -1, -2)}), p);
  REQUIRE(d.faces.size() == 1);
  REQUIRE(d.faces[0].frame.has_value());
  CHECK(d.faces[0].frame->normal(0) == IVec{2, -1});
  auto scaled = decompose(PLConvex(2, {piece(0, 0, 0), piece(2, 0, -2)}), p);
  REQUIRE(scaled.faces.size() == 1);
  CHECK(scaled.faces[0].frame->normal(0) == IVec{1, 0});
}
