#include <doctest.h>

#include <filesystem>

#include "toric/spec_io.hpp"

using namespace toric;

#ifndef TORIC_SCENARIO_DIR
#error "TORIC_SCENARIO_DIR must be defined"
#endif

namespace {

const std::filesystem::path kDir = TORIC_SCENARIO_DIR;

}  // namespace

TEST_CASE("rationals parse from integers, decimals and fractions") {
  CHECK(json_rational(Json(3)) == Rational(3));
  CHECK(json_rational(Json("-5/2")) == Rational(-5, 2));
  CHECK(json_rational(Json(0.25)) == Rational(1, 4));
  CHECK_THROWS_AS(json_rational(Json("a/b")), InputError);
  CHECK_THROWS_AS(json_rational(Json("1/0")), InputError);
  CHECK(json_rational(rational_json(Rational(7, 3))) == Rational(7, 3));
}

TEST_CASE("shipped scenarios parse") {
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kDir)) {
    if (entry.path().extension() != ".json") continue;
    CAPTURE(entry.path().string());
    auto sc = parse_scenario(load_json(entry.path()), kDir);
    CHECK_FALSE(sc.name.empty());
    CHECK_NOTHROW(parse_generator(sc.generator_json, sc.polytope));
    ++count;
  }
  CHECK(count == 6);
}

TEST_CASE("shipped polytopes have the expected volumes") {
  CHECK(parse_polytope(load_json(kDir / "polytopes/interval_0_2.json")).volume() == Rational(2));
  CHECK(parse_polytope(load_json(kDir / "polytopes/simplex_3.json")).volume() == Rational(9, 2));
  auto corr = parse_polytope(load_json(kDir / "polytopes/interval_corrected.json"));
  CHECK(corr.volume() == Rational(3));
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(parse_polytope(Json::parse(R"({"dim": 1, "normals": [[1]], "offsets": [0, 1]})")), InputError);
  CHECK_THROWS_AS(parse_polytope(Json::parse(R"({"dim": 2, "normals": [[1]], "offsets": [0]})")), InputError);
  CHECK_THROWS_AS(parse_polytope(Json::parse(R"({"normals": [[1], [-1]], "offsets": [0, -1]})")), InputError);
  CHECK_THROWS_AS(parse_pl(Json::parse(R"([{"g": [1, 2], "b": 0}])"), 1), InputError);
  auto p = parse_polytope(load_json(kDir / "polytopes/interval_0_2.json"));
  CHECK_THROWS_AS(parse_generator(Json::parse(R"({"kind": "nonsense"})"), p), InputError);
  CHECK_THROWS_AS(load_json(kDir / "missing.json"), InputError);
  CHECK_THROWS_AS(parse_scenario(Json::parse(R"({"name": "x"})"), kDir), InputError);
}
