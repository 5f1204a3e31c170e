#pragma once

// JSON spec files for polytopes, generators and scenarios.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/generators.hpp"
#include "toric/pl_convex.hpp"
#include "toric/polytope.hpp"
#include "toric/smoothing.hpp"
#include "toric/testconfig.hpp"

namespace toric {

using Json = nlohmann::json;

Json load_json(const std::filesystem::path& path);

/// Accepts a JSON integer, a decimal number or a string "p/q".
Rational json_rational(const Json& j);

/// {"dim", "normals", "offsets", "corrected"}.
Polytope parse_polytope(const Json& j, DelzantPolicy policy = DelzantPolicy::Require);

/// [{"g": [...], "b": ...}, ...].
PLConvex parse_pl(const Json& pieces, int dim);

struct GeneratorBundle {
  GeneratorPtr gen;
  std::optional<PLConvex> pl;
  std::optional<Decomposition> decomposition;
  double epsilon = 0.0;
  KernelKind kernel = KernelKind::Smooth;
};

/// kind: "zero", "bumps" {bumps: [{m, alpha, A, kernel}]},
/// "wall-sum" {walls: [{normal, m, alpha, A, kernel}]},
/// "pl-smooth" {pieces, epsilon, kernel, strict}.
GeneratorBundle parse_generator(const Json& j, const Polytope& p);

struct Scenario {
  std::string name;
  Polytope polytope;
  Json generator_json;
  std::vector<double> s_grid;
  std::vector<IVec> points;
  std::string battery = "standard";
  bool weighted = true;
  std::string output = ".";
};

/// "polytope" and "generator" may be inline objects or paths relative to
/// base_dir.
Scenario parse_scenario(const Json& j, const std::filesystem::path& base_dir);

Json rational_json(const Rational& q);
Json point_json(const RVec& v);

}  // namespace toric
