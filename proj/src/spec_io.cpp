#include "toric/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace toric {

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

Rational json_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_number_float()) return parse_rational(j.dump());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational number, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

IVec int_vector(const Json& j) {
  if (!j.is_array()) throw InputError("expected an integer list, got " + j.dump());
  IVec v;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw InputError("expected an integer, got " + e.dump());
    v.push_back(e.get<std::int64_t>());
  }
  return v;
}

double number(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
  throw InputError(std::string("field '") + key + "' must be a number");
}

double required_number(const Json& j, const char* key) {
  field(j, key);
  return number(j, key, 0.0);
}

KernelKind kernel_of(const Json& j, KernelKind fallback) {
  return j.contains("kernel") ? parse_kernel_kind(j.at("kernel").get<std::string>()) : fallback;
}

Json resolve(const Json& j, const std::filesystem::path& base) {
  if (j.is_string()) return load_json(base / j.get<std::string>());
  return j;
}

}  // namespace

Polytope parse_polytope(const Json& j, DelzantPolicy policy) {
  try {
    int dim = field(j, "dim").get<int>();
    const auto& normals = field(j, "normals");
    const auto& offsets = field(j, "offsets");
    if (!normals.is_array() || !offsets.is_array() || normals.size() != offsets.size()) {
      throw InputError("normals and offsets must be lists of equal length");
    }
    std::vector<Facet> facets;
    for (std::size_t i = 0; i < normals.size(); ++i) facets.push_back({int_vector(normals[i]), json_rational(offsets[i])});
    bool corrected = j.value("corrected", false);
    return Polytope::from_facets(dim, facets, corrected, policy);
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad polytope spec: ") + e.what());
  }
}

PLConvex parse_pl(const Json& pieces, int dim) {
  if (!pieces.is_array()) throw InputError("pieces must be a list");
  std::vector<AffinePiece> out;
  for (const auto& p : pieces) {
    const auto& g = field(p, "g");
    if (!g.is_array()) throw InputError("piece gradient must be a list");
    RVec gv;
    for (const auto& e : g) gv.push_back(json_rational(e));
    out.push_back({gv, json_rational(field(p, "b"))});
  }
  return PLConvex(dim, out);
}

GeneratorBundle parse_generator(const Json& j, const Polytope& p) {
  try {
    GeneratorBundle out;
    std::string kind = field(j, "kind").get<std::string>();
    if (kind == "zero") {
      out.gen = std::make_shared<ZeroGenerator>(p.dim());
    } else if (kind == "bumps") {
      std::vector<BumpSpec> bumps;
      for (const auto& b : field(j, "bumps")) {
        bumps.push_back({required_number(b, "m"), required_number(b, "alpha"), required_number(b, "A"),
                         kernel_of(b, KernelKind::CosineSquared)});
      }
      out.gen = build_bump_generator(p, bumps);
    } else if (kind == "wall-sum") {
      std::vector<Wall> walls;
      for (const auto& w : field(j, "walls")) {
        IVec normal = int_vector(field(w, "normal"));
        Rational c = json_rational(field(w, "m"));
        FaceFrame fr = face_frame(p, {normal}, {c});
        walls.push_back({fr, BumpSpec{to_double(c), required_number(w, "alpha"), required_number(w, "A"),
                                      kernel_of(w, KernelKind::Smooth)}});
      }
      out.gen = build_wall_sum(p, walls);
    } else if (kind == "pl-smooth") {
      out.pl = parse_pl(field(j, "pieces"), p.dim());
      out.decomposition = decompose(*out.pl, p);
      out.epsilon = required_number(j, "epsilon");
      out.kernel = kernel_of(j, KernelKind::Smooth);
      if (j.value("strict", false)) {
        out.gen = build_strict_smoothing(*out.decomposition, out.epsilon, out.kernel);
      } else {
        out.gen = build_nice_smoothing(*out.decomposition, out.epsilon, out.kernel);
      }
    } else {
      throw InputError("unknown generator kind '" + kind + "'");
    }
    return out;
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad generator spec: ") + e.what());
  }
}

Scenario parse_scenario(const Json& j, const std::filesystem::path& base_dir) {
  try {
    Scenario sc;
    sc.name = j.value("name", std::string("scenario"));
    sc.polytope = parse_polytope(resolve(field(j, "polytope"), base_dir));
    sc.generator_json = j.contains("generator") ? resolve(j.at("generator"), base_dir) : Json{{"kind", "zero"}};
    if (j.contains("s_grid")) {
      for (const auto& s : j.at("s_grid")) sc.s_grid.push_back(s.get<double>());
    }
    for (std::size_t i = 0; i < sc.s_grid.size(); ++i) {
      if (!(sc.s_grid[i] > 0.0) || (i > 0 && sc.s_grid[i] <= sc.s_grid[i - 1])) {
        throw InputError("s grid must be positive and increasing");
      }
    }
    if (j.contains("points")) {
      for (const auto& pt : j.at("points")) sc.points.push_back(int_vector(pt));
    }
    sc.battery = j.value("battery", std::string("standard"));
    if (sc.battery != "standard") throw InputError("unknown battery '" + sc.battery + "'");
    sc.weighted = j.value("weighted", true);
    sc.output = j.value("output", std::string("."));
    return sc;
  } catch (const Json::exception& e) {
    throw InputError(std::string("bad scenario: ") + e.what());
  }
}

Json rational_json(const Rational& q) { return to_string(q); }

Json point_json(const RVec& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

}  // namespace toric
