// toricq: command line front end for the toric ray machinery.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "toric/acceptance.hpp"
#include "toric/limits.hpp"
#include "toric/quantization.hpp"
#include "toric/smoothing.hpp"
#include "toric/spec_io.hpp"

namespace fs = std::filesystem;
using namespace toric;

namespace {

struct Globals {
  double tol_override = 0.0;
  double max_s = 1e4;
  int threads = 1;
  std::uint64_t seed = 7;
  std::string out = "";
};

Globals g_opts;

DensityOptions density_options(bool weighted) {
  DensityOptions o;
  o.weighted = weighted;
  o.max_s = g_opts.max_s;
  if (g_opts.tol_override > 0.0) {
    o.rel_tol_1d = g_opts.tol_override;
    o.rel_tol_2d = g_opts.tol_override;
  }
  return o;
}

// Runs jobs 0..count-1 on the worker pool; results are written by index so
// the output order does not depend on scheduling.
void parallel_for(int count, const std::function<void(int)>& job) {
  const int workers = std::max(1, std::min(g_opts.threads, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x + 0.0);
  return buf;
}

// CSV sink: a file under the output directory, or stdout for "-".
class Csv {
 public:
  Csv(const std::string& dir, const std::string& name) {
    if (dir == "-") return;
    fs::create_directories(dir);
    path_ = (fs::path(dir) / name).string();
    file_.open(path_, std::ios::binary);
    if (!file_) throw InputError("cannot write " + path_);
  }
  ~Csv() {
    if (!path_.empty()) std::cerr << "wrote " << path_ << "\n";
  }
  std::ostream& os() { return path_.empty() ? std::cout : file_; }
  void comment(const std::string& text) { os() << "# " << text << "\n"; }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os() << (i ? "," : "") << cells[i];
    os() << "\n";
  }

 private:
  std::string path_;
  std::ofstream file_;
};

Scenario read_scenario(const std::string& path) {
  return parse_scenario(load_json(path), fs::path(path).parent_path());
}

std::string out_dir(const Scenario& sc) { return g_opts.out.empty() ? sc.output : g_opts.out; }

std::string point_text(const Eigen::VectorXd& x) {
  std::string s;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += (i ? " " : "") + num(x[i]);
  return s;
}

Eigen::VectorXd to_vec(const IVec& v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = static_cast<double>(v[i]);
  return out;
}

// Sample grid of P: uniform in 1-D, a square lattice clipped to P in 2-D.
std::vector<Eigen::VectorXd> sample_grid(const Polytope& p, int per_axis) {
  auto [lo, hi] = p.bounding_box();
  std::vector<Eigen::VectorXd> out;
  if (p.dim() == 1) {
    for (int i = 0; i < per_axis; ++i) {
      Eigen::VectorXd x(1);
      x[0] = lo[0] + (hi[0] - lo[0]) * i / (per_axis - 1.0);
      out.push_back(x);
    }
    return out;
  }
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      Eigen::VectorXd x(2);
      x << lo[0] + (hi[0] - lo[0]) * i / (per_axis - 1.0), lo[1] + (hi[1] - lo[1]) * j / (per_axis - 1.0);
      if (p.contains(x, 1e-12)) out.push_back(x);
    }
  }
  return out;
}

int cmd_profile(const std::string& gen_path, const std::string& poly_path, int points) {
  Polytope p = parse_polytope(load_json(poly_path));
  if (p.dim() != 1) throw InputError("profile needs a one-dimensional polytope");
  auto bundle = parse_generator(load_json(gen_path), p);
  Csv csv(g_opts.out.empty() ? "-" : g_opts.out, "profile.csv");
  csv.comment("gnuplot: set datafile separator ','; plot for [c=2:4] '" + std::string("profile.csv") +
              "' using 1:c with lines title columnhead");
  csv.row({"x", "psi2", "psi1", "psi"});
  for (const auto& x : sample_grid(p, points)) {
    GenJet j = eval_generator(*bundle.gen, p, x);
    csv.row({num(x[0]), num(j.hess(0, 0)), num(j.grad[0]), num(j.value)});
  }
  return 0;
}

int cmd_ray_density(const std::string& path, int points) {
  Scenario sc = read_scenario(path);
  auto bundle = parse_generator(sc.generator_json, sc.polytope);
  std::vector<double> grid = sc.s_grid.empty() ? std::vector<double>{1.0} : sc.s_grid;
  std::vector<IVec> ms = sc.points.empty() ? basis_census(sc.polytope) : sc.points;
  auto xs = sample_grid(sc.polytope, sc.polytope.dim() == 1 ? points : std::max(2, points / 10));
  const int jobs = static_cast<int>(ms.size() * grid.size());
  std::vector<std::vector<double>> dens(jobs);
  std::vector<double> norms(jobs);
  parallel_for(jobs, [&](int k) {
    const auto& m = ms[k / grid.size()];
    double s = grid[k % grid.size()];
    SectionDensity sd(sc.polytope, bundle.gen, to_vec(m), s, density_options(sc.weighted));
    norms[k] = sd.log_l1_norm();
    for (const auto& x : xs) dens[k].push_back(sd.normalized(x));
  });
  Csv csv(out_dir(sc), sc.name + "_ray_density.csv");
  csv.comment("normalized section densities; gnuplot: plot '" + sc.name + "_ray_density.csv' using 3:4");
  csv.row({"m", "s", "x", "density", "log_l1_norm"});
  for (int k = 0; k < jobs; ++k) {
    std::string m = point_text(to_vec(ms[k / grid.size()]));
    for (std::size_t i = 0; i < xs.size(); ++i) {
      csv.row({m, num(grid[k % grid.size()]), point_text(xs[i]), num(dens[k][i]), num(norms[k])});
    }
  }
  return 0;
}

int cmd_gcst(const std::string& path) {
  Scenario sc = read_scenario(path);
  auto bundle = parse_generator(sc.generator_json, sc.polytope);
  std::vector<double> grid = sc.s_grid.empty() ? std::vector<double>{1.0} : sc.s_grid;
  std::vector<IVec> ms = basis_census(sc.polytope);
  const int jobs = static_cast<int>(ms.size() * grid.size());
  std::vector<std::array<double, 3>> rows(jobs);
  parallel_for(jobs, [&](int k) {
    const auto& m = ms[k / grid.size()];
    double s = grid[k % grid.size()];
    auto img = gcst_image(sc.polytope, bundle.gen, m, s);
    SectionDensity sd(sc.polytope, bundle.gen, to_vec(m), s, density_options(true));
    rows[k] = {img.log_coefficient, sd.log_l1_norm(), img.log_coefficient + sd.log_l1_norm()};
  });
  Csv csv(out_dir(sc), sc.name + "_gcst.csv");
  csv.comment("coherent state transform on the monomial basis; log norms are natural logarithms");
  csv.row({"m", "s", "log_coefficient", "log_l1_norm", "log_image_norm"});
  for (int k = 0; k < jobs; ++k) {
    csv.row({point_text(to_vec(ms[k / grid.size()])), num(grid[k % grid.size()]), num(rows[k][0]), num(rows[k][1]),
             num(rows[k][2])});
  }
  return 0;
}

int cmd_decompose(const std::string& path, const std::string& height) {
  Scenario sc = read_scenario(path);
  if (!sc.generator_json.contains("pieces")) throw InputError("decompose needs a generator with 'pieces'");
  PLConvex f = parse_pl(sc.generator_json.at("pieces"), sc.polytope.dim());
  Decomposition d = decompose(f, sc.polytope);
  Json rep;
  rep["scenario"] = sc.name;
  Rational total(0);
  for (const auto& part : d.parts) {
    Json pj;
    pj["piece"] = part.piece;
    pj["volume"] = rational_json(part.poly.volume());
    pj["delzant"] = part.poly.delzant();
    pj["vertices"] = Json::array();
    for (const auto& v : part.poly.vertices()) pj["vertices"].push_back(point_json(v));
    rep["parts"].push_back(pj);
    total += part.poly.volume();
  }
  for (const auto& face : d.faces) {
    Json fj;
    fj["pieces"] = face.pieces;
    fj["codim"] = face.codim;
    fj["frame"] = face.frame.has_value();
    if (!face.frame) fj["frame_error"] = face.frame_error;
    fj["vertices"] = Json::array();
    for (const auto& v : face.vertices) fj["vertices"].push_back(point_json(v));
    rep["faces"].push_back(fj);
  }
  bool ok = total == sc.polytope.volume();
  rep["volume"] = rational_json(sc.polytope.volume());
  rep["volume_sum"] = rational_json(total);
  if (!height.empty()) {
    auto q = build_Q(f, sc.polytope, json_rational(Json(height)));
    Json qj;
    qj["K"] = rational_json(q.K);
    qj["integral"] = q.integral;
    for (const auto& v : q.q.vertices()) qj["vertices"].push_back(point_json(v));
    rep["Q"] = qj;
  }
  rep["pass"] = ok;
  std::string text = rep.dump(2) + "\n";
  if (g_opts.out.empty() || g_opts.out == "-") {
    std::cout << text;
  } else {
    fs::create_directories(g_opts.out);
    std::ofstream(fs::path(g_opts.out) / (sc.name + "_decomposition.json"), std::ios::binary) << text;
  }
  return ok ? 0 : 1;
}

int cmd_smooth(const std::string& path, const std::vector<double>& eps, bool strict, int samples) {
  Scenario sc = read_scenario(path);
  if (!sc.generator_json.contains("pieces")) throw InputError("smooth needs a generator with 'pieces'");
  PLConvex f = parse_pl(sc.generator_json.at("pieces"), sc.polytope.dim());
  Decomposition d = decompose(f, sc.polytope);
  KernelKind kernel = parse_kernel_kind(sc.generator_json.value("kernel", std::string("smooth")));
  SmoothingFactory make = [&](double e) -> GeneratorPtr {
    if (strict) return build_strict_smoothing(d, e, kernel);
    return build_nice_smoothing(d, e, kernel);
  };
  auto pts = sample_polytope(sc.polytope, samples, g_opts.seed);
  NiceReport rep = verify_nice_family(d, make, eps, pts);
  Csv csv(g_opts.out.empty() ? "-" : g_opts.out, sc.name + "_smoothing.csv");
  csv.row({"condition", "pass", "worst", "description", "detail"});
  for (const auto& c : rep.conditions) {
    csv.row({c.id, c.pass ? "1" : "0", num(c.worst), c.description, "\"" + c.detail + "\""});
  }
  return rep.all_pass() ? 0 : 1;
}

std::vector<Eigen::VectorXd> parse_path(const std::string& text, int dim) {
  std::vector<Eigen::VectorXd> out;
  std::stringstream pts(text);
  std::string item;
  while (std::getline(pts, item, ';')) {
    std::stringstream cs(item);
    std::string c;
    std::vector<double> v;
    while (std::getline(cs, c, ',')) {
      try {
        v.push_back(std::stod(c));
      } catch (const std::exception&) {
        throw InputError("bad path coordinate '" + c + "'");
      }
    }
    if (static_cast<int>(v.size()) != 2 * dim) throw InputError("path points need x and theta coordinates");
    out.push_back(Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
  }
  if (out.size() < 2) throw InputError("a path needs at least two points");
  return out;
}

int cmd_metric(const std::string& path, const std::string& polyline) {
  Scenario sc = read_scenario(path);
  auto bundle = parse_generator(sc.generator_json, sc.polytope);
  auto pts = parse_path(polyline, sc.polytope.dim());
  std::vector<double> grid = sc.s_grid.empty() ? std::vector<double>{1.0} : sc.s_grid;
  std::vector<double> len(grid.size());
  parallel_for(static_cast<int>(grid.size()),
               [&](int k) { len[k] = metric_length(sc.polytope, *bundle.gen, grid[k], pts); });
  Csv csv(out_dir(sc), sc.name + "_metric.csv");
  csv.comment("length of the polyline " + polyline + " in the ray metrics");
  csv.row({"s", "length"});
  for (std::size_t k = 0; k < grid.size(); ++k) csv.row({num(grid[k]), num(len[k])});
  return 0;
}

int cmd_verify(int criterion, const std::string& scenario_dir) {
  Json failures = Json::array();
  if (!scenario_dir.empty()) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(scenario_dir)) {
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      try {
        Scenario sc = read_scenario(f.string());
        parse_generator(sc.generator_json, sc.polytope);
        std::cout << "scenario " << f.filename().string() << " [PASS] parses\n";
      } catch (const std::exception& e) {
        std::cout << "scenario " << f.filename().string() << " [FAIL] " << e.what() << "\n";
        failures.push_back({{"scenario", f.filename().string()}, {"reason", e.what()}});
      }
    }
  }
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (criterion != 0 && id != criterion) continue;
    auto r = run_criterion(id);
    std::cout << format_result(r) << std::endl;
    if (!r.pass) failures.push_back({{"criterion", id}, {"name", r.name}, {"detail", r.detail}});
  }
  std::cout << Json{{"failures", failures}}.dump() << "\n";
  return failures.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toricq: Kahler rays, quantization limits and test configurations on toric polytopes"};
  app.set_config("--config", "", "TOML or INI file with default flag values");
  app.add_option("--tol-override", g_opts.tol_override, "relative quadrature tolerance for densities");
  app.add_option("--max-s", g_opts.max_s, "largest admissible ray parameter")->check(CLI::PositiveNumber);
  app.add_option("--threads", g_opts.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", g_opts.seed, "seed for sampled checks");
  app.add_option("--out", g_opts.out, "output directory, '-' for stdout");
  app.require_subcommand(1);

  std::function<int()> action;

  auto* profile = app.add_subcommand("profile", "psi'', psi', psi on a uniform grid of a 1-D polytope");
  std::string gen_path, poly_path;
  int points = 401;
  profile->add_option("generator", gen_path, "generator spec")->required()->check(CLI::ExistingFile);
  profile->add_option("--polytope", poly_path, "polytope spec")->required()->check(CLI::ExistingFile);
  profile->add_option("--points", points, "grid size")->check(CLI::Range(2, 1000000));
  profile->callback([&] { action = [&] { return cmd_profile(gen_path, poly_path, points); }; });

  std::string scenario;
  auto* ray = app.add_subcommand("ray-density", "normalized section densities along the ray");
  ray->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  ray->add_option("--points", points, "grid size")->check(CLI::Range(2, 1000000));
  ray->callback([&] { action = [&] { return cmd_ray_density(scenario, points); }; });

  auto* gcst = app.add_subcommand("gcst", "coherent state transform on the monomial basis");
  gcst->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  gcst->callback([&] { action = [&] { return cmd_gcst(scenario); }; });

  std::string height;
  auto* dec = app.add_subcommand("decompose", "sub-polytopes, faces of the corner locus and Q");
  dec->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  dec->add_option("--K", height, "height of Q (integer or p/q)");
  dec->callback([&] { action = [&] { return cmd_decompose(scenario, height); }; });

  std::vector<double> eps{0.05, 0.1, 0.2};
  bool strict = false;
  int samples = 150;
  auto* smooth = app.add_subcommand("smooth", "verify a family of smoothings of a PL function");
  smooth->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  smooth->add_option("--eps", eps, "epsilon values")->delimiter(',');
  smooth->add_flag("--strict", strict, "use the strictly convex variant");
  smooth->add_option("--samples", samples, "random sample points")->check(CLI::Range(1, 100000));
  smooth->callback([&] { action = [&] { return cmd_smooth(scenario, eps, strict, samples); }; });

  std::string polyline;
  auto* metric = app.add_subcommand("metric", "length of a polyline in (x, theta) along the ray");
  metric->add_option("scenario", scenario)->required()->check(CLI::ExistingFile);
  metric->add_option("--path", polyline, "points 'x..,theta..;x..,theta..'")->required();
  metric->callback([&] { action = [&] { return cmd_metric(scenario, polyline); }; });

  int criterion = 0;
  std::string scenario_dir;
  auto* verify = app.add_subcommand("verify", "acceptance criteria and scenario checks");
  verify->add_option("--criterion", criterion, "run one criterion")->check(CLI::Range(1, kCriterionCount));
  verify->add_option("--scenarios", scenario_dir, "directory of scenario files to parse")
      ->check(CLI::ExistingDirectory);
  verify->callback([&] { action = [&] { return cmd_verify(criterion, scenario_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
}
