// Acceptance runner: one pass/fail line per criterion.

#include <cstdio>

#include <CLI11.hpp>

#include "toric/acceptance.hpp"

int main(int argc, char** argv) {
  CLI::App app{"toric acceptance criteria"};
  int only = 0;
  app.add_option("--criterion", only, "run a single criterion")->check(CLI::Range(1, toric::kCriterionCount));
  CLI11_PARSE(app, argc, argv);
  bool all_pass = true;
  for (int id = 1; id <= toric::kCriterionCount; ++id) {
    if (only != 0 && id != only) continue;
    auto r = toric::run_criterion(id);
    std::printf("%s\n", toric::format_result(r).c_str());
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
