#pragma once

// Shared helpers for the acceptance criteria, split over two sources.

#include <initializer_list>
#include <string>

#include <Eigen/Dense>

#include "toric/limits.hpp"
#include "toric/polytope.hpp"

namespace toric::acc {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Polytope interval(Rational lo, Rational hi, bool corrected);
Polytope simplex(int n);
Eigen::VectorXd point(std::initializer_list<double> xs);
std::string sci(double x);
std::string fit_text(const Diagnostic& d);

Outcome run_numeric(int id);

Outcome criterion_uniform();
Outcome criterion_gcst();
Outcome criterion_polarization();
Outcome criterion_higher_dim();
Outcome criterion_nice_family();
Outcome criterion_decomposition();
Outcome criterion_metric();

}  // namespace toric::acc
