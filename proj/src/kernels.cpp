#include "toric/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "toric/exact.hpp"
#include "toric/quadrature.hpp"

namespace toric {

KernelKind parse_kernel_kind(std::string_view name) {
  if (name == "cosine" || name == "cosine-squared" || name == "cos2") return KernelKind::CosineSquared;
  if (name == "smooth" || name == "exponential-smooth" || name == "exp") return KernelKind::Smooth;
  throw InputError("unknown kernel '" + std::string(name) + "'");
}

std::string kernel_name(KernelKind kind) {
  return kind == KernelKind::CosineSquared ? "cosine-squared" : "exponential-smooth";
}

const BumpKernel& BumpKernel::get(KernelKind kind) {
  static const BumpKernel cosine(KernelKind::CosineSquared);
  static const BumpKernel smooth(KernelKind::Smooth);
  return kind == KernelKind::CosineSquared ? cosine : smooth;
}

double BumpKernel::raw(double u) {
  double q = 1.0 - u * u;
  if (q <= 0.0) return 0.0;
  return std::exp(-1.0 / q);
}

BumpKernel::BumpKernel(KernelKind kind) : kind_(kind) {
  if (kind_ != KernelKind::Smooth) return;
  const auto& rule = gauss_legendre(20);
  cum_mass_.assign(kCells + 1, 0.0);
  cum_moment_.assign(kCells + 1, 0.0);
  const double h = 1.0 / kCells;
  for (int c = 0; c < kCells; ++c) {
    double a = -1.0 + c * h;
    double mass = 0.0, moment = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      double t = a + 0.5 * h * (rule.nodes[i] + 1.0);
      double w = 0.5 * h * rule.weights[i] * raw(t);
      mass += w;
      moment += w * t;
    }
    cum_mass_[c + 1] = cum_mass_[c] + mass;
    cum_moment_[c + 1] = cum_moment_[c] + moment;
  }
  norm_ = 1.0 / (2.0 * cum_mass_[kCells]);
}

void BumpKernel::left_integrals(double u, double& mass, double& moment) const {
  // u in [-1, 0]
  const double h = 1.0 / kCells;
  int c = static_cast<int>(std::floor((u + 1.0) / h));
  c = std::clamp(c, 0, kCells - 1);
  double a = -1.0 + c * h;
  mass = cum_mass_[c];
  moment = cum_moment_[c];
  double len = u - a;
  if (len <= 0.0) return;
  const auto& rule = gauss_legendre(20);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double t = a + 0.5 * len * (rule.nodes[i] + 1.0);
    double w = 0.5 * len * rule.weights[i] * raw(t);
    mass += w;
    moment += w * t;
  }
}

double BumpKernel::density(double u) const {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  if (kind_ == KernelKind::CosineSquared) {
    double c = std::cos(0.5 * std::numbers::pi * u);
    return c * c;
  }
  return norm_ * raw(u);
}

double BumpKernel::density_d1(double u) const {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  if (kind_ == KernelKind::CosineSquared) return -0.5 * std::numbers::pi * std::sin(std::numbers::pi * u);
  double q = 1.0 - u * u;
  return density(u) * (-2.0 * u / (q * q));
}

double BumpKernel::density_d2(double u) const {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  if (kind_ == KernelKind::CosineSquared) {
    return -0.5 * std::numbers::pi * std::numbers::pi * std::cos(std::numbers::pi * u);
  }
  double q = 1.0 - u * u;
  double a = 2.0 * u / (q * q);
  return density(u) * (a * a - 2.0 / (q * q) - 8.0 * u * u / (q * q * q));
}

double BumpKernel::cdf(double u) const {
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return 1.0;
  if (kind_ == KernelKind::CosineSquared) {
    return 0.5 * (u + 1.0) + std::sin(std::numbers::pi * u) / (2.0 * std::numbers::pi);
  }
  double mass, moment;
  if (u <= 0.0) {
    left_integrals(u, mass, moment);
    return norm_ * mass;
  }
  left_integrals(-u, mass, moment);
  return 1.0 - norm_ * mass;
}

double BumpKernel::first_moment(double u) const {
  if (u <= -1.0 || u >= 1.0) return 0.0;
  if (kind_ == KernelKind::CosineSquared) {
    const double pi = std::numbers::pi;
    // int_{-1}^u t (1 + cos(pi t))/2 dt
    return 0.25 * (u * u - 1.0) + 0.5 * (u * std::sin(pi * u) / pi + (std::cos(pi * u) + 1.0) / (pi * pi));
  }
  double mass, moment;
  left_integrals(-std::abs(u), mass, moment);
  return norm_ * moment;  // t k(t) is odd
}

double BumpKernel::ramp(double u) const {
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return u - first_moment(1.0);
  if (kind_ == KernelKind::CosineSquared) {
    const double pi = std::numbers::pi;
    return 0.25 * (u + 1.0) * (u + 1.0) - (1.0 + std::cos(pi * u)) / (2.0 * pi * pi);
  }
  return u * cdf(u) - first_moment(u);
}

Bump1D::Jet Bump1D::eval(double x) const {
  const auto& k = BumpKernel::get(kernel);
  double u = (x - center) / half_width;
  if (u <= -1.0) return {0.0, 0.0, 0.0};
  if (u >= 1.0) {
    // Past the support the profile is affine with slope `mass`.
    double at_edge = mass * half_width * k.ramp(1.0);
    return {at_edge + mass * (x - right()), mass, 0.0};
  }
  return {mass * half_width * k.ramp(u), mass * k.cdf(u), mass / half_width * k.density(u)};
}

}  // namespace toric
