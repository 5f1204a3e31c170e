#pragma once

// Normalized even bump kernels on [-1, 1] and their iterated antiderivatives.

#include <string>
#include <string_view>
#include <vector>

namespace toric {

enum class KernelKind { CosineSquared, Smooth };

KernelKind parse_kernel_kind(std::string_view name);
std::string kernel_name(KernelKind kind);

/// Unit-mass even density k on [-1, 1] with
///   cdf(u)  = int_{-1}^u k,
///   ramp(u) = int_{-1}^u cdf  (= u cdf(u) - first_moment(u)),
/// so ramp(u) = u for u >= 1. The smooth kernel is proportional to
/// exp(-1/(1-u^2)); its antiderivatives come from a cumulative table refined
/// by Gauss-Legendre inside the cell, reflected to keep the symmetry exact.
class BumpKernel {
 public:
  static const BumpKernel& get(KernelKind kind);

  KernelKind kind() const { return kind_; }
  double density(double u) const;
  double density_d1(double u) const;
  double density_d2(double u) const;
  double cdf(double u) const;
  /// int_{-1}^u t k(t) dt.
  double first_moment(double u) const;
  double ramp(double u) const;
  /// Value at u = 0.
  double peak() const { return density(0.0); }

 private:
  explicit BumpKernel(KernelKind kind);
  // Unnormalized smooth profile exp(-1/(1-u^2)).
  static double raw(double u);
  // Left-half integrals from -1 to u <= 0 (unnormalized).
  void left_integrals(double u, double& mass, double& moment) const;

  KernelKind kind_;
  double norm_ = 1.0;                // 1/Z for the smooth kernel
  std::vector<double> cum_mass_;     // cumulative integrals at cell nodes
  std::vector<double> cum_moment_;
  static constexpr int kCells = 256;
};

/// One-dimensional convex profile whose second derivative is a bump of mass
/// `mass` and half-width `half_width` centred at `center`; value and slope
/// vanish at center - half_width.
struct Bump1D {
  double center = 0.0;
  double half_width = 1.0;
  double mass = 1.0;
  KernelKind kernel = KernelKind::CosineSquared;

  struct Jet {
    double value, slope, curvature;
  };
  Jet eval(double x) const;
  double left() const { return center - half_width; }
  double right() const { return center + half_width; }
  bool open_support_contains(double x) const { return x > left() && x < right(); }
};

}  // namespace toric
