#pragma once

// Exact rational arithmetic used wherever ties between affine functions or
// half-integer offsets must be decided without rounding.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <boost/rational.hpp>

// C++20 rewritten comparisons send boost's mixed rational/integer operator==
// into infinite recursion; exact non-template overloads take precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a.denominator() == 1 && a.numerator() == b; }
}  // namespace boost

namespace toric {

using Rational = boost::rational<std::int64_t>;
using RVec = std::vector<Rational>;
using RMat = std::vector<RVec>;
using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;

/// Thrown for malformed or inconsistent user input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a numerical procedure fails to meet its contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q", an integer, or a finite decimal ("-2.5", "1e-1" is not
/// accepted) into an exact rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}
Eigen::VectorXd to_eigen(const RVec& v);
Eigen::VectorXd to_eigen(const IVec& v);
RVec to_rational(const IVec& v);

Rational dot(const RVec& a, const RVec& b);
Rational dot(const IVec& a, const RVec& b);

std::int64_t gcd_all(const IVec& v);
/// Scales a rational vector to the primitive integer vector with the same
/// direction. Returns the positive factor f with result = f * v.
IVec primitive_direction(const RVec& v, Rational* factor = nullptr);

/// Solves the square system A x = b; nullopt when A is singular.
std::optional<RVec> solve(RMat a, RVec b);
int rank(RMat a);
/// Basis of {x : A x = 0}.
RMat nullspace(RMat a, int cols);

/// Integer determinant via fraction-free elimination (Bareiss).
std::int64_t determinant(IMat a);
/// Inverse of a unimodular integer matrix; throws when |det| != 1.
IMat unimodular_inverse(const IMat& u);

struct Halfspace {
  RVec normal;     // constraint <normal, x> >= offset
  Rational offset;
};

/// All vertices of {x : <n_i,x> >= o_i, <e_k,x> = d_k}, found by intersecting
/// every (dim - #equalities)-subset of inequality hyperplanes. Deduplicated and
/// lexicographically sorted.
std::vector<RVec> enumerate_vertices(int dim, const std::vector<Halfspace>& ineq,
                                     const std::vector<Halfspace>& eq = {});

/// Dimension of the affine hull of a point set (-1 when empty).
int affine_dimension(const std::vector<RVec>& points);

}  // namespace toric
