#pragma once

#include <algorithm>
#include <cmath>
#include <string_view>

#include "anglechain/core.hpp"

namespace anglechain {

/// A target angle. Equality is decided on cosines ("|cos - cosine| <= tol"),
/// which is stable where arccos is not. For the right angle with exact
/// rational input coordinates, exact_right switches the predicate to an exact
/// zero test of the rational dot product.
struct AngleSpec {
  double radians = 0.0;
  double cosine = 1.0;
  double tol = kDefaultCosineTol;
  bool exact_right = false;

  static AngleSpec from_radians(double radians, double tol = kDefaultCosineTol);
  static AngleSpec right_angle(double tol = kDefaultCosineTol);
};

/// Accepts "pi/<q>", "<p>pi/<q>", "<p>pi", "pi", "<x>rad", "<x>deg".
/// The value must land strictly inside (0, pi); exact_right is set when it is
/// exactly pi/2.
AngleSpec parse_angle(std::string_view text, double tol = kDefaultCosineTol);

/// Cosine of the angle at vertex b between rays b->a and b->c, clamped to
/// [-1, 1]. Throws DegenerateAngleError when a or c coincides with b.
template <class A, class B, class C>
double angle_cosine(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                    const Eigen::MatrixBase<C>& c) {
  if (a.size() != b.size() || c.size() != b.size())
    throw DimensionMismatchError("angle_cosine: mixed point dimensions");
  double dot = 0.0, sq_a = 0.0, sq_c = 0.0;
  for (Index r = 0; r < b.size(); ++r) {
    const double ta = static_cast<double>(a.derived()(r)) - static_cast<double>(b.derived()(r));
    const double tc = static_cast<double>(c.derived()(r)) - static_cast<double>(b.derived()(r));
    dot += ta * tc;
    sq_a += ta * ta;
    sq_c += tc * tc;
  }
  if (sq_a == 0.0 || sq_c == 0.0)
    throw DegenerateAngleError("angle at a repeated vertex point is undefined");
  return std::clamp(dot / (std::sqrt(sq_a) * std::sqrt(sq_c)), -1.0, 1.0);
}

/// Allocation-free core shared by every counter: false when the triple is
/// degenerate (a or c coordinate-equal to b), true with the cosine otherwise.
bool try_angle_cosine(const PointSet& ps, Index a, Index b, Index c, double& out) noexcept;

double angle_cosine(const PointSet& ps, Index a, Index b, Index c);

/// Exact zero test of (a-b).(c-b) over the rationals.
template <class A, class B, class C>
bool perpendicular_exact(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                         const Eigen::MatrixBase<C>& c) {
  using S = typename A::Scalar;
  return (a.derived() - b.derived()).dot(c.derived() - b.derived()) == S(0);
}

/// Tolerance predicate on the cosine; in exact_right mode with both operands
/// rational, an exact dot-product test instead.
template <class A, class B, class C>
bool matches_angle(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                   const Eigen::MatrixBase<C>& c, const AngleSpec& spec) {
  return std::abs(angle_cosine(a, b, c) - spec.cosine) <= spec.tol;
}

/// Index form. Uses the exact rational view of the set when the spec asks for
/// an exact right angle and the set carries one; falls back to the cosine
/// tolerance otherwise.
bool matches_angle(const PointSet& ps, Index a, Index b, Index c, const AngleSpec& spec);

}  // namespace anglechain
