#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anglechain/errors.hpp"

namespace anglechain {

using Index = Eigen::Index;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec = VecX<double>;
using Mat = MatX<double>;
using RationalMat = MatX<Rational>;

// Tolerance applied to cosines when testing angle equality.
inline constexpr double kDefaultCosineTol = 1e-9;

/// A finite point set in R^d. Points are the columns of a d x n matrix, so
/// Eigen expressions (`ps.point(i) - ps.point(j)`, colwise reductions, ...)
/// apply directly. An optional pin marks a distinguished point and an
/// optional exact view carries rational coordinates when the input was exact.
template <class Scalar>
class PointSetT {
 public:
  explicit PointSetT(Index dim) : coords_(dim, 0) {
    if (dim < 2) throw DimensionMismatchError("point dimension must be >= 2");
  }

  static PointSetT from_columns(MatX<Scalar> cols) {
    PointSetT ps(cols.rows());
    ps.coords_ = std::move(cols);
    return ps;
  }

  Index dim() const { return coords_.rows(); }
  Index size() const { return coords_.cols(); }

  auto point(Index i) const { return coords_.col(i); }

  const MatX<Scalar>& coords() const { return coords_; }

  void append(const Eigen::Ref<const VecX<Scalar>>& p) {
    if (p.size() != dim())
      throw DimensionMismatchError("appending a point of dimension " +
                                   std::to_string(p.size()) + " to a set of dimension " +
                                   std::to_string(dim()));
    coords_.conservativeResize(Eigen::NoChange, coords_.cols() + 1);
    coords_.col(coords_.cols() - 1) = p;
  }

  void set_point(Index i, const Eigen::Ref<const VecX<Scalar>>& p) {
    coords_.col(i) = p;
    exact_.reset();
  }

  std::optional<Index> pin() const { return pin_; }
  void set_pin(Index i) {
    if (i < 0 || i >= size()) throw OutOfRangeError("pin index out of range");
    pin_ = i;
  }
  void clear_pin() { pin_.reset(); }

  bool has_exact() const { return exact_.has_value(); }
  const RationalMat& exact() const { return *exact_; }
  void attach_exact(RationalMat m) {
    if (m.rows() != coords_.rows() || m.cols() != coords_.cols())
      throw DimensionMismatchError("exact coordinate matrix shape mismatch");
    exact_ = std::move(m);
  }

 private:
  MatX<Scalar> coords_;
  std::optional<Index> pin_;
  std::optional<RationalMat> exact_;
};

using PointSet = PointSetT<double>;

/// x -> scale * rotation * x + translation. Angles (and therefore chain
/// counts) are invariant under these maps.
template <class Scalar>
struct SimilarityTransformT {
  MatX<Scalar> rotation;
  VecX<Scalar> translation;
  Scalar scale = Scalar(1);

  static SimilarityTransformT identity(Index dim) {
    return {MatX<Scalar>::Identity(dim, dim), VecX<Scalar>::Zero(dim), Scalar(1)};
  }

  // Rotation by theta in the (axis0, axis1) coordinate plane.
  static SimilarityTransformT plane_rotation(Index dim, double theta, Index axis0 = 0,
                                             Index axis1 = 1) {
    SimilarityTransformT t = identity(dim);
    const Scalar c = std::cos(theta), s = std::sin(theta);
    t.rotation(axis0, axis0) = c;
    t.rotation(axis0, axis1) = -s;
    t.rotation(axis1, axis0) = s;
    t.rotation(axis1, axis1) = c;
    return t;
  }

  void validate() const {
    if (rotation.rows() != rotation.cols() || rotation.rows() != translation.size())
      throw DimensionMismatchError("similarity transform shape mismatch");
    if (!(scale > Scalar(0))) throw InvalidParamsError("similarity scale must be positive");
    const MatX<Scalar> gram = rotation * rotation.transpose();
    const double err =
        (gram - MatX<Scalar>::Identity(rotation.rows(), rotation.cols())).cwiseAbs().maxCoeff();
    if (err > 1e-12)
      throw InvalidParamsError("rotation is not orthogonal (|R R^T - I| = " +
                               std::to_string(err) + ")");
  }
};

using SimilarityTransform = SimilarityTransformT<double>;

template <class Scalar>
PointSetT<Scalar> apply_similarity(const PointSetT<Scalar>& ps,
                                   const SimilarityTransformT<Scalar>& t) {
  t.validate();
  if (t.rotation.rows() != ps.dim())
    throw DimensionMismatchError("transform dimension " + std::to_string(t.rotation.rows()) +
                                 " does not match point set dimension " +
                                 std::to_string(ps.dim()));
  MatX<Scalar> mapped = (t.scale * (t.rotation * ps.coords())).colwise() + t.translation;
  auto out = PointSetT<Scalar>::from_columns(std::move(mapped));
  if (ps.pin()) out.set_pin(*ps.pin());
  return out;
}

/// Non-fatal findings about a point set: duplicate points are flagged here
/// (angle counters reject them unless explicitly permitted).
std::vector<std::string> validate_pointset(const PointSet& ps);

/// Throws DuplicatePointsError / InvalidParamsError when the set cannot be fed
/// to the angle counters. Duplicates pass only with allow_duplicates.
void require_countable(const PointSet& ps, bool allow_duplicates);

}  // namespace anglechain
