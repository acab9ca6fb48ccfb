// Copyright 2026 The RankLab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANKLAB_PARETIAN_H_
#define RANKLAB_PARETIAN_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ranklab {

using Point = std::vector<double>;

// Finds an ordered pair (a, b) of distinct points where no coordinate of
// points[a] exceeds the same coordinate of points[b], i.e. points[a] <=
// points[b] componentwise. nullopt when the set is Paretian.
std::optional<std::pair<int, int>> FindNonParetianPair(const std::vector<Point>& points);

// A finite set of points in R^k in which every distinct pair has, in each
// direction, a strictly larger coordinate, together with bounded values.
class ParetianSet {
 public:
  // Bounds default to the min and max of `values` (0 for an empty set).
  // Errors: kDimensionMismatch (ragged points, value count), kInvalidArgument
  // (non-finite entries, bounds not enclosing the values), kNotParetian with
  // the 1-based indices of the offending pair. Exact duplicates are
  // NotParetian; merge them first if they are meant to be one point.
  static ParetianSet Build(std::vector<Point> points, std::vector<double> values);
  static ParetianSet Build(std::vector<Point> points, std::vector<double> values, double f_min, double f_max);

  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<double>& values() const { return values_; }
  double f_min() const { return f_min_; }
  double f_max() const { return f_max_; }

 private:
  ParetianSet() = default;

  int dimension_ = 0;
  std::vector<Point> points_;
  std::vector<double> values_;
  double f_min_ = 0.0;
  double f_max_ = 0.0;
};

// Coordinatewise contraction of R onto (-1, 1), y = (2/pi) atan x, and its
// inverse. Results that would round onto the cube boundary are pulled to the
// nearest representable interior value.
double ContractCoordinate(double x);
double ExpandCoordinate(double y);
Point Contract(std::span<const double> x);

// Where a cube point sits relative to the set: below some point only
// (D \ U), above some point only (U \ D), neither, or on the set.
enum class CubeRegion { kBelow, kAbove, kNeither, kOnSet };

// Strictly increasing extension f of the set's values to all of R^k.
//
// On the open cube L = (-1, 1)^k, with D the points of L below some set
// point and U those above some set point (everything outside L belonging to
// both):
//   d_i(y) = distance along -e_i from y into D,
//   u_i(y) = distance along +e_i from y into U,
//   f(y)   = sum_i d_i(y) - sum_i u_i(y) + f2(y),
// where f2 is F_min below, F_max above, the midpoint in neither region, and
// the stored value on the set. General points are first contracted onto L.
class MonotoneExtension {
 public:
  // Contracts the points of `set` onto the cube. Errors: kNotParetian if
  // contraction merges two points at double precision.
  explicit MonotoneExtension(const ParetianSet& set);

  // Uses the points of `set` as cube coordinates directly. Errors:
  // kInvalidArgument if a point is not strictly inside the cube.
  static MonotoneExtension InCube(const ParetianSet& set);

  int dimension() const { return dimension_; }
  const std::vector<Point>& cube_points() const { return cube_; }

  // f at x in R^k (contracted first). Errors: kDimensionMismatch,
  // kInvalidArgument for non-finite input.
  double Evaluate(std::span<const double> x) const;
  // f at y in the open cube. Errors: kDimensionMismatch, kInvalidArgument
  // when |y_i| >= 1.
  double EvaluateInCube(std::span<const double> y) const;

  double DownDistance(std::span<const double> y, int axis) const;
  double UpDistance(std::span<const double> y, int axis) const;
  CubeRegion Classify(std::span<const double> y) const;
  double RegionValue(std::span<const double> y) const;

 private:
  MonotoneExtension() = default;
  void CheckCubePoint(std::span<const double> y) const;

  int dimension_ = 0;
  std::vector<Point> cube_;
  std::vector<double> values_;
  double f_min_ = 0.0;
  double f_max_ = 0.0;
};

// Convenience: MonotoneExtension(set).Evaluate(x).
double ExtendEvaluate(const ParetianSet& set, std::span<const double> x);

}  // namespace ranklab

#endif  // RANKLAB_PARETIAN_H_
