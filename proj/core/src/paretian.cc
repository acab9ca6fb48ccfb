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

#include "ranklab/paretian.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ranklab/error.h"

namespace ranklab {
namespace {

bool AllLessEqual(std::span<const double> a, std::span<const double> b) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] > b[c]) return false;
  }
  return true;
}

void CheckFinite(std::span<const double> x) {
  for (double v : x) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite coordinate");
  }
}

}  // namespace

std::optional<std::pair<int, int>> FindNonParetianPair(const std::vector<Point>& points) {
  const int size = static_cast<int>(points.size());
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if (a != b && AllLessEqual(points[a], points[b])) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

ParetianSet ParetianSet::Build(std::vector<Point> points, std::vector<double> values) {
  if (values.empty()) return Build(std::move(points), std::move(values), 0.0, 0.0);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double f_min = *lo;
  const double f_max = *hi;
  return Build(std::move(points), std::move(values), f_min, f_max);
}

ParetianSet ParetianSet::Build(std::vector<Point> points, std::vector<double> values, double f_min, double f_max) {
  if (points.size() != values.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "got " + std::to_string(points.size()) + " points and " +
                                                   std::to_string(values.size()) + " values");
  }
  ParetianSet set;
  set.dimension_ = points.empty() ? 0 : static_cast<int>(points.front().size());
  for (const Point& z : points) {
    if (static_cast<int>(z.size()) != set.dimension_ || z.empty()) {
      throw Error(ErrorCode::kDimensionMismatch, "points must share a positive dimension");
    }
    CheckFinite(z);
  }
  CheckFinite(values);
  if (!std::isfinite(f_min) || !std::isfinite(f_max) || f_min > f_max) {
    throw Error(ErrorCode::kInvalidArgument, "value bounds must be finite with f_min <= f_max");
  }
  for (double v : values) {
    if (v < f_min || v > f_max) throw Error(ErrorCode::kInvalidArgument, "value outside [f_min, f_max]");
  }
  if (auto pair = FindNonParetianPair(points)) {
    throw Error(ErrorCode::kNotParetian,
                "NotParetian: point " + std::to_string(pair->first + 1) + " lies below point " +
                    std::to_string(pair->second + 1) + " in every coordinate",
                {pair->first + 1, pair->second + 1});
  }
  set.points_ = std::move(points);
  set.values_ = std::move(values);
  set.f_min_ = f_min;
  set.f_max_ = f_max;
  return set;
}

double ContractCoordinate(double x) {
  const double y = 2.0 * std::numbers::inv_pi * std::atan(x);
  if (y >= 1.0) return std::nextafter(1.0, 0.0);
  if (y <= -1.0) return std::nextafter(-1.0, 0.0);
  return y;
}

double ExpandCoordinate(double y) { return std::tan(0.5 * std::numbers::pi * y); }

Point Contract(std::span<const double> x) {
  Point y(x.size());
  std::transform(x.begin(), x.end(), y.begin(), ContractCoordinate);
  return y;
}

MonotoneExtension::MonotoneExtension(const ParetianSet& set)
    : dimension_(set.dimension()), values_(set.values()), f_min_(set.f_min()), f_max_(set.f_max()) {
  for (const Point& z : set.points()) cube_.push_back(Contract(z));
  if (auto pair = FindNonParetianPair(cube_)) {
    throw Error(ErrorCode::kNotParetian,
                "points " + std::to_string(pair->first + 1) + " and " + std::to_string(pair->second + 1) +
                    " become comparable after contraction onto the cube",
                {pair->first + 1, pair->second + 1});
  }
}

MonotoneExtension MonotoneExtension::InCube(const ParetianSet& set) {
  MonotoneExtension ext;
  ext.dimension_ = set.dimension();
  ext.values_ = set.values();
  ext.f_min_ = set.f_min();
  ext.f_max_ = set.f_max();
  ext.cube_ = set.points();
  for (const Point& z : ext.cube_) {
    for (double v : z) {
      if (!(std::abs(v) < 1.0)) throw Error(ErrorCode::kInvalidArgument, "point outside the open cube");
    }
  }
  return ext;
}

void MonotoneExtension::CheckCubePoint(std::span<const double> y) const {
  if (static_cast<int>(y.size()) != dimension_ && !cube_.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "query has dimension " + std::to_string(y.size()) +
                                                   ", set has " + std::to_string(dimension_));
  }
  for (double v : y) {
    if (!(std::abs(v) < 1.0)) throw Error(ErrorCode::kInvalidArgument, "query outside the open cube");
  }
}

double MonotoneExtension::DownDistance(std::span<const double> y, int axis) const {
  // Leaving the cube through its lower face always lands in D.
  double best = y[axis] + 1.0;
  for (const Point& z : cube_) {
    bool above_elsewhere = true;
    for (int c = 0; c < static_cast<int>(z.size()) && above_elsewhere; ++c) {
      if (c != axis && z[c] < y[c]) above_elsewhere = false;
    }
    if (above_elsewhere) best = std::min(best, std::max(0.0, y[axis] - z[axis]));
  }
  return best;
}

double MonotoneExtension::UpDistance(std::span<const double> y, int axis) const {
  double best = 1.0 - y[axis];
  for (const Point& z : cube_) {
    bool below_elsewhere = true;
    for (int c = 0; c < static_cast<int>(z.size()) && below_elsewhere; ++c) {
      if (c != axis && z[c] > y[c]) below_elsewhere = false;
    }
    if (below_elsewhere) best = std::min(best, std::max(0.0, z[axis] - y[axis]));
  }
  return best;
}

CubeRegion MonotoneExtension::Classify(std::span<const double> y) const {
  bool in_down = false;
  bool in_up = false;
  for (const Point& z : cube_) {
    in_down = in_down || AllLessEqual(y, z);
    in_up = in_up || AllLessEqual(z, y);
  }
  if (in_down && in_up) return CubeRegion::kOnSet;
  if (in_down) return CubeRegion::kBelow;
  if (in_up) return CubeRegion::kAbove;
  return CubeRegion::kNeither;
}

double MonotoneExtension::RegionValue(std::span<const double> y) const {
  switch (Classify(y)) {
    case CubeRegion::kBelow:
      return f_min_;
    case CubeRegion::kAbove:
      return f_max_;
    case CubeRegion::kNeither:
      return 0.5 * (f_min_ + f_max_);
    case CubeRegion::kOnSet:
      // z >= y >= z' forces z = z' = y on a Paretian set.
      for (std::size_t r = 0; r < cube_.size(); ++r) {
        if (AllLessEqual(y, cube_[r])) return values_[r];
      }
  }
  return 0.5 * (f_min_ + f_max_);
}

double MonotoneExtension::EvaluateInCube(std::span<const double> y) const {
  CheckCubePoint(y);
  double down = 0.0;
  double up = 0.0;
  for (int axis = 0; axis < static_cast<int>(y.size()); ++axis) {
    down += DownDistance(y, axis);
    up += UpDistance(y, axis);
  }
  return (down - up) + RegionValue(y);
}

double MonotoneExtension::Evaluate(std::span<const double> x) const {
  CheckFinite(x);
  const Point y = Contract(x);
  return EvaluateInCube(y);
}

double ExtendEvaluate(const ParetianSet& set, std::span<const double> x) {
  return MonotoneExtension(set).Evaluate(x);
}

}  // namespace ranklab
