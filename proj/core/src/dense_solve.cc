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

#include "ranklab/dense_solve.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ranklab/error.h"

namespace ranklab {
namespace {

constexpr double kRelativePivotFloor = 1e-12;

struct Factorization {
  DenseMatrix lu;
  std::vector<int> perm;
};

Factorization Factor(const DenseMatrix& a) {
  const int n = a.size;
  double scale = 0.0;
  for (double v : a.entries) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) throw Error(ErrorCode::kSingularSystem, "system matrix is zero");

  Factorization f{a, std::vector<int>(n)};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  DenseMatrix& lu = f.lu;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (std::abs(lu(pivot, col)) < kRelativePivotFloor * scale) {
      throw Error(ErrorCode::kSingularSystem, "pivot below threshold in column " + std::to_string(col + 1));
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      std::swap(f.perm[pivot], f.perm[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double factor = lu(r, col) / lu(col, col);
      lu(r, col) = factor;
      for (int c = col + 1; c < n; ++c) lu(r, c) -= factor * lu(col, c);
    }
  }
  return f;
}

std::vector<double> Substitute(const Factorization& f, const std::vector<double>& b) {
  const int n = f.lu.size;
  std::vector<double> x(n);
  for (int r = 0; r < n; ++r) {
    double v = b[f.perm[r]];
    for (int c = 0; c < r; ++c) v -= f.lu(r, c) * x[c];
    x[r] = v;
  }
  for (int r = n - 1; r >= 0; --r) {
    double v = x[r];
    for (int c = r + 1; c < n; ++c) v -= f.lu(r, c) * x[c];
    x[r] = v / f.lu(r, r);
  }
  return x;
}

}  // namespace

std::vector<double> SolveDense(const DenseMatrix& a, const std::vector<double>& b) {
  const Factorization f = Factor(a);
  std::vector<double> x = Substitute(f, b);
  std::vector<double> residual(b);
  for (int r = 0; r < a.size; ++r) {
    for (int c = 0; c < a.size; ++c) residual[r] -= a(r, c) * x[c];
  }
  const std::vector<double> correction = Substitute(f, residual);
  for (int r = 0; r < a.size; ++r) x[r] += correction[r];
  return x;
}

}  // namespace ranklab
