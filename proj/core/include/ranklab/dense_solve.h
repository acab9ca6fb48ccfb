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

#ifndef RANKLAB_DENSE_SOLVE_H_
#define RANKLAB_DENSE_SOLVE_H_

#include <vector>

namespace ranklab {

// Row-major square matrix, small and dense.
struct DenseMatrix {
  int size = 0;
  std::vector<double> entries;

  explicit DenseMatrix(int n) : size(n), entries(static_cast<std::size_t>(n) * n, 0.0) {}
  double& operator()(int r, int c) { return entries[static_cast<std::size_t>(r) * size + c]; }
  double operator()(int r, int c) const { return entries[static_cast<std::size_t>(r) * size + c]; }
};

// Solves a * x = b by Gaussian elimination with partial pivoting followed by
// one step of iterative refinement. Throws kSingularSystem when a pivot falls
// below 1e-12 times the largest absolute entry of `a`.
std::vector<double> SolveDense(const DenseMatrix& a, const std::vector<double>& b);

}  // namespace ranklab

#endif  // RANKLAB_DENSE_SOLVE_H_
