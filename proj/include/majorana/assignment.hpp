// Copyright 2026 The majorana-sphere Authors
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

#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "majorana/error.hpp"

namespace majorana {

/// Dense square cost matrix stored row-major.
class CostMatrix {
 public:
  explicit CostMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

struct Assignment {
  // column assigned to each row
  std::vector<std::size_t> row_to_col;
  double total_cost = 0.0;
};

/// Minimum-cost perfect assignment (Hungarian method with potentials,
/// O(n^3)). Costs must be finite.
inline Assignment min_cost_assignment(const CostMatrix& cost) {
  const std::size_t n = cost.size();
  Assignment result;
  result.row_to_col.assign(n, 0);
  if (n == 0) return result;

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based bookkeeping; index 0 is the virtual source row/column.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);

  for (std::size_t row = 1; row <= n; ++row) {
    match[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t row0 = match[col0];
      double delta = kInf;
      std::size_t col1 = 0;
      for (std::size_t col = 1; col <= n; ++col) {
        if (used[col]) continue;
        const double reduced = cost(row0 - 1, col - 1) - u[row0] - v[col];
        if (reduced < minv[col]) {
          minv[col] = reduced;
          way[col] = col0;
        }
        if (minv[col] < delta) {
          delta = minv[col];
          col1 = col;
        }
      }
      for (std::size_t col = 0; col <= n; ++col) {
        if (used[col]) {
          u[match[col]] += delta;
          v[col] -= delta;
        } else {
          minv[col] -= delta;
        }
      }
      col0 = col1;
    } while (match[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match[col0] = match[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  for (std::size_t col = 1; col <= n; ++col) {
    result.row_to_col[match[col] - 1] = col - 1;
  }
  for (std::size_t row = 0; row < n; ++row) {
    result.total_cost += cost(row, result.row_to_col[row]);
  }
  return result;
}

}  // namespace majorana
