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

#include "majorana/assignment.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

using namespace majorana;

namespace {

// Exhaustive search over all permutations.
double brute_force_min(const CostMatrix& cost) {
  std::vector<std::size_t> perm(cost.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = 1e300;
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) s += cost(i, perm[i]);
    best = std::min(best, s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST(min_cost_assignment, empty_and_single) {
  EXPECT_TRUE(min_cost_assignment(CostMatrix(0)).row_to_col.empty());
  CostMatrix one(1, 3.5);
  const auto a = min_cost_assignment(one);
  EXPECT_EQ(a.row_to_col[0], 0u);
  EXPECT_DOUBLE_EQ(a.total_cost, 3.5);
}

TEST(min_cost_assignment, prefers_anti_diagonal_when_cheaper) {
  CostMatrix c(2);
  c(0, 0) = 5;
  c(0, 1) = 1;
  c(1, 0) = 1;
  c(1, 1) = 5;
  const auto a = min_cost_assignment(c);
  EXPECT_EQ(a.row_to_col, (std::vector<std::size_t>{1, 0}));
  EXPECT_DOUBLE_EQ(a.total_cost, 2.0);
}

TEST(min_cost_assignment, matches_brute_force) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    CostMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c(i, j) = trial % 3 == 0 ? std::round(u(rng) * 2) : u(rng);
    }
    const auto a = min_cost_assignment(c);
    auto cols = a.row_to_col;
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(cols[i], i) << "not a permutation";
    EXPECT_NEAR(a.total_cost, brute_force_min(c), 1e-12);
  }
}
