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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace majorana::detail {

/// Finite roots of c[0] + c[1] z + ... + c[m] z^m (c[m] != 0) as eigenvalues
/// of the balanced companion matrix. Shares no code with the Aberth solver.
/// The eigenproblem runs in long double: near-multiple roots move by the
/// square root of the backward error, and double precision alone leaves
/// them off by up to ~1e-5.
inline std::vector<std::complex<double>> companion_roots(
    std::span<const std::complex<double>> coeffs) {
  const std::size_t m = coeffs.size() - 1;
  std::vector<std::complex<double>> roots;
  if (m == 0) return roots;
  const std::complex<double> lead = coeffs[m];

  using Real = long double;
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix companion = Matrix::Zero(static_cast<Eigen::Index>(m),
                                                      static_cast<Eigen::Index>(m));
  for (std::size_t i = 1; i < m; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  }
  for (std::size_t i = 0; i < m; ++i) {
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m - 1)) =
        -Scalar(coeffs[i]) / Scalar(lead);
  }

  // Parlett-Reinsch balancing with powers of two.
  const Eigen::Index n = companion.rows();
  bool converged = false;
  while (!converged) {
    converged = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      Real col = 0.0;
      Real row = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(companion(j, i));
        row += std::abs(companion(i, j));
      }
      if (col == 0.0 || row == 0.0) continue;
      Real f = 1.0;
      const Real s = col + row;
      while (col < row / 2.0) {
        col *= 2.0;
        row /= 2.0;
        f *= 2.0;
      }
      while (col >= row * 2.0) {
        col /= 2.0;
        row *= 2.0;
        f /= 2.0;
      }
      if ((col + row) < 0.95 * s) {
        converged = false;
        companion.row(i) /= f;
        companion.col(i) *= f;
      }
    }
  }

  Eigen::ComplexEigenSolver<Matrix> solver(companion, /*computeEigenvectors=*/false);
  const auto& values = solver.eigenvalues();
  roots.reserve(m);
  for (Eigen::Index i = 0; i < values.size(); ++i) roots.emplace_back(static_cast<double>(values(i).real()), static_cast<double>(values(i).imag()));
  return roots;
}

}  // namespace majorana::detail
