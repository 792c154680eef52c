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
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace majorana::detail {

using cplx = std::complex<double>;

struct NewtonRatio {
  cplx ratio;       // p(z) / p'(z)
  bool at_rounding;  // |p(z)| is below the floating-point evaluation bound
};

// Error-free transformations (Knuth TwoSum, fma-based TwoProduct).
inline double two_sum(double a, double b, double& err) {
  const double s = a + b;
  const double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

inline double two_prod(double a, double b, double& err) {
  const double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}

/// p(x) by compensated Horner: the result is as accurate as if computed in
/// twice the working precision. dp receives p'(x) by plain Horner, and
/// bound the running sum |c_k| |x|^k.
inline cplx comp_horner(std::span<const cplx> c, bool reversed, cplx x, cplx& dp, double& bound) {
  const std::size_t m = c.size() - 1;
  auto coeff = [&](std::size_t k) { return reversed ? c[m - k] : c[k]; };
  cplx p = coeff(m);
  cplx err = 0.0;
  dp = 0.0;
  bound = std::abs(p);
  const double r = std::abs(x);
  for (std::size_t k = m; k-- > 0;) {
    dp = dp * x + p;
    double e1, e2, e3, e4, e5, e6, e7, e8;
    const double rr = two_sum(two_prod(p.real(), x.real(), e1), two_prod(-p.imag(), x.imag(), e2), e3);
    const double ii = two_sum(two_prod(p.real(), x.imag(), e4), two_prod(p.imag(), x.real(), e5), e6);
    const cplx a = coeff(k);
    const double sr = two_sum(rr, a.real(), e7);
    const double si = two_sum(ii, a.imag(), e8);
    err = err * x + cplx(e1 + e2 + e3 + e7, e4 + e5 + e6 + e8);
    p = cplx(sr, si);
    bound = bound * r + std::abs(a);
  }
  return p + err;
}

/// p/p' at z. For |z| > 1 the reversed polynomial is evaluated at 1/z so
/// that no power of z overflows.
inline NewtonRatio newton_ratio(std::span<const cplx> c, cplx z) {
  const std::size_t m = c.size() - 1;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double gamma = 4.0 * static_cast<double>(m + 1) * eps;
  const double err_scale = gamma * gamma;
  cplx d;
  double bound;
  if (std::abs(z) <= 1.0) {
    const cplx p = comp_horner(c, false, z, d, bound);
    if (p == 0.0) return {0.0, true};
    return {p / d, std::abs(p) <= err_scale * bound};
  }
  // p(z) = z^m q(w), q the reversed polynomial, w = 1/z.
  // p'(z) = z^(m-1) (m q(w) - w q'(w)), so p/p' = z q / (m q - w q').
  const cplx w = 1.0 / z;
  const cplx q = comp_horner(c, true, w, d, bound);
  if (q == 0.0) return {0.0, true};
  return {z * q / (static_cast<double>(m) * q - w * d), std::abs(q) <= err_scale * bound};
}

/// Starting points on the circles given by the upper convex hull of the
/// points (k, log|c_k|), one circle per hull edge, as in Bini's method.
inline std::vector<cplx> aberth_initial_guesses(std::span<const cplx> c) {
  const std::size_t m = c.size() - 1;
  std::vector<std::size_t> hull;
  auto logabs = [&](std::size_t k) { return std::log(std::abs(c[k])); };
  for (std::size_t k = 0; k <= m; ++k) {
    if (c[k] == 0.0) continue;
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull.back();
      // drop b when it lies on or below the chord a -> k
      const double cross = (static_cast<double>(b - a)) * (logabs(k) - logabs(a)) -
                           (static_cast<double>(k - a)) * (logabs(b) - logabs(a));
      if (cross >= 0.0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }

  constexpr double kSigma = 0.7;
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<cplx> guesses;
  guesses.reserve(m);
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const std::size_t lo = hull[e];
    const std::size_t hi = hull[e + 1];
    const std::size_t count = hi - lo;
    const double radius =
        std::pow(std::abs(c[lo]) / std::abs(c[hi]), 1.0 / static_cast<double>(count));
    for (std::size_t j = 0; j < count; ++j) {
      const double angle = two_pi * static_cast<double>(j) / static_cast<double>(count) +
                           two_pi * static_cast<double>(lo) / static_cast<double>(m) +
                           kSigma;
      guesses.push_back(std::polar(radius, angle));
    }
  }
  return guesses;
}

struct AberthResult {
  std::vector<cplx> roots;
  int iterations = 0;
  bool converged = false;
};

/// Aberth-Ehrlich simultaneous iteration for the finite roots of
/// c[0] + ... + c[m] z^m with c[0] != 0 and c[m] != 0. A root is frozen once
/// its correction is below tol * (1 + |z|) or its residual is at rounding
/// level. Deterministic.
inline AberthResult aberth_roots(std::span<const cplx> c, double tol, int max_iterations) {
  const std::size_t m = c.size() - 1;
  AberthResult result;
  if (m == 0) {
    result.converged = true;
    return result;
  }
  if (m == 1) {
    result.roots = {-c[0] / c[1]};
    result.converged = true;
    return result;
  }

  std::vector<cplx> z = aberth_initial_guesses(c);
  std::vector<bool> done(m, false);
  std::size_t remaining = m;

  for (int it = 1; it <= max_iterations && remaining > 0; ++it) {
    result.iterations = it;
    for (std::size_t k = 0; k < m; ++k) {
      if (done[k]) continue;
      const NewtonRatio nr = newton_ratio(c, z[k]);
      cplx sum = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      const cplx step = nr.ratio / (1.0 - nr.ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      // a residual at rounding level still takes this last correction
      if (nr.at_rounding || std::abs(step) < tol * (1.0 + std::abs(z[k]))) {
        done[k] = true;
        --remaining;
      }
    }
  }
  result.converged = remaining == 0;
  result.roots = std::move(z);
  return result;
}

}  // namespace majorana::detail
