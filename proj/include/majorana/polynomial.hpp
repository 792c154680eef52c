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
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "majorana/aberth.hpp"
#include "majorana/assignment.hpp"
#include "majorana/companion.hpp"
#include "majorana/error.hpp"
#include "majorana/sphere.hpp"

namespace majorana {

namespace detail {

inline bool all_finite(std::span<const Complex> values) {
  return std::all_of(values.begin(), values.end(), [](const Complex& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

inline double max_modulus(std::span<const Complex> values) {
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  return m;
}

inline void check_vector(std::span<const Complex> values, const char* what) {
  if (values.size() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " needs at least 2 entries, got " +
                    std::to_string(values.size()));
  }
  if (!all_finite(values)) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " has a non-finite entry");
  }
}

}  // namespace detail

/// d complex amplitudes a_0..a_{d-1}. Normalization is not required; the
/// representation is projective.
class QuditState {
 public:
  explicit QuditState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    detail::check_vector(amplitudes_, "qudit state");
    if (detail::max_modulus(amplitudes_) == 0.0) {
      throw Error(ErrorCode::ZeroState, "all amplitudes are zero");
    }
  }

  static QuditState basis(std::size_t dim, std::size_t level) {
    if (level >= dim) {
      throw Error(ErrorCode::InvalidArgument, "basis level out of range");
    }
    std::vector<Complex> a(dim, 0.0);
    a[level] = 1.0;
    return QuditState(std::move(a));
  }

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
  }

  QuditState normalized() const {
    std::vector<Complex> a = amplitudes_;
    const double n = norm();
    for (auto& x : a) x /= n;
    return QuditState(std::move(a));
  }

  /// Unit norm, first nonzero amplitude real positive. "Nonzero" means above
  /// 1e-12 of the largest modulus, so rounding noise cannot pick the phase.
  QuditState canonical() const {
    std::vector<Complex> a = amplitudes_;
    const double cutoff = 1e-12 * detail::max_modulus(a);
    Complex phase = 1.0;
    for (const auto& x : a) {
      if (std::abs(x) > cutoff) {
        phase = std::conj(x) / std::abs(x);
        break;
      }
    }
    const double n = norm();
    for (auto& x : a) x *= phase / n;
    for (auto& x : a) {
      if (std::abs(x) <= cutoff / n) x = 0.0;
    }
    return QuditState(std::move(a));
  }

 private:
  std::vector<Complex> amplitudes_;
};

/// Coefficients c_0..c_n of p(z) = sum c_k z^k, n = d - 1.
class MajoranaPolynomial {
 public:
  explicit MajoranaPolynomial(std::vector<Complex> coefficients)
      : coefficients_(std::move(coefficients)) {
    detail::check_vector(coefficients_, "Majorana polynomial");
    if (detail::max_modulus(coefficients_) == 0.0) {
      throw Error(ErrorCode::ZeroPolynomial, "all coefficients are zero");
    }
  }

  std::size_t dim() const noexcept { return coefficients_.size(); }
  std::span<const Complex> coefficients() const noexcept { return coefficients_; }
  const Complex& operator[](std::size_t i) const { return coefficients_[i]; }

 private:
  std::vector<Complex> coefficients_;
};

/// The d - 1 Majorana points of a d-level state, counted with multiplicity.
/// Order carries no meaning.
class Constellation {
 public:
  Constellation(std::size_t dim, std::vector<ExtendedComplex> roots)
      : dim_(dim), roots_(std::move(roots)) {
    if (dim < 2) throw Error(ErrorCode::InvalidArgument, "constellation dim must be >= 2");
    if (roots_.size() != dim - 1) {
      throw Error(ErrorCode::InvalidArgument,
                  "constellation of dim " + std::to_string(dim) + " needs " +
                      std::to_string(dim - 1) + " roots, got " +
                      std::to_string(roots_.size()));
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const ExtendedComplex> roots() const noexcept { return roots_; }
  const ExtendedComplex& operator[](std::size_t i) const { return roots_[i]; }

 private:
  std::size_t dim_;
  std::vector<ExtendedComplex> roots_;
};

/// sqrt(binomial(n, k)) for k = 0..n by incremental ratios, no factorials.
inline std::vector<double> binomial_sqrt_weights(std::size_t n) {
  std::vector<double> w(n + 1, 1.0);
  for (std::size_t k = 1; k <= n; ++k) {
    w[k] = w[k - 1] *
           std::sqrt(static_cast<double>(n - k + 1) / static_cast<double>(k));
  }
  return w;
}

/// Signed weights (-1)^k sqrt(binomial(n, k)) mapping amplitudes to
/// coefficients.
inline std::vector<double> majorana_weights(std::size_t n) {
  std::vector<double> w = binomial_sqrt_weights(n);
  for (std::size_t k = 1; k <= n; k += 2) w[k] = -w[k];
  return w;
}

inline MajoranaPolynomial state_to_polynomial(const QuditState& state) {
  const auto w = majorana_weights(state.dim() - 1);
  std::vector<Complex> c(state.dim());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = state[k] * w[k];
  return MajoranaPolynomial(std::move(c));
}

inline QuditState polynomial_to_state(const MajoranaPolynomial& poly) {
  const auto w = majorana_weights(poly.dim() - 1);
  std::vector<Complex> a(poly.dim());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = poly[k] / w[k];
  return QuditState(std::move(a));
}

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr double kLeadingZeroThreshold = 1e-13;
inline constexpr int kMaxAberthIterations = 200;

/// Number of roots at infinity. A leading coefficient counts as exactly zero
/// when |c_k| / sqrt(binomial(n, k)) is at most 1e-13 of the largest such
/// ratio. Comparing on the amplitude scale keeps the binomial weights (up to
/// ~1e14 at d = 101) from swamping genuine leading coefficients.
inline std::size_t infinite_root_count(const MajoranaPolynomial& poly) {
  const auto c = poly.coefficients();
  const auto w = binomial_sqrt_weights(c.size() - 1);
  double largest = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) largest = std::max(largest, std::abs(c[k]) / w[k]);
  const double cutoff = kLeadingZeroThreshold * largest;
  std::size_t k = 0;
  while (k < c.size() && std::abs(c[c.size() - 1 - k]) / w[c.size() - 1 - k] <= cutoff) ++k;
  return k;
}

/// Root order used in every Constellation this library produces: finite
/// points by (Re, Im), then infinity.
inline void sort_roots(std::vector<ExtendedComplex>& roots) {
  std::stable_sort(roots.begin(), roots.end(),
                   [](const ExtendedComplex& a, const ExtendedComplex& b) {
                     if (a.is_infinite() || b.is_infinite()) {
                       return a.is_finite() && b.is_infinite();
                     }
                     const Complex x = a.value();
                     const Complex y = b.value();
                     if (x.real() != y.real()) return x.real() < y.real();
                     return x.imag() < y.imag();
                   });
}

struct RootReport {
  Constellation constellation;
  int iterations = 0;
  bool used_fallback = false;
};

/// Root finding with diagnostics: which path produced the finite roots and
/// how many Aberth sweeps it took.
inline RootReport find_roots_report(const MajoranaPolynomial& poly,
                                    double tol = kDefaultRootTolerance) {
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "root tolerance must be > 0");
  const std::size_t n = poly.dim() - 1;
  const std::size_t at_infinity = infinite_root_count(poly);
  const std::size_t degree = n - at_infinity;
  const auto c = poly.coefficients();

  // exact zero roots are factored out before iterating
  std::size_t at_zero = 0;
  while (at_zero < degree && c[at_zero] == 0.0) ++at_zero;

  std::vector<ExtendedComplex> roots;
  roots.reserve(n);
  for (std::size_t k = 0; k < at_zero; ++k) roots.emplace_back(Complex(0.0, 0.0));

  const std::span<const Complex> reduced = c.subspan(at_zero, degree - at_zero + 1);
  auto aberth = detail::aberth_roots(reduced, tol, kMaxAberthIterations);
  bool fallback = false;
  std::vector<Complex> finite;
  if (aberth.converged) {
    finite = std::move(aberth.roots);
  } else {
    finite = detail::companion_roots(reduced);
    fallback = true;
  }
  for (const auto& r : finite) roots.emplace_back(r);
  for (std::size_t k = 0; k < at_infinity; ++k) roots.push_back(ExtendedComplex::infinity());
  sort_roots(roots);
  return {Constellation(poly.dim(), std::move(roots)), aberth.iterations, fallback};
}

inline Constellation find_roots(const MajoranaPolynomial& poly,
                                double tol = kDefaultRootTolerance) {
  return find_roots_report(poly, tol).constellation;
}

namespace detail {

/// Leja-style ordering on the sphere: each next root maximizes the product of
/// chordal distances to those already taken. Multiplying factors in this
/// order keeps partial products from growing and later cancelling, which a
/// sorted order does badly at high degree.
inline std::vector<ExtendedComplex> leja_order(std::span<const ExtendedComplex> roots) {
  const std::size_t n = roots.size();
  std::vector<ExtendedComplex> ordered;
  ordered.reserve(n);
  if (n == 0) return ordered;
  std::vector<double> score(n, 0.0);
  std::vector<bool> taken(n, false);
  std::size_t next = 0;
  for (std::size_t step = 0; step < n; ++step) {
    taken[next] = true;
    ordered.push_back(roots[next]);
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double d = chordal_distance(roots[i], roots[next]);
      score[i] += std::log(std::max(d, 1e-300));
      if (best == n || score[i] > score[best]) best = i;
    }
    next = best;
  }
  return ordered;
}

}  // namespace detail

/// scale * prod over finite roots (z - alpha), zero-padded to d
/// coefficients; roots at infinity become vanishing leading coefficients.
inline MajoranaPolynomial expand_roots(const Constellation& constellation, Complex scale) {
  if (scale == 0.0) throw Error(ErrorCode::ZeroInput, "expansion scale must be nonzero");
  std::vector<Complex> c(constellation.dim(), 0.0);
  c[0] = scale;
  std::size_t degree = 0;
  for (const auto& root : detail::leja_order(constellation.roots())) {
    if (root.is_infinite()) continue;
    const Complex alpha = root.value();
    ++degree;
    for (std::size_t k = degree; k > 0; --k) c[k] = c[k - 1] - alpha * c[k];
    c[0] = -alpha * c[0];
  }
  return MajoranaPolynomial(std::move(c));
}

inline Constellation state_to_constellation(const QuditState& state) {
  return find_roots(state_to_polynomial(state));
}

/// Inverse of state_to_constellation up to phase and amplitude. Each root
/// contributes the unit-normalized homogeneous factor (u z - v) with
/// (v : u) = (alpha : 1), so widely spread roots cannot overflow; the result
/// is the canonical representative.
inline QuditState constellation_to_state(const Constellation& constellation) {
  std::vector<Complex> c(constellation.dim(), 0.0);
  c[0] = 1.0;
  std::size_t degree = 0;
  for (const auto& root : detail::leja_order(constellation.roots())) {
    Complex u = 1.0;
    Complex v = 0.0;
    if (root.is_infinite()) {
      u = 0.0;
      v = 1.0;
    } else {
      const Complex alpha = root.value();
      const double h = std::hypot(1.0, std::abs(alpha));
      u = 1.0 / h;
      v = alpha / h;
    }
    ++degree;
    for (std::size_t k = degree; k > 0; --k) c[k] = u * c[k - 1] - v * c[k];
    c[0] = -v * c[0];
  }
  return polynomial_to_state(MajoranaPolynomial(std::move(c))).canonical();
}

/// |<a|b>| / (|a| |b|).
inline double projective_fidelity(const QuditState& a, const QuditState& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "states of dim " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
  Complex inner = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) inner += std::conj(a[k]) * b[k];
  return std::min(1.0, std::abs(inner) / (a.norm() * b.norm()));
}

/// Bloch vector of a qubit, straight from the amplitudes.
inline SpherePoint bloch_vector(const QuditState& state) {
  if (state.dim() != 2) {
    throw Error(ErrorCode::WrongDimension,
                "Bloch vector needs a qubit, got dim " + std::to_string(state.dim()));
  }
  const double n = state.norm();
  const double cos_half = std::abs(state[0]) / n;
  const double sin_half = std::abs(state[1]) / n;
  const double polar = 2.0 * std::atan2(sin_half, cos_half);
  const double azimuth = std::arg(state[1]) - std::arg(state[0]);
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

struct RootMatching {
  bool matched = false;
  // pairs[i] is the index in the second constellation paired with root i
  std::vector<std::size_t> pairs;
  double worst_distance = 0.0;
};

/// Multiset comparison under the chordal metric. The pairing is a
/// minimum-cost assignment whose cost counts out-of-tolerance pairs first and
/// total chordal distance second, so a perfect in-tolerance pairing is found
/// whenever one exists.
inline RootMatching match_constellations(const Constellation& a, const Constellation& b,
                                         double tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch,
                "constellations of dim " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
  const std::size_t n = a.dim() - 1;
  // total distance never exceeds 2n, so one violation outweighs any sum
  const double penalty = 2.0 * static_cast<double>(n) + 1.0;
  CostMatrix cost(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = chordal_distance(a[i], b[j]);
      cost(i, j) = d + (d > tol ? penalty : 0.0);
    }
  }
  const Assignment assignment = min_cost_assignment(cost);
  RootMatching result;
  result.pairs = assignment.row_to_col;
  result.matched = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = chordal_distance(a[i], b[result.pairs[i]]);
    result.worst_distance = std::max(result.worst_distance, d);
    if (d > tol) result.matched = false;
  }
  return result;
}

inline bool constellation_match(const Constellation& a, const Constellation& b, double tol) {
  return match_constellations(a, b, tol).matched;
}

/// Smallest achievable worst-pair chordal distance between two constellations
/// (bottleneck matching); the deviation reported by the property checks.
inline double constellation_deviation(const Constellation& a, const Constellation& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "constellation dims differ");
  }
  const std::size_t n = a.dim() - 1;
  std::vector<double> candidates;
  candidates.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) candidates.push_back(chordal_distance(a[i], b[j]));
  }
  std::sort(candidates.begin(), candidates.end());
  std::size_t lo = 0;
  std::size_t hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (match_constellations(a, b, candidates[mid]).matched) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return candidates[lo];
}

}  // namespace majorana
