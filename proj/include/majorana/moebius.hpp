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
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "majorana/error.hpp"
#include "majorana/polynomial.hpp"
#include "majorana/sphere.hpp"

namespace majorana {

/// z -> (a z + b) / (c z + d), stored with determinant 1. Maps that differ by
/// a nonzero scalar are the same transformation; use projectively_equal.
class MoebiusMap {
 public:
  MoebiusMap() = default;

  static MoebiusMap make(Complex a, Complex b, Complex c, Complex d) {
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    const Complex det = a * d - b * c;
    if (!(std::abs(det) > 1e-14 * scale * scale)) {
      throw Error(ErrorCode::SingularMatrix, "ad - bc vanishes");
    }
    const Complex root = std::sqrt(det);
    return MoebiusMap(a / root, b / root, c / root, d / root);
  }

  static MoebiusMap identity() { return {}; }

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  Complex c() const noexcept { return c_; }
  Complex d() const noexcept { return d_; }

  std::array<Complex, 4> entries() const noexcept { return {a_, b_, c_, d_}; }

  ExtendedComplex operator()(const ExtendedComplex& point) const {
    if (point.is_infinite()) {
      if (c_ == 0.0) return ExtendedComplex::infinity();
      return ExtendedComplex(a_ / c_);
    }
    const Complex z = point.value();
    const Complex num = a_ * z + b_;
    const Complex den = c_ * z + d_;
    if (den == 0.0) return ExtendedComplex::infinity();
    return ExtendedComplex(num / den);
  }

 private:
  MoebiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {}

  Complex a_{1.0};
  Complex b_{0.0};
  Complex c_{0.0};
  Complex d_{1.0};
};

inline ExtendedComplex apply_point(const MoebiusMap& map, const ExtendedComplex& z) {
  return map(z);
}

/// (first o second): second acts first.
inline MoebiusMap compose(const MoebiusMap& first, const MoebiusMap& second) {
  return MoebiusMap::make(first.a() * second.a() + first.b() * second.c(),
                          first.a() * second.b() + first.b() * second.d(),
                          first.c() * second.a() + first.d() * second.c(),
                          first.c() * second.b() + first.d() * second.d());
}

inline MoebiusMap inverse(const MoebiusMap& map) {
  return MoebiusMap::make(map.d(), -map.b(), -map.c(), map.a());
}

/// Proportionality of the coefficient matrices, relative to tol.
inline bool projectively_equal(const MoebiusMap& m1, const MoebiusMap& m2,
                               double tol = 1e-12) {
  const auto x = m1.entries();
  const auto y = m2.entries();
  Complex dot = 0.0;
  double xx = 0.0;
  double yy = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    dot += std::conj(x[i]) * y[i];
    xx += std::norm(x[i]);
    yy += std::norm(y[i]);
  }
  const Complex lambda = dot / xx;
  double residual = 0.0;
  for (std::size_t i = 0; i < 4; ++i) residual += std::norm(y[i] - lambda * x[i]);
  return std::sqrt(residual) <= tol * std::sqrt(yy);
}

/// The map (a, b, -b*, a*) with (a, b) rescaled to unit length.
inline MoebiusMap from_su2(Complex a, Complex b) {
  const double n = std::hypot(std::abs(a), std::abs(b));
  if (n == 0.0) throw Error(ErrorCode::ZeroInput, "su2 parameters are both zero");
  a /= n;
  b /= n;
  return MoebiusMap::make(a, b, -std::conj(b), std::conj(a));
}

inline constexpr double kSpecialUnitaryTolerance = 1e-10;

inline bool is_special_unitary(const MoebiusMap& map, double tol = kSpecialUnitaryTolerance) {
  return std::abs(map.c() + std::conj(map.b())) <= tol &&
         std::abs(map.d() - std::conj(map.a())) <= tol;
}

/// Moves every Majorana point forward by the map.
inline Constellation transform_constellation(const MoebiusMap& map,
                                             const Constellation& constellation) {
  std::vector<ExtendedComplex> roots;
  roots.reserve(constellation.roots().size());
  for (const auto& r : constellation.roots()) roots.push_back(map(r));
  return Constellation(constellation.dim(), std::move(roots));
}

namespace detail {

// poly (low degree first, current degree `degree`) *= (c0 + c1 z), in place
inline void multiply_linear(std::vector<Complex>& poly, std::size_t degree, Complex c0,
                            Complex c1) {
  poly[degree + 1] = c1 * poly[degree];
  for (std::size_t k = degree; k > 0; --k) poly[k] = c0 * poly[k] + c1 * poly[k - 1];
  poly[0] = c0 * poly[0];
}

}  // namespace detail

/// Coefficients whose roots are the images of p's roots under the map:
/// p'(z) = (c' z + d')^n p((a' z + b') / (c' z + d')) with (a', b', c', d')
/// the inverse map. Homogeneous Horner scheme, O(n^2).
inline MajoranaPolynomial transform_polynomial(const MoebiusMap& map,
                                               const MajoranaPolynomial& poly) {
  const MoebiusMap inv = inverse(map);
  const std::size_t n = poly.dim() - 1;
  // numerator A = a' z + b', denominator B = c' z + d'
  std::vector<std::vector<Complex>> b_powers(n + 1, std::vector<Complex>(n + 1, 0.0));
  b_powers[0][0] = 1.0;
  for (std::size_t j = 1; j <= n; ++j) {
    b_powers[j] = b_powers[j - 1];
    detail::multiply_linear(b_powers[j], j - 1, inv.d(), inv.c());
  }
  // S_0 = c_n; S_j = S_{j-1} * A + c_{n-j} * B^j
  std::vector<Complex> acc(n + 1, 0.0);
  acc[0] = poly[n];
  for (std::size_t j = 1; j <= n; ++j) {
    detail::multiply_linear(acc, j - 1, inv.b(), inv.a());
    const Complex coeff = poly[n - j];
    if (coeff != 0.0) {
      for (std::size_t k = 0; k <= j; ++k) acc[k] += coeff * b_powers[j][k];
    }
  }
  return MajoranaPolynomial(std::move(acc));
}

/// d x d unitary, validated on construction (U^dagger U = I within 1e-9
/// Frobenius).
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 1) {
      throw Error(ErrorCode::InvalidArgument, "unitary matrix must be square");
    }
    const auto id = Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
    const double dev = (m_.adjoint() * m_ - id).norm();
    if (!(dev <= 1e-9)) {
      throw Error(ErrorCode::NotUnitary,
                  "matrix deviates from unitarity by " + std::to_string(dev));
    }
  }

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const noexcept { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  QuditState apply(const QuditState& state) const {
    if (state.dim() != dim()) {
      throw Error(ErrorCode::DimensionMismatch, "state and gate dims differ");
    }
    Eigen::VectorXcd v(m_.rows());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = state[static_cast<std::size_t>(i)];
    const Eigen::VectorXcd out = m_ * v;
    return QuditState(std::vector<Complex>(out.data(), out.data() + out.size()));
  }

 private:
  Eigen::MatrixXcd m_;
};

/// Proper rotation of R^3, validated on construction.
class RotationMatrix {
 public:
  explicit RotationMatrix(const Eigen::Matrix3d& m) : m_(m) {
    const double dev = (m_.transpose() * m_ - Eigen::Matrix3d::Identity()).norm();
    if (!(dev <= 1e-10) || !(std::abs(m_.determinant() - 1.0) <= 1e-10)) {
      throw Error(ErrorCode::InvalidArgument, "matrix is not a proper rotation");
    }
  }

  const Eigen::Matrix3d& matrix() const noexcept { return m_; }
  double operator()(int r, int c) const { return m_(r, c); }

  SpherePoint apply(const SpherePoint& p) const {
    const Eigen::Vector3d v = m_ * Eigen::Vector3d(p.x, p.y, p.z);
    return {v.x(), v.y(), v.z()};
  }

 private:
  Eigen::Matrix3d m_;
};

namespace detail {

/// Multiply by a unit phase so the first entry of column 0 above the noise
/// floor is real positive.
inline void canonicalize_phase(Eigen::MatrixXcd& m) {
  const double cutoff = 1e-12 * m.col(0).cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex x = m(i, 0);
    if (std::abs(x) > cutoff) {
      m *= std::conj(x) / std::abs(x);
      return;
    }
  }
}

}  // namespace detail

/// The amplitude-space action of a special-unitary map on d levels: the
/// coefficient-space action of transform_polynomial conjugated by the
/// Majorana weights, rescaled to unit norm and phase-canonicalized.
inline UnitaryMatrix lift_to_unitary(const MoebiusMap& map, std::size_t dim) {
  if (dim < 2) throw Error(ErrorCode::InvalidArgument, "lift dim must be >= 2");
  if (!is_special_unitary(map)) {
    throw Error(ErrorCode::NotUnitary,
                "only special-unitary maps lift to gates; transform the constellation instead");
  }
  const std::size_t n = dim - 1;
  const auto w = majorana_weights(n);
  const auto size = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd lifted(size, size);
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<Complex> c(dim, 0.0);
    c[col] = w[col];
    const MajoranaPolynomial image = transform_polynomial(map, MajoranaPolynomial(std::move(c)));
    for (std::size_t row = 0; row < dim; ++row) {
      lifted(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = image[row] / w[row];
    }
  }
  const double s = (lifted.adjoint() * lifted).trace().real() / static_cast<double>(dim);
  lifted /= std::sqrt(s);
  detail::canonicalize_phase(lifted);
  return UnitaryMatrix(std::move(lifted));
}

namespace detail {

/// Fixed probe points spread over the sphere (golden-angle spiral).
inline std::vector<ExtendedComplex> rotation_probe_points(std::size_t count) {
  std::vector<ExtendedComplex> pts;
  pts.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(count);
    const double r = std::sqrt(1.0 - z * z);
    const double phi = golden * static_cast<double>(i);
    pts.push_back(to_plane({r * std::cos(phi), r * std::sin(phi), z}));
  }
  return pts;
}

}  // namespace detail

/// The rotation R with to_sphere(M(z)) = R to_sphere(z).
inline RotationMatrix to_rotation(const MoebiusMap& map) {
  if (!is_special_unitary(map)) {
    throw Error(ErrorCode::NotUnitary, "only special-unitary maps act as rotations");
  }
  // 1, -i and infinity project to the x, y and z axes
  const std::array<ExtendedComplex, 3> axes = {ExtendedComplex(Complex(1.0, 0.0)),
                                               ExtendedComplex(Complex(0.0, -1.0)),
                                               ExtendedComplex::infinity()};
  Eigen::Matrix3d raw;
  for (int j = 0; j < 3; ++j) {
    const SpherePoint p = to_sphere(map(axes[static_cast<std::size_t>(j)]));
    raw.col(j) = Eigen::Vector3d(p.x, p.y, p.z);
  }
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(raw, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Matrix3d nearest = svd.matrixU() * svd.matrixV().transpose();
  RotationMatrix rotation(nearest);

  for (const auto& z : detail::rotation_probe_points(20)) {
    if (distance(rotation.apply(to_sphere(z)), to_sphere(map(z))) > 1e-10) {
      throw Error(ErrorCode::NotUnitary, "map does not act as a rigid rotation");
    }
  }
  return rotation;
}

enum class StandardGate { Not, Hadamard, RotX, RotY, RotZ };

/// not: 1/z. hadamard: (z + 1)/(z - 1), the Moebius action of i H.
/// rot_x/rot_y/rot_z: from_su2 of (cos t/2, i sin t/2), (cos t/2, sin t/2)
/// and (e^{-i t/2}, 0).
inline MoebiusMap standard_gate(StandardGate gate, double angle = 0.0) {
  const double half = angle / 2.0;
  switch (gate) {
    case StandardGate::Not:
      return from_su2(0.0, Complex(0.0, 1.0));
    case StandardGate::Hadamard: {
      const Complex h(0.0, 1.0 / std::numbers::sqrt2);
      return MoebiusMap::make(h, h, h, -h);
    }
    case StandardGate::RotX:
      return from_su2(std::cos(half), Complex(0.0, std::sin(half)));
    case StandardGate::RotY:
      return from_su2(std::cos(half), std::sin(half));
    case StandardGate::RotZ:
      return from_su2(std::polar(1.0, -half), 0.0);
  }
  throw Error(ErrorCode::UnknownGate, "unknown gate");
}

/// Lookup by name: not, hadamard, rot_x, rot_y, rot_z. Rotations take one
/// angle in radians.
inline MoebiusMap standard_gate(std::string_view name, std::span<const double> params = {}) {
  struct Entry {
    std::string_view name;
    StandardGate gate;
    std::size_t arity;
  };
  static constexpr std::array<Entry, 5> table = {{{"not", StandardGate::Not, 0},
                                                  {"hadamard", StandardGate::Hadamard, 0},
                                                  {"rot_x", StandardGate::RotX, 1},
                                                  {"rot_y", StandardGate::RotY, 1},
                                                  {"rot_z", StandardGate::RotZ, 1}}};
  for (const auto& e : table) {
    if (e.name != name) continue;
    if (params.size() != e.arity) {
      throw Error(ErrorCode::ArityError, std::string(name) + " takes " +
                                             std::to_string(e.arity) + " parameter(s)");
    }
    return standard_gate(e.gate, e.arity ? params[0] : 0.0);
  }
  throw Error(ErrorCode::UnknownGate, "no standard gate named '" + std::string(name) + "'");
}

}  // namespace majorana
