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
#include <limits>

#include "majorana/error.hpp"

namespace majorana {

using Complex = std::complex<double>;

/// A point of the extended complex plane. Infinity is a tagged value, never a
/// large finite number.
class ExtendedComplex {
 public:
  constexpr ExtendedComplex() = default;

  // Implicit on purpose: finite points are written as plain complex literals.
  ExtendedComplex(Complex z) : value_(z) {  // NOLINT
    if (std::isnan(z.real()) || std::isnan(z.imag())) {
      throw Error(ErrorCode::InvalidArgument,
                  "extended complex value has a NaN component");
    }
    if (std::isinf(z.real()) || std::isinf(z.imag())) {
      value_ = Complex(0.0, 0.0);
      infinite_ = true;
    }
  }
  ExtendedComplex(double re) : ExtendedComplex(Complex(re, 0.0)) {}  // NOLINT

  static ExtendedComplex infinity() {
    ExtendedComplex z;
    z.infinite_ = true;
    return z;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }

  Complex value() const {
    if (infinite_) {
      throw Error(ErrorCode::InvalidArgument,
                  "the point at infinity has no finite value");
    }
    return value_;
  }

  friend bool operator==(const ExtendedComplex& a, const ExtendedComplex& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }

 private:
  Complex value_{0.0, 0.0};
  bool infinite_ = false;
};

/// Cartesian point on the unit sphere.
struct SpherePoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }

  friend SpherePoint operator-(const SpherePoint& p) { return {-p.x, -p.y, -p.z}; }
  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

inline double distance(const SpherePoint& p, const SpherePoint& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double dz = p.z - q.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline constexpr double kSphereInputTolerance = 1e-9;
inline constexpr double kPoleTolerance = 1e-12;

/// Stereographic image (2 Re z, -2 Im z, |z|^2 - 1) / (|z|^2 + 1); infinity
/// goes to the north pole. The conjugated orientation makes the single
/// Majorana point of a qubit coincide with its Bloch vector.
inline SpherePoint to_sphere(const ExtendedComplex& point) {
  if (point.is_infinite()) return {0.0, 0.0, 1.0};
  const Complex z = point.value();
  const double r = std::abs(z);
  if (r == 0.0) return {0.0, 0.0, -1.0};
  const double c = z.real() / r;
  const double s = z.imag() / r;
  // Work with min(r, 1/r) so |z|^2 never overflows.
  if (r <= 1.0) {
    const double den = 1.0 + r * r;
    return {2.0 * r * c / den, -2.0 * r * s / den, (r * r - 1.0) / den};
  }
  const double t = 1.0 / r;
  const double den = 1.0 + t * t;
  return {2.0 * t * c / den, -2.0 * t * s / den, (1.0 - t * t) / den};
}

/// Inverse of to_sphere. Accepts inputs within 1e-9 of unit length and
/// renormalizes them first.
inline ExtendedComplex to_plane(const SpherePoint& v) {
  const double n = v.norm();
  if (!(std::abs(n - 1.0) <= kSphereInputTolerance)) {
    throw Error(ErrorCode::NotOnSphere,
                "vector norm " + std::to_string(n) + " is not 1");
  }
  const double x = v.x / n;
  const double y = v.y / n;
  const double z = v.z / n;
  if (distance({x, y, z}, {0.0, 0.0, 1.0}) <= kPoleTolerance) {
    return ExtendedComplex::infinity();
  }
  // Near the north pole 1 - z cancels; use (1 + z) / (x + i y) there.
  if (z > 0.0) return ExtendedComplex((1.0 + z) / Complex(x, y));
  return ExtendedComplex(Complex(x, -y) / (1.0 - z));
}

inline ExtendedComplex antipode(const ExtendedComplex& point) {
  if (point.is_infinite()) return Complex(0.0, 0.0);
  const Complex z = point.value();
  if (z == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
  return ExtendedComplex(-1.0 / std::conj(z));
}

/// Chordal metric on the extended plane; equals the Euclidean distance of the
/// stereographic images. Range [0, 2].
inline double chordal_distance(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.is_infinite() && b.is_infinite()) return 0.0;
  if (a.is_infinite()) return 2.0 / std::hypot(1.0, std::abs(b.value()));
  if (b.is_infinite()) return 2.0 / std::hypot(1.0, std::abs(a.value()));
  const Complex z = a.value();
  const Complex w = b.value();
  const double d = 2.0 * std::abs(z - w) /
                   (std::hypot(1.0, std::abs(z)) * std::hypot(1.0, std::abs(w)));
  return std::min(d, 2.0);
}

}  // namespace majorana
