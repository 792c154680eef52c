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

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "majorana/error.hpp"
#include "majorana/polynomial.hpp"
#include "majorana/sphere.hpp"

namespace majorana::render {

enum class ViewAxis { PlusX, MinusX, PlusY, MinusY, PlusZ, MinusZ };

struct RenderSpec {
  int size = 512;
  double point_radius = 7.0;
  ViewAxis view = ViewAxis::PlusZ;  // this axis points at the viewer

  void validate() const {
    if (size < 64) throw Error(ErrorCode::InvalidArgument, "render size must be >= 64");
    if (!(point_radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "point radius must be > 0");
  }
};

inline ViewAxis parse_view(const std::string& s) {
  if (s == "+x" || s == "x") return ViewAxis::PlusX;
  if (s == "-x") return ViewAxis::MinusX;
  if (s == "+y" || s == "y") return ViewAxis::PlusY;
  if (s == "-y") return ViewAxis::MinusY;
  if (s == "+z" || s == "z") return ViewAxis::PlusZ;
  if (s == "-z") return ViewAxis::MinusZ;
  throw Error(ErrorCode::InvalidArgument, "unknown view axis '" + s + "'");
}

namespace detail {

struct Frame {
  double right[3];
  double up[3];
  double toward[3];
};

// right-handed screen frames: right x up = toward viewer
inline Frame frame_for(ViewAxis view) {
  switch (view) {
    case ViewAxis::PlusX: return {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    case ViewAxis::MinusX: return {{0, -1, 0}, {0, 0, 1}, {-1, 0, 0}};
    case ViewAxis::PlusY: return {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    case ViewAxis::MinusY: return {{1, 0, 0}, {0, 0, 1}, {0, -1, 0}};
    case ViewAxis::PlusZ: return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    case ViewAxis::MinusZ: return {{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
  }
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
}

inline double dot(const double (&a)[3], const SpherePoint& p) {
  return a[0] * p.x + a[1] * p.y + a[2] * p.z;
}

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  // avoid "-0.000"
  if (std::string(buf) == "-0.000") return "0.000";
  return buf;
}

}  // namespace detail

struct MergedPoint {
  ExtendedComplex root;
  std::size_t multiplicity = 1;
};

/// Groups roots closer than 1e-6 (chordal) into one marker.
inline std::vector<MergedPoint> merge_coincident(const Constellation& c) {
  constexpr double kCoincident = 1e-6;
  std::vector<MergedPoint> merged;
  for (const auto& r : c.roots()) {
    bool placed = false;
    for (auto& m : merged) {
      if (chordal_distance(m.root, r) < kCoincident) {
        ++m.multiplicity;
        placed = true;
        break;
      }
    }
    if (!placed) merged.push_back({r, 1});
  }
  return merged;
}

/// Static orthographic picture of a constellation: outline, dashed equator,
/// filled markers on the visible hemisphere and hollow ones behind it.
inline std::string to_svg(const Constellation& c, const RenderSpec& spec = {}) {
  spec.validate();
  const detail::Frame f = detail::frame_for(spec.view);
  const double size = spec.size;
  const double center = size / 2.0;
  const double radius = size * 0.42;
  using detail::fmt;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.size) +
         "\" height=\"" + std::to_string(spec.size) + "\" viewBox=\"0 0 " +
         std::to_string(spec.size) + " " + std::to_string(spec.size) + "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "  <circle cx=\"" + fmt(center) + "\" cy=\"" + fmt(center) + "\" r=\"" + fmt(radius) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  // equator z = 0: semi-axes are the in-plane lengths of the screen axes
  const double rx = radius * std::sqrt(1.0 - f.right[2] * f.right[2]);
  const double ry = radius * std::sqrt(1.0 - f.up[2] * f.up[2]);
  svg += "  <ellipse cx=\"" + fmt(center) + "\" cy=\"" + fmt(center) + "\" rx=\"" + fmt(rx) +
         "\" ry=\"" + fmt(ry) +
         "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

  for (const auto& m : merge_coincident(c)) {
    const SpherePoint p = to_sphere(m.root);
    const double sx = center + radius * detail::dot(f.right, p);
    const double sy = center - radius * detail::dot(f.up, p);
    const bool front = detail::dot(f.toward, p) >= 0.0;
    svg += "  <circle cx=\"" + fmt(sx) + "\" cy=\"" + fmt(sy) + "\" r=\"" + fmt(spec.point_radius) +
           (front ? "\" fill=\"crimson\" stroke=\"crimson\"/>\n"
                  : "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n");
    if (m.multiplicity > 1) {
      svg += "  <text x=\"" + fmt(sx + spec.point_radius + 2.0) + "\" y=\"" +
             fmt(sy - spec.point_radius) + "\" font-family=\"sans-serif\" font-size=\"12\">x" +
             std::to_string(m.multiplicity) + "</text>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace majorana::render
