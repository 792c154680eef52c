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
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "majorana/error.hpp"
#include "majorana/moebius.hpp"
#include "majorana/polynomial.hpp"
#include "majorana/sphere.hpp"

namespace majorana::io {

using Json = nlohmann::ordered_json;

inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);  // no "-0"
  return buf;
}

namespace detail {

// indent > 0: pretty, with containers of scalars kept on one line;
// indent == 0: compact; indent < 0: one line with spaces after separators.
inline void dump_to(const Json& j, std::string& out, int indent, int depth) {
  if (j.is_structured() && !j.empty() && indent > 0 &&
      std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    dump_to(j, out, -1, depth);
    return;
  }
  const bool multiline = indent > 0;
  const std::string pad(multiline ? static_cast<std::size_t>(indent * (depth + 1)) : 0, ' ');
  const std::string close_pad(multiline ? static_cast<std::size_t>(indent * depth) : 0, ' ');
  const char* nl = multiline ? "\n" : "";
  const char* comma = indent < 0 ? ", " : ",";
  const char* colon = indent == 0 ? ":" : ": ";
  switch (j.type()) {
    case Json::value_t::object:
    case Json::value_t::array: {
      const bool object = j.is_object();
      if (j.empty()) {
        out += object ? "{}" : "[]";
        return;
      }
      out += object ? '{' : '[';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += comma;
        first = false;
        out += nl;
        out += pad;
        if (object) {
          out += Json(it.key()).dump();
          out += colon;
        }
        dump_to(*it, out, indent, depth + 1);
      }
      out += nl;
      out += close_pad;
      out += object ? '}' : ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_real(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

inline double real_of(const Json& j, const char* what) {
  if (!j.is_number()) throw Error(ErrorCode::FormatError, std::string(what) + " must be a number");
  return j.get<double>();
}

inline Complex pair_of(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::FormatError, std::string(what) + " must be a [re, im] pair");
  }
  return {real_of(j[0], what), real_of(j[1], what)};
}

inline Json pair_json(Complex z) { return Json::array({z.real(), z.imag()}); }

inline std::size_t dim_of(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer() ||
      j["dim"].get<long long>() < 2) {
    throw Error(ErrorCode::FormatError, "\"dim\" must be an integer >= 2");
  }
  return static_cast<std::size_t>(j["dim"].get<long long>());
}

}  // namespace detail

/// Deterministic JSON text; every float is written with 17 significant
/// digits so values round-trip exactly.
inline std::string dump(const Json& j, int indent = 2) {
  std::string out;
  detail::dump_to(j, out, indent, 0);
  out += '\n';
  return out;
}

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::FormatError, std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

// {"dim": d, "amplitudes": [[re, im], ...]}
inline Json to_json(const QuditState& state) {
  Json amps = Json::array();
  for (const auto& a : state.amplitudes()) amps.push_back(detail::pair_json(a));
  return Json{{"dim", state.dim()}, {"amplitudes", amps}};
}

inline QuditState state_from_json(const Json& j) {
  const std::size_t dim = detail::dim_of(j);
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array() || j["amplitudes"].size() != dim) {
    throw Error(ErrorCode::FormatError, "\"amplitudes\" must hold exactly dim pairs");
  }
  std::vector<Complex> a;
  for (const auto& e : j["amplitudes"]) a.push_back(detail::pair_of(e, "amplitude"));
  return QuditState(std::move(a));
}

// {"dim": d, "roots": [{"re": r, "im": i} | {"inf": true}, ...]}
inline Json to_json(const Constellation& c) {
  Json roots = Json::array();
  for (const auto& r : c.roots()) {
    if (r.is_infinite()) {
      roots.push_back(Json{{"inf", true}});
    } else {
      roots.push_back(Json{{"re", r.value().real()}, {"im", r.value().imag()}});
    }
  }
  return Json{{"dim", c.dim()}, {"roots", roots}};
}

inline Constellation constellation_from_json(const Json& j) {
  const std::size_t dim = detail::dim_of(j);
  if (!j.contains("roots") || !j["roots"].is_array() || j["roots"].size() != dim - 1) {
    throw Error(ErrorCode::FormatError, "\"roots\" must hold exactly dim - 1 entries");
  }
  std::vector<ExtendedComplex> roots;
  for (const auto& e : j["roots"]) {
    if (!e.is_object()) throw Error(ErrorCode::FormatError, "root entries must be objects");
    if (e.contains("inf")) {
      if (!e["inf"].is_boolean() || !e["inf"].get<bool>()) {
        throw Error(ErrorCode::FormatError, "\"inf\" must be true");
      }
      roots.push_back(ExtendedComplex::infinity());
      continue;
    }
    if (!e.contains("re") || !e.contains("im")) {
      throw Error(ErrorCode::FormatError, "finite roots need \"re\" and \"im\"");
    }
    roots.emplace_back(Complex(detail::real_of(e["re"], "re"), detail::real_of(e["im"], "im")));
  }
  return Constellation(dim, std::move(roots));
}

// {"a": [re, im], "b": ..., "c": ..., "d": ...}
inline Json to_json(const MoebiusMap& m) {
  return Json{{"a", detail::pair_json(m.a())},
              {"b", detail::pair_json(m.b())},
              {"c", detail::pair_json(m.c())},
              {"d", detail::pair_json(m.d())}};
}

inline MoebiusMap moebius_from_json(const Json& j) {
  for (const char* k : {"a", "b", "c", "d"}) {
    if (!j.is_object() || !j.contains(k)) {
      throw Error(ErrorCode::FormatError, std::string("missing entry \"") + k + "\"");
    }
  }
  return MoebiusMap::make(detail::pair_of(j["a"], "a"), detail::pair_of(j["b"], "b"),
                          detail::pair_of(j["c"], "c"), detail::pair_of(j["d"], "d"));
}

// {"dim": d, "rows": [[[re, im] x d] x d]}
inline Json to_json(const UnitaryMatrix& u) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < u.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < u.dim(); ++c) row.push_back(detail::pair_json(u(r, c)));
    rows.push_back(row);
  }
  return Json{{"dim", u.dim()}, {"rows", rows}};
}

inline UnitaryMatrix unitary_from_json(const Json& j) {
  const std::size_t dim = detail::dim_of(j);
  if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != dim) {
    throw Error(ErrorCode::FormatError, "\"rows\" must hold dim rows");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = j["rows"][static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != dim) {
      throw Error(ErrorCode::FormatError, "each row must hold dim entries");
    }
    for (Eigen::Index c = 0; c < n; ++c) {
      m(r, c) = detail::pair_of(row[static_cast<std::size_t>(c)], "matrix entry");
    }
  }
  return UnitaryMatrix(std::move(m));
}

// {"rows": [[x, x, x] x 3]}
inline Json to_json(const RotationMatrix& r) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(Json::array({r(i, 0), r(i, 1), r(i, 2)}));
  return Json{{"rows", rows}};
}

// {"points": [[x, y, z], ...]}
inline Json points_to_json(const std::vector<SpherePoint>& points) {
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back(Json::array({p.x, p.y, p.z}));
  return Json{{"points", arr}};
}

/// One `x,y,z` row per point, 17 significant digits.
inline std::string points_to_csv(const std::vector<SpherePoint>& points) {
  std::string out;
  for (const auto& p : points) {
    out += format_real(p.x) + "," + format_real(p.y) + "," + format_real(p.z) + "\n";
  }
  return out;
}

inline std::vector<SpherePoint> project(const Constellation& c) {
  std::vector<SpherePoint> pts;
  pts.reserve(c.roots().size());
  for (const auto& r : c.roots()) pts.push_back(to_sphere(r));
  return pts;
}

}  // namespace majorana::io
