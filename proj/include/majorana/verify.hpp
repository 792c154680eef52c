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
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "majorana/companion.hpp"
#include "majorana/gate_script.hpp"
#include "majorana/io.hpp"
#include "majorana/moebius.hpp"
#include "majorana/polynomial.hpp"
#include "majorana/sphere.hpp"

namespace majorana::verify {

/// Roots from the eigenvalues of the companion matrix, with the same
/// roots-at-infinity completion as find_roots. Independent of the Aberth path.
inline Constellation oracle_roots(const MajoranaPolynomial& poly) {
  const std::size_t at_infinity = infinite_root_count(poly);
  const std::size_t degree = poly.dim() - 1 - at_infinity;
  const auto finite = majorana::detail::companion_roots(poly.coefficients().first(degree + 1));
  std::vector<ExtendedComplex> roots(finite.begin(), finite.end());
  for (std::size_t k = 0; k < at_infinity; ++k) roots.push_back(ExtendedComplex::infinity());
  sort_roots(roots);
  return Constellation(poly.dim(), std::move(roots));
}

struct TrialOutcome {
  bool pass = true;
  double deviation = 0.0;
  io::Json counterexample;  // filled on failure only
};

/// Both sides of the lift/Moebius equivariance: roots of (lift(M) psi) versus
/// M applied to the roots of psi. Deviation is the bottleneck chordal
/// distance of the best pairing.
inline TrialOutcome equivariance_trial(const MoebiusMap& map, const QuditState& state, double tol) {
  if (!is_special_unitary(map)) {
    throw Error(ErrorCode::NotUnitary, "equivariance needs a special-unitary map");
  }
  const UnitaryMatrix gate = lift_to_unitary(map, state.dim());
  const Constellation lifted = state_to_constellation(gate.apply(state));
  const Constellation moved = transform_constellation(map, state_to_constellation(state));
  TrialOutcome out;
  out.deviation = constellation_deviation(lifted, moved);
  out.pass = out.deviation <= tol;
  if (!out.pass) out.counterexample = io::Json{{"map", io::to_json(map)}, {"state", io::to_json(state)}};
  return out;
}

struct SuiteConfig {
  std::vector<std::size_t> dims{2, 3, 4, 5, 6, 7, 8};
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  double tolerance = 1e-8;

  void validate() const {
    if (dims.empty()) throw Error(ErrorCode::InvalidArgument, "suite needs at least one dim");
    for (auto d : dims) {
      if (d < 2) throw Error(ErrorCode::InvalidArgument, "suite dims must be >= 2");
    }
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "suite trials must be >= 1");
    if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "suite tolerance must be > 0");
  }
};

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t passes = 0;
  double worst_deviation = 0.0;
  std::vector<io::Json> counterexamples;
};

struct SuiteReport {
  std::vector<PropertyResult> properties;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& p : properties) f += p.trials - p.passes;
    return f;
  }
};

/// Per-trial random stream. Seeded from (suite seed, property index, trial
/// index) only, so trials can run in any order. Normal deviates use
/// Box-Muller on raw 53-bit draws, which keeps the stream identical across
/// standard libraries.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t property, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(property), static_cast<std::uint32_t>(trial)};
    engine_.seed(seq);
  }

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double normal() {
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

  Complex complex_normal() {
    const double re = normal();
    return {re, normal()};
  }

  QuditState state(std::size_t dim) {
    std::vector<Complex> a(dim);
    for (auto& x : a) x = complex_normal();
    return QuditState(std::move(a)).normalized();
  }

  MoebiusMap su2() {
    const Complex a = complex_normal();
    return from_su2(a, complex_normal());
  }

  /// Non-unitary map U diag(e^s, e^-s) V with U, V random SU(2) and s
  /// uniform in [0, 1], so singular values differ by at most a factor e^2.
  MoebiusMap general_map() {
    const MoebiusMap u = su2();
    const double s = uniform();
    const MoebiusMap v = su2();
    return compose(u, compose(MoebiusMap::make(std::exp(s), 0.0, 0.0, std::exp(-s)), v));
  }

  /// 5% infinity, 5% zero, otherwise log-uniform modulus in [1e-6, 1e6].
  ExtendedComplex extended_point() {
    const double kind = uniform();
    if (kind < 0.05) return ExtendedComplex::infinity();
    if (kind < 0.10) return Complex(0.0, 0.0);
    const double modulus = std::pow(10.0, -6.0 + 12.0 * uniform());
    return std::polar(modulus, 2.0 * std::numbers::pi * uniform());
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

inline io::Json point_json(const ExtendedComplex& z) {
  if (z.is_infinite()) return io::Json{{"inf", true}};
  return io::Json{{"re", z.value().real()}, {"im", z.value().imag()}};
}

inline TrialOutcome check(double deviation, double tol, io::Json counterexample) {
  TrialOutcome out;
  out.deviation = deviation;
  out.pass = deviation <= tol;
  if (!out.pass) out.counterexample = std::move(counterexample);
  return out;
}

/// Relative residual of the best scalar fit m2 ~ lambda m1.
inline double projective_deviation(const MoebiusMap& m1, const MoebiusMap& m2) {
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
  double r = 0.0;
  for (std::size_t i = 0; i < 4; ++i) r += std::norm(y[i] - lambda * x[i]);
  return std::sqrt(r / yy);
}

/// Frobenius distance after removing the best global phase.
inline double phase_aligned_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Complex overlap = (a.adjoint() * b).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a * phase - b).norm();
}

inline Eigen::MatrixXcd matrix_of(const MoebiusMap& m) {
  Eigen::MatrixXcd out(2, 2);
  out << m.a(), m.b(), m.c(), m.d();
  return out;
}

inline script::GateTerm random_term(TrialRng& rng, bool unitary_only) {
  script::GateTerm t;
  const std::size_t kinds = unitary_only ? 6 : 7;
  t.kind = static_cast<script::TermKind>(rng.below(kinds));
  for (std::size_t i = 0; i < script::arity(t.kind); ++i) t.params.push_back(4.0 * rng.normal());
  if (t.kind == script::TermKind::Raw) {
    // keep raw terms safely nonsingular: a = d = 3 + noise
    t.params[0] += 3.0;
    t.params[6] += 3.0;
  }
  return t;
}

}  // namespace detail

/// A named check run `trials` times; `dim` is 0 for dimension-free checks.
struct Property {
  std::string name;
  std::size_t dim = 0;
  std::function<TrialOutcome(TrialRng&)> trial;
};

inline std::vector<Property> suite_properties(const SuiteConfig& cfg) {
  using detail::check;
  using io::Json;
  const double tol = cfg.tolerance;
  std::vector<Property> props;

  props.push_back({"sphere.round_trip", 0, [](TrialRng& rng) {
                     const ExtendedComplex z = rng.extended_point();
                     return check(chordal_distance(to_plane(to_sphere(z)), z), 1e-12,
                                  Json{{"z", detail::point_json(z)}});
                   }});
  props.push_back({"sphere.chordal_is_euclidean", 0, [](TrialRng& rng) {
                     const ExtendedComplex z = rng.extended_point();
                     const ExtendedComplex w = rng.extended_point();
                     const double dev =
                         std::abs(chordal_distance(z, w) - distance(to_sphere(z), to_sphere(w)));
                     return check(dev, 1e-12,
                                  Json{{"z", detail::point_json(z)}, {"w", detail::point_json(w)}});
                   }});
  props.push_back({"sphere.antipode_is_opposite", 0, [](TrialRng& rng) {
                     const ExtendedComplex z = rng.extended_point();
                     return check(distance(to_sphere(antipode(z)), -to_sphere(z)), 1e-12,
                                  Json{{"z", detail::point_json(z)}});
                   }});
  props.push_back({"sphere.antipode_involution", 0, [](TrialRng& rng) {
                     const ExtendedComplex z = rng.extended_point();
                     const ExtendedComplex back = antipode(antipode(z));
                     double dev = chordal_distance(back, z);
                     const bool pole = z.is_infinite() || z.value() == 0.0;
                     if (pole && !(back == z)) dev = 1.0;
                     return check(dev, 1e-14, Json{{"z", detail::point_json(z)}});
                   }});

  props.push_back({"qubit.root_is_amplitude_ratio", 0, [](TrialRng& rng) {
                     const QuditState psi = rng.state(2);
                     const ExtendedComplex expected =
                         psi[1] == 0.0 ? ExtendedComplex::infinity() : ExtendedComplex(psi[0] / psi[1]);
                     const Constellation c = state_to_constellation(psi);
                     return check(chordal_distance(c[0], expected), 1e-15,
                                  Json{{"state", io::to_json(psi)}});
                   }});
  props.push_back({"qubit.bloch_equivalence", 0, [](TrialRng& rng) {
                     const QuditState psi = rng.state(2);
                     const SpherePoint p = to_sphere(state_to_constellation(psi)[0]);
                     return check(distance(p, bloch_vector(psi)), 1e-10,
                                  Json{{"state", io::to_json(psi)}});
                   }});
  props.push_back({"qubit.orthogonal_is_antipodal", 0, [](TrialRng& rng) {
                     const QuditState psi = rng.state(2);
                     const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
                     const QuditState chi({-std::conj(psi[1]) * phase, std::conj(psi[0]) * phase});
                     const ExtendedComplex rp = state_to_constellation(psi)[0];
                     const ExtendedComplex rc = state_to_constellation(chi)[0];
                     return check(chordal_distance(rc, antipode(rp)), 1e-10,
                                  Json{{"state", io::to_json(psi)}, {"orthogonal", io::to_json(chi)}});
                   }});
  props.push_back({"moebius.group_laws", 0, [](TrialRng& rng) {
                     const bool unitary = rng.uniform() < 0.5;
                     auto draw = [&] { return unitary ? rng.su2() : rng.general_map(); };
                     const MoebiusMap m1 = draw();
                     const MoebiusMap m2 = draw();
                     const MoebiusMap m3 = draw();
                     double dev = detail::projective_deviation(compose(compose(m1, m2), m3),
                                                               compose(m1, compose(m2, m3)));
                     dev = std::max(dev, detail::projective_deviation(compose(m1, inverse(m1)),
                                                                      MoebiusMap::identity()));
                     dev = std::max(dev, detail::projective_deviation(compose(inverse(m1), m1),
                                                                      MoebiusMap::identity()));
                     return check(dev, 1e-12,
                                  Json{{"m1", io::to_json(m1)}, {"m2", io::to_json(m2)},
                                       {"m3", io::to_json(m3)}});
                   }});
  props.push_back({"moebius.qubit_lift_is_matrix", 0, [](TrialRng& rng) {
                     const MoebiusMap m = rng.su2();
                     const double dev = detail::phase_aligned_distance(
                         lift_to_unitary(m, 2).matrix(), detail::matrix_of(m));
                     return check(dev, 1e-10, Json{{"map", io::to_json(m)}});
                   }});
  props.push_back({"moebius.rotation_double_cover", 0, [](TrialRng& rng) {
                     const MoebiusMap m1 = rng.su2();
                     const MoebiusMap m2 = rng.su2();
                     const MoebiusMap neg = MoebiusMap::make(-m1.a(), -m1.b(), -m1.c(), -m1.d());
                     double dev = (to_rotation(m1).matrix() - to_rotation(neg).matrix()).norm();
                     dev = std::max(dev, (to_rotation(compose(m1, m2)).matrix() -
                                          to_rotation(m1).matrix() * to_rotation(m2).matrix())
                                             .norm());
                     return check(dev, 1e-10, Json{{"m1", io::to_json(m1)}, {"m2", io::to_json(m2)}});
                   }});

  for (const std::size_t d : cfg.dims) {
    const std::string sfx = "[d=" + std::to_string(d) + "]";
    props.push_back({"majorana.scale_invariance" + sfx, d, [d](TrialRng& rng) {
                       const QuditState psi = rng.state(d);
                       const Complex s = rng.complex_normal();
                       std::vector<Complex> scaled(psi.amplitudes().begin(), psi.amplitudes().end());
                       for (auto& a : scaled) a *= s;
                       const double dev = constellation_deviation(
                           state_to_constellation(psi), state_to_constellation(QuditState(scaled)));
                       return check(dev, 1e-9,
                                    Json{{"state", io::to_json(psi)},
                                         {"scale", Json::array({s.real(), s.imag()})}});
                     }});
    props.push_back({"majorana.round_trip" + sfx, d, [d](TrialRng& rng) {
                       const QuditState psi = rng.state(d);
                       const double f =
                           projective_fidelity(psi, constellation_to_state(state_to_constellation(psi)));
                       return check(1.0 - f, 1e-10, Json{{"state", io::to_json(psi)}});
                     }});
    props.push_back({"majorana.basis_states" + sfx, d, [d](TrialRng& rng) {
                       const std::size_t level = rng.below(d);
                       std::vector<ExtendedComplex> expected(level, Complex(0.0, 0.0));
                       expected.resize(d - 1, ExtendedComplex::infinity());
                       const double dev = constellation_deviation(
                           state_to_constellation(QuditState::basis(d, level)),
                           Constellation(d, expected));
                       return check(dev, 0.0, Json{{"level", level}, {"dim", d}});
                     }});
    props.push_back({"moebius.polynomial_coherence" + sfx, d, [d](TrialRng& rng) {
                       const MoebiusMap m = rng.uniform() < 0.5 ? rng.su2() : rng.general_map();
                       const QuditState psi = rng.state(d);
                       const MajoranaPolynomial p = state_to_polynomial(psi);
                       const double dev =
                           constellation_deviation(find_roots(transform_polynomial(m, p)),
                                                   transform_constellation(m, find_roots(p)));
                       return check(dev, 1e-8,
                                    Json{{"map", io::to_json(m)}, {"state", io::to_json(psi)}});
                     }});
    props.push_back({"moebius.equivariance" + sfx, d, [d, tol](TrialRng& rng) {
                       const MoebiusMap m = rng.su2();
                       return equivariance_trial(m, rng.state(d), tol);
                     }});
    props.push_back({"moebius.lift_homomorphism" + sfx, d, [d](TrialRng& rng) {
                       const MoebiusMap m1 = rng.su2();
                       const MoebiusMap m2 = rng.su2();
                       const double dev = detail::phase_aligned_distance(
                           lift_to_unitary(compose(m1, m2), d).matrix(),
                           lift_to_unitary(m1, d).matrix() * lift_to_unitary(m2, d).matrix());
                       return check(dev, 1e-9, Json{{"m1", io::to_json(m1)}, {"m2", io::to_json(m2)}});
                     }});
    props.push_back({"moebius.not_involution" + sfx, d, [d](TrialRng&) {
                       const auto u = lift_to_unitary(standard_gate(StandardGate::Not), d).matrix();
                       const auto id = Eigen::MatrixXcd::Identity(u.rows(), u.cols());
                       return check(detail::phase_aligned_distance(u * u, id), 1e-10,
                                    Json{{"dim", d}});
                     }});
  }

  props.push_back({"script.render_round_trip", 0, [](TrialRng& rng) {
                     script::GateProgram prog;
                     const std::size_t n = 1 + rng.below(5);
                     for (std::size_t i = 0; i < n; ++i) prog.terms.push_back(detail::random_term(rng, false));
                     const std::string text = script::render(prog);
                     bool same = false;
                     try {
                       same = script::parse(text) == prog;
                     } catch (const Error&) {
                     }
                     return check(same ? 0.0 : 1.0, 0.0, Json{{"program", text}});
                   }});
  props.push_back({"script.compile_is_composition", 0, [](TrialRng& rng) {
                     script::GateProgram a{{detail::random_term(rng, false)}};
                     script::GateProgram b{{detail::random_term(rng, false)}};
                     script::GateProgram ab{{a.terms[0], b.terms[0]}};
                     const double dev = detail::projective_deviation(
                         script::compile(ab, true),
                         compose(script::compile(b, true), script::compile(a, true)));
                     return check(dev, 1e-12, Json{{"program", script::render(ab)}});
                   }});
  props.push_back({"script.error_positions", 0, [](TrialRng& rng) {
                     script::GateProgram prog;
                     const std::size_t n = 1 + rng.below(4);
                     for (std::size_t i = 0; i < n; ++i) prog.terms.push_back(detail::random_term(rng, false));
                     std::string text = script::render(prog);
                     static constexpr char kNoise[] = "();,+-/.e9xpi \n#";
                     const std::size_t edits = 1 + rng.below(3);
                     for (std::size_t e = 0; e < edits; ++e) {
                       const std::size_t at = rng.below(text.size() + 1);
                       if (rng.uniform() < 0.3 && !text.empty()) {
                         text.erase(std::min(at, text.size() - 1), 1);
                       } else {
                         text.insert(text.begin() + static_cast<std::ptrdiff_t>(at),
                                     kNoise[rng.below(sizeof kNoise - 1)]);
                       }
                     }
                     double dev = 0.0;
                     try {
                       script::parse(text);
                     } catch (const ScriptError& e) {
                       if (text.empty() ? e.pos().offset != 0 : e.pos().offset >= text.size()) dev = 1.0;
                     }
                     return check(dev, 0.0, Json{{"program", text}});
                   }});
  props.push_back({"verify.oracle_agreement", 0, [](TrialRng& rng) {
                     // cycle: plain, 1-3 vanishing leading coefficients, a doubled root
                     const std::size_t degree = 1 + rng.below(12);
                     const std::size_t flavour = rng.below(3);
                     double match_tol = 1e-8;
                     std::vector<Complex> c;
                     if (flavour == 2) {
                       std::vector<ExtendedComplex> roots;
                       const std::size_t count = std::max<std::size_t>(degree, 2);
                       for (std::size_t k = 0; k + 1 < count; ++k) roots.emplace_back(rng.complex_normal());
                       roots.push_back(roots.front());
                       const MajoranaPolynomial p = expand_roots(Constellation(count + 1, roots), 1.0);
                       c.assign(p.coefficients().begin(), p.coefficients().end());
                       match_tol = 1e-6;
                     } else {
                       for (std::size_t k = 0; k <= degree; ++k) c.push_back(rng.complex_normal());
                       if (flavour == 1) c.resize(c.size() + 1 + rng.below(3), 0.0);
                     }
                     const MajoranaPolynomial p(c);
                     const double dev = constellation_deviation(find_roots(p), oracle_roots(p));
                     Json coeffs = Json::array();
                     for (const auto& x : c) coeffs.push_back(Json::array({x.real(), x.imag()}));
                     return check(dev, match_tol, Json{{"coefficients", coeffs}});
                   }});
  return props;
}

inline SuiteReport run_suite(const SuiteConfig& cfg) {
  cfg.validate();
  constexpr std::size_t kMaxCounterexamples = 3;
  SuiteReport report;
  const auto props = suite_properties(cfg);
  for (std::size_t pi = 0; pi < props.size(); ++pi) {
    PropertyResult result;
    result.name = props[pi].name;
    result.trials = cfg.trials;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      TrialRng rng(cfg.seed, pi, t);
      TrialOutcome out;
      try {
        out = props[pi].trial(rng);
      } catch (const std::exception& e) {
        out.pass = false;
        out.deviation = std::numeric_limits<double>::infinity();
        out.counterexample = io::Json{{"trial", t}, {"exception", e.what()}};
      }
      if (out.pass) ++result.passes;
      if (!(out.deviation <= result.worst_deviation)) result.worst_deviation = out.deviation;
      if (!out.pass && result.counterexamples.size() < kMaxCounterexamples) {
        result.counterexamples.push_back(std::move(out.counterexample));
      }
    }
    report.properties.push_back(std::move(result));
  }
  return report;
}

inline io::Json to_json(const SuiteReport& report) {
  io::Json props = io::Json::array();
  for (const auto& p : report.properties) {
    io::Json ce = io::Json::array();
    for (const auto& c : p.counterexamples) ce.push_back(c);
    // JSON has no infinity; an exception-aborted trial reports null
    io::Json worst = std::isfinite(p.worst_deviation) ? io::Json(p.worst_deviation) : io::Json(nullptr);
    props.push_back(io::Json{{"name", p.name},
                             {"trials", p.trials},
                             {"passes", p.passes},
                             {"worst_deviation", worst},
                             {"counterexamples", ce}});
  }
  return io::Json{{"properties", props}};
}

}  // namespace majorana::verify
