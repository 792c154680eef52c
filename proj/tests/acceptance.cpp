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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "majorana/majorana.hpp"

using namespace majorana;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Rng {
  std::mt19937_64 eng;
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  Complex c() { return {g(eng), g(eng)}; }
  QuditState state(std::size_t d) {
    std::vector<Complex> a(d);
    for (auto& x : a) x = c();
    return QuditState(a).normalized();
  }
  MoebiusMap su2() {
    const Complex a = c();
    const Complex b = c();
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return from_su2(a / n, b / n);
  }
  ExtendedComplex point() {
    const double pick = u(eng);
    if (pick < 0.05) return ExtendedComplex::infinity();
    if (pick < 0.10) return Complex(0.0);
    return std::polar(std::pow(10.0, -6.0 + 12.0 * u(eng)), 2.0 * M_PI * u(eng));
  }
};

Eigen::MatrixXcd matrix_of(const MoebiusMap& m) {
  Eigen::MatrixXcd out(2, 2);
  out << m.a(), m.b(), m.c(), m.d();
  return out;
}

double phase_aligned(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Complex overlap = (a.adjoint() * b).trace();
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a * phase - b).norm();
}

double entrywise_phase_aligned(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Complex overlap = (a.adjoint() * b).trace();
  return (a * (overlap / std::abs(overlap)) - b).cwiseAbs().maxCoeff();
}

int failures = 0;

void report(int n, bool pass, const std::string& what) {
  std::printf("criterion %2d: %s  %s\n", n, pass ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

void qutrit_not() {
  const auto start = Clock::now();
  const UnitaryMatrix u = lift_to_unitary(script::compile("not"), 3);
  const double ms = ms_since(start);
  Eigen::MatrixXcd expected(3, 3);
  expected << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  const double err = entrywise_phase_aligned(u.matrix(), expected);
  report(1, err <= 1e-10 && ms < 10.0, fmt("qutrit NOT lift: max entry error %.3g, %.3f ms", err, ms));
}

void hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd h(2, 2);
  h << s, s, s, -s;
  Eigen::MatrixXcd literal(2, 2);
  literal << s, -s, s, s;
  const double e1 = entrywise_phase_aligned(lift_to_unitary(MoebiusMap::make(1.0, 1.0, 1.0, -1.0), 2).matrix(), h);
  const double e2 = entrywise_phase_aligned(lift_to_unitary(MoebiusMap::make(1.0, -1.0, 1.0, 1.0), 2).matrix(), literal);
  const double e3 = entrywise_phase_aligned(lift_to_unitary(standard_gate(StandardGate::Hadamard), 2).matrix(), h);
  const double worst = std::max({e1, e2, e3});
  report(2, worst <= 1e-10, fmt("(z+1)/(z-1) -> H and (z-1)/(z+1) -> (1,-1;1,1)/sqrt2: max error %.3g", worst));
}

void bloch() {
  Rng rng(3);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const QuditState psi = rng.state(2);
    const SpherePoint p = to_sphere(state_to_constellation(psi).roots()[0]);
    worst = std::max(worst, distance(p, bloch_vector(psi)));
  }
  report(3, worst <= 1e-10, fmt("Bloch equivalence over 1000 qubits: worst %.3g", worst));
}

void equivariance() {
  Rng rng(4);
  double worst = 0.0;
  const auto start = Clock::now();
  for (std::size_t d = 2; d <= 8; ++d) {
    for (int t = 0; t < 200; ++t) {
      const MoebiusMap m = rng.su2();
      const QuditState psi = rng.state(d);
      const Constellation lifted = state_to_constellation(lift_to_unitary(m, d).apply(psi));
      const Constellation moved = transform_constellation(m, state_to_constellation(psi));
      worst = std::max(worst, constellation_deviation(lifted, moved));
    }
  }
  const double ms = ms_since(start);
  report(4, worst <= 1e-8 && ms < 10000.0,
         fmt("equivariance d=2..8 x 200: worst chordal %.3g, %.1f ms", worst, ms));
}

void round_trip() {
  Rng rng(5);
  double worst_fid = 0.0;
  double worst_scale = 0.0;
  for (std::size_t d = 2; d <= 10; ++d) {
    for (int t = 0; t < 1000; ++t) {
      const QuditState psi = rng.state(d);
      const Constellation c = state_to_constellation(psi);
      worst_fid = std::max(worst_fid, 1.0 - projective_fidelity(constellation_to_state(c), psi));
      Complex lambda = rng.c();
      std::vector<Complex> scaled(psi.amplitudes().begin(), psi.amplitudes().end());
      for (auto& a : scaled) a *= lambda;
      worst_scale = std::max(worst_scale, constellation_deviation(state_to_constellation(QuditState(scaled)), c));
    }
  }
  report(5, worst_fid <= 1e-10 && worst_scale <= 1e-9,
         fmt("round trip d=2..10 x 1000: worst fidelity loss %.3g, scale deviation %.3g", worst_fid, worst_scale));
}

// Plain power-basis expansion, kept independent of the library's expander.
std::vector<Complex> from_roots(const std::vector<Complex>& roots, Complex lead) {
  std::vector<Complex> c{lead};
  for (const Complex& r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return c;
}

void oracle_agreement() {
  Rng rng(6);
  int bad = 0;
  int leading = 0;
  int doubled = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t degree = 1 + rng.eng() % 12;
    std::vector<Complex> c;
    double tol = 1e-8;
    switch (t % 3) {
      case 0:
        for (std::size_t k = 0; k <= degree; ++k) c.push_back(rng.c());
        break;
      case 1: {
        // 1-3 vanishing leading coefficients
        const std::size_t zeros = std::min<std::size_t>(1 + rng.eng() % 3, degree);
        for (std::size_t k = 0; k <= degree; ++k) c.push_back(k + zeros > degree ? Complex(0.0) : rng.c());
        ++leading;
        break;
      }
      default: {
        std::vector<Complex> roots;
        while (roots.size() < degree) {
          const Complex r = rng.c();
          roots.push_back(r);
          if (roots.size() < degree) roots.push_back(r);
        }
        c = from_roots(roots, rng.c());
        tol = 1e-6;
        ++doubled;
        break;
      }
    }
    const MajoranaPolynomial p(c);
    if (!constellation_match(find_roots(p), verify::oracle_roots(p), tol)) ++bad;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "500 polynomials (%d with leading zeros, %d with doubled roots): %d mismatches",
                leading, doubled, bad);
  report(6, bad == 0, buf);
}

void geometry() {
  Rng rng(7);
  double round = 0.0;
  double chordal = 0.0;
  double antipodal = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const ExtendedComplex z = rng.point();
    const ExtendedComplex w = rng.point();
    round = std::max(round, chordal_distance(to_plane(to_sphere(z)), z));
    chordal = std::max(chordal, std::abs(chordal_distance(z, w) - distance(to_sphere(z), to_sphere(w))));
    const QuditState psi = rng.state(2);
    const QuditState perp({-std::conj(psi[1]), std::conj(psi[0])});
    const SpherePoint p = to_sphere(state_to_constellation(psi).roots()[0]);
    const SpherePoint q = to_sphere(state_to_constellation(perp).roots()[0]);
    antipodal = std::max(antipodal, distance(p, -q));
  }
  report(7, round <= 1e-12 && chordal <= 1e-12 && antipodal <= 1e-10,
         fmt("geometry x 1000: round trip %.3g, chordal vs euclidean %.3g, antipodality %.3g", round, chordal,
             antipodal));
}

void group_structure() {
  Rng rng(8);
  double hom = 0.0;
  for (std::size_t d = 2; d <= 6; ++d) {
    for (int t = 0; t < 100; ++t) {
      const MoebiusMap m1 = rng.su2();
      const MoebiusMap m2 = rng.su2();
      hom = std::max(hom, phase_aligned(lift_to_unitary(compose(m1, m2), d).matrix(),
                                        lift_to_unitary(m1, d).matrix() * lift_to_unitary(m2, d).matrix()));
    }
  }
  double cover = 0.0;
  for (int t = 0; t < 100; ++t) {
    const MoebiusMap m1 = rng.su2();
    const MoebiusMap m2 = rng.su2();
    const MoebiusMap neg = MoebiusMap::make(-m1.a(), -m1.b(), -m1.c(), -m1.d());
    cover = std::max(cover, (to_rotation(m1).matrix() - to_rotation(neg).matrix()).norm());
    cover = std::max(cover, (to_rotation(compose(m1, m2)).matrix() -
                             to_rotation(m1).matrix() * to_rotation(m2).matrix()).norm());
    cover = std::max(cover, phase_aligned(lift_to_unitary(m1, 2).matrix(), matrix_of(m1)));
  }
  report(8, hom <= 1e-9 && cover <= 1e-10,
         fmt("lift homomorphism d=2..6 x 100: %.3g; rotation double cover: %.3g", hom, cover));
}

struct Valid {
  const char* source;
  const char* canonical;
};

struct Invalid {
  const char* source;
  ErrorCode code;
  std::size_t line;
  std::size_t column;
};

void parser_corpus() {
  const Valid valid[] = {
      {"not", "not"},
      {"NOT", "not"},
      {"h", "hadamard"},
      {"Hadamard;", "hadamard"},
      {"not; rz(pi/2)", "not; rotz(1.5707963267948966)"},
      {"rx(0.5)", "rotx(0.5)"},
      {"ROTY(-1e-3)", "roty(-0.001)"},
      {"rz(-pi)", "rotz(-3.1415926535897931)"},
      {"rz(pi/4)", "rotz(0.78539816339744828)"},
      {"ry(-pi/4)", "roty(-0.78539816339744828)"},
      {"rx(-pi/2)", "rotx(-1.5707963267948966)"},
      {"rx(PI)", "rotx(3.1415926535897931)"},
      {"su2(1,0,0,0)", "su2(1, 0, 0, 0)"},
      {"su2(0.6, 0, 0, 0.8)", "su2(0.59999999999999998, 0, 0, 0.80000000000000004)"},
      {"raw(1,0, 1,0, 1,0, -1,0)", "raw(1, 0, 1, 0, 1, 0, -1, 0)"},
      {"raw(2,0,0,0,0,0,1,0)", "raw(2, 0, 0, 0, 0, 0, 1, 0)"},
      {"  not ;\n h ; ", "not; hadamard"},
      {"rz(+2.5)", "rotz(2.5)"},
      {"rz(.5)", "rotz(0.5)"},
      {"rz(5.)", "rotz(5)"},
      {"rz(1E2)", "rotz(100)"},
      {"not;not;not", "not; not; not"},
      {"su2(\n1,\n2,\n3,\n4\n)", "su2(1, 2, 3, 4)"},
      {"rotx(1);roty(2);rotz(3)", "rotx(1); roty(2); rotz(3)"},
  };
  const Invalid invalid[] = {
      {"not(", ErrorCode::SyntaxError, 1, 4},
      {"rz(pi/3)", ErrorCode::SyntaxError, 1, 7},
      {"rz(+pi)", ErrorCode::SyntaxError, 1, 5},
      {"foo", ErrorCode::SyntaxError, 1, 1},
      {"not; rz(1, 2)", ErrorCode::ArityError, 1, 6},
      {"raw(1,0,1,0)", ErrorCode::ArityError, 1, 1},
      {"h h", ErrorCode::SyntaxError, 1, 3},
      {"rx 1", ErrorCode::SyntaxError, 1, 4},
      {"not;\n  rz(#)", ErrorCode::SyntaxError, 2, 6},
      {";", ErrorCode::SyntaxError, 1, 1},
      {"su2(1,2,3,)", ErrorCode::SyntaxError, 1, 11},
      {"rz(1e999)", ErrorCode::SyntaxError, 1, 4},
      {"not;;", ErrorCode::SyntaxError, 1, 5},
      {"rz(1)\nnot", ErrorCode::SyntaxError, 2, 1},
      {"rz()", ErrorCode::ArityError, 1, 1},
      {"su2(1,2,3,4,5)", ErrorCode::ArityError, 1, 1},
  };
  int bad = 0;
  for (const auto& v : valid) {
    try {
      const std::string got = script::render(script::parse(v.source));
      if (got != v.canonical) {
        std::printf("  valid program '%s' rendered as '%s'\n", v.source, got.c_str());
        ++bad;
      }
    } catch (const Error& e) {
      std::printf("  valid program '%s' rejected: %s\n", v.source, e.what());
      ++bad;
    }
  }
  for (const auto& v : invalid) {
    try {
      script::parse(v.source);
      std::printf("  invalid program '%s' accepted\n", v.source);
      ++bad;
    } catch (const ScriptError& e) {
      if (e.code() != v.code || e.pos().line != v.line || e.pos().column != v.column) {
        std::printf("  invalid program '%s': got %s at %zu:%zu\n", v.source, to_string(e.code()).data(),
                    e.pos().line, e.pos().column);
        ++bad;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "parser corpus: %zu valid, %zu invalid, %d mismatches", std::size(valid),
                std::size(invalid), bad);
  report(9, bad == 0, buf);
}

void performance() {
  Rng rng(10);
  const QuditState psi = rng.state(101);
  auto start = Clock::now();
  const Constellation c = state_to_constellation(psi);
  const double find_ms = ms_since(start);
  const MoebiusMap m = rng.su2();
  start = Clock::now();
  const Constellation moved = transform_constellation(m, c);
  const double move_ms = ms_since(start);
  report(10, find_ms < 1000.0 && move_ms < 1.0 && moved.roots().size() == 100,
         fmt("d=101: state_to_constellation %.3f ms, transform_constellation %.4f ms", find_ms, move_ms));
}

void determinism() {
  verify::SuiteConfig cfg;  // dims 2..8, 200 trials, seed 1
  const auto start = Clock::now();
  const verify::SuiteReport first = verify::run_suite(cfg);
  const std::string a = io::dump(verify::to_json(first));
  const std::string b = io::dump(verify::to_json(verify::run_suite(cfg)));
  const double ms = ms_since(start);
  char buf[200];
  std::snprintf(buf, sizeof buf, "suite dims 2..8, 200 trials, seed 1: %zu properties, %zu failures, %s, %.0f ms",
                first.properties.size(), first.failures(), a == b ? "byte-identical" : "reports differ", ms);
  report(11, a == b && first.failures() == 0, buf);
}

}  // namespace

int main() {
  const std::function<void()> criteria[] = {qutrit_not, hadamard,        bloch,         equivariance,
                                            round_trip, oracle_agreement, geometry,     group_structure,
                                            parser_corpus, performance,  determinism};
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
