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

#include "majorana/gate_script.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

using namespace majorana;
using namespace majorana::script;

namespace {

ScriptError parse_error(std::string_view src) {
  try {
    parse(src);
  } catch (const ScriptError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for '" << src << "'";
  return ScriptError(ErrorCode::SyntaxError, {}, "", "");
}

}  // namespace

TEST(parse, two_terms) {
  const GateProgram p = parse("not; rz(pi/2)");
  ASSERT_EQ(p.terms.size(), 2u);
  EXPECT_EQ(p.terms[0].kind, TermKind::Not);
  EXPECT_EQ(p.terms[1].kind, TermKind::RotZ);
  EXPECT_EQ(p.terms[1].params, std::vector<double>{std::numbers::pi / 2});
  EXPECT_EQ(p.terms[1].pos.column, 6u);
}

TEST(parse, raw_term_is_cayley_map) {
  const GateProgram p = parse("raw(1,0, 1,0, 1,0, -1,0)");
  ASSERT_EQ(p.terms.size(), 1u);
  EXPECT_EQ(p.terms[0].kind, TermKind::Raw);
  EXPECT_EQ(p.terms[0].params, (std::vector<double>{1, 0, 1, 0, 1, 0, -1, 0}));
  const MoebiusMap m = compile(p);
  EXPECT_TRUE(projectively_equal(m, MoebiusMap::make(1.0, 1.0, 1.0, -1.0)));
}

TEST(parse, unbalanced_paren) {
  const ScriptError e = parse_error("not(");
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.pos().line, 1u);
  EXPECT_EQ(e.pos().column, 4u);
}

TEST(parse, keywords_are_case_insensitive) {
  EXPECT_EQ(parse("NOT; Hadamard; RX(1); rOtY(2)"), parse("not; h; rotx(1); ry(2)"));
}

TEST(parse, pi_literals) {
  const double pi = std::numbers::pi;
  const GateProgram p = parse("rz(pi); rz(-pi); rz(pi/2); rz(-pi/2); rz(pi/4); rz(-pi/4)");
  const double expected[] = {pi, -pi, pi / 2, -pi / 2, pi / 4, -pi / 4};
  ASSERT_EQ(p.terms.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(p.terms[i].params[0], expected[i]);
  EXPECT_EQ(parse_error("rz(pi/3)").pos().column, 7u);
  EXPECT_EQ(parse_error("rz(+pi)").pos().column, 5u);
}

TEST(parse, numbers) {
  const GateProgram p = parse("su2(1.5e-1, -2, +.5, 3.)");
  EXPECT_EQ(p.terms[0].params, (std::vector<double>{0.15, -2.0, 0.5, 3.0}));
}

TEST(parse, trailing_semicolon_and_whitespace) {
  EXPECT_EQ(parse("  not ;\n\th ;  ").terms.size(), 2u);
}

TEST(parse, multiline_positions) {
  const ScriptError e = parse_error("not;\nh;\n  bogus");
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.pos().line, 3u);
  EXPECT_EQ(e.pos().column, 3u);
  EXPECT_EQ(e.pos().offset, 10u);
  EXPECT_EQ(e.token(), "bogus");
}

TEST(parse, arity_errors_point_at_gate_name) {
  const ScriptError e = parse_error("not; rz(1, 2)");
  EXPECT_EQ(e.code(), ErrorCode::ArityError);
  EXPECT_EQ(e.pos().column, 6u);
  EXPECT_EQ(e.token(), "rz");
  EXPECT_EQ(parse_error("raw(1,2,3)").code(), ErrorCode::ArityError);
  EXPECT_EQ(parse_error("su2()").code(), ErrorCode::ArityError);
}

TEST(parse, empty_program_is_rejected) {
  EXPECT_EQ(parse_error("").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("   ").code(), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(";").pos().column, 1u);
}

TEST(parse, error_offsets_lie_inside_source) {
  const char* bad[] = {"not(", "rz(", "rz(1", "h h", "rz(1,", "su2(1,2,3,)", ";;", "not;;",
                       "rz(pi/)", "rz(1e999)", "rz(@)", "x", "rz 1"};
  for (const char* src : bad) {
    const ScriptError e = parse_error(src);
    EXPECT_LT(e.pos().offset, std::string_view(src).size()) << src;
  }
}

TEST(compile, examples) {
  EXPECT_TRUE(projectively_equal(compile("not; not"), MoebiusMap::identity()));
  EXPECT_TRUE(projectively_equal(compile("h; h"), MoebiusMap::identity()));
  try {
    compile("raw(2,0, 0,0, 0,0, 1,0)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUnitaryGate);
    EXPECT_NE(std::string(e.what()).find("term 1"), std::string::npos);
  }
  EXPECT_NO_THROW(compile("raw(2,0, 0,0, 0,0, 1,0)", true));
}

TEST(compile, singular_raw_term) {
  try {
    compile("raw(1,0, 1,0, 1,0, 1,0)", true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularMatrix);
  }
}

TEST(compile, program_order_is_application_order) {
  // rz(pi/2) sends 1 to -i, then 1/z sends -i to i.
  const MoebiusMap m = compile("rz(pi/2); not");
  EXPECT_LT(chordal_distance(m(Complex(1.0)), Complex(0.0, 1.0)), 1e-15);
  // dilation by 2 first, then inversion
  const MoebiusMap dil = compile("raw(2,0, 0,0, 0,0, 1,0); not", true);
  EXPECT_LT(chordal_distance(dil(Complex(1.0)), Complex(0.5)), 1e-15);
}

TEST(compile, sequence_is_composition) {
  const char* names[] = {"not", "h", "rx(0.3)", "ry(-1.2)", "rz(2.5)", "su2(0.1, 0.7, -0.4, 0.2)"};
  for (const char* a : names) {
    for (const char* b : names) {
      const std::string joined = std::string(a) + "; " + b;
      EXPECT_TRUE(projectively_equal(compile(joined), compose(compile(b), compile(a)))) << joined;
    }
  }
}

TEST(render, round_trip) {
  std::mt19937_64 eng(12);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    GateProgram p;
    const std::size_t len = 1 + eng() % 5;
    for (std::size_t i = 0; i < len; ++i) {
      GateTerm term;
      term.kind = static_cast<TermKind>(eng() % 7);
      for (std::size_t k = 0; k < arity(term.kind); ++k) term.params.push_back(1e3 * g(eng) * g(eng));
      p.terms.push_back(term);
    }
    EXPECT_EQ(parse(render(p)), p) << render(p);
  }
}

TEST(render, canonical_text) {
  EXPECT_EQ(render(parse("H ;RX( 0.5 );NOT")), "hadamard; rotx(0.5); not");
}
