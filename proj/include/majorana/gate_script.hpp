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

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "majorana/error.hpp"
#include "majorana/moebius.hpp"

namespace majorana::script {

// Grammar (keywords case-insensitive, whitespace ignored, angles in radians):
//
//   program := term (';' term)* [';']
//   term    := 'not' | 'hadamard' | 'h'
//            | ('rotx'|'roty'|'rotz'|'rx'|'ry'|'rz') '(' number ')'
//            | 'su2' '(' number ',' number ',' number ',' number ')'
//            | 'raw' '(' number (',' number)* ')'        exactly 8 numbers
//   number  := ['+'|'-'] decimal | ['-'] 'pi' ['/' ('2'|'4')]

enum class TermKind { Not, Hadamard, RotX, RotY, RotZ, Su2, Raw };

struct GateTerm {
  TermKind kind = TermKind::Not;
  std::vector<double> params;
  SourcePos pos;  // where the gate name starts; not part of equality

  friend bool operator==(const GateTerm& a, const GateTerm& b) {
    return a.kind == b.kind && a.params == b.params;
  }
};

struct GateProgram {
  std::vector<GateTerm> terms;

  friend bool operator==(const GateProgram&, const GateProgram&) = default;
};

inline std::size_t arity(TermKind kind) {
  switch (kind) {
    case TermKind::Not:
    case TermKind::Hadamard: return 0;
    case TermKind::RotX:
    case TermKind::RotY:
    case TermKind::RotZ: return 1;
    case TermKind::Su2: return 4;
    case TermKind::Raw: return 8;
  }
  return 0;
}

inline std::string_view keyword(TermKind kind) {
  switch (kind) {
    case TermKind::Not: return "not";
    case TermKind::Hadamard: return "hadamard";
    case TermKind::RotX: return "rotx";
    case TermKind::RotY: return "roty";
    case TermKind::RotZ: return "rotz";
    case TermKind::Su2: return "su2";
    case TermKind::Raw: return "raw";
  }
  return "?";
}

namespace detail {

enum class TokenType { Ident, Number, LParen, RParen, Comma, Semicolon, Plus, Minus, Slash, End };

struct Token {
  TokenType type = TokenType::End;
  std::string text;
  SourcePos pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> tokenize() {
    std::vector<Token> tokens;
    for (;;) {
      skip_space();
      if (at_ >= src_.size()) break;
      const SourcePos start = here();
      const char ch = src_[at_];
      if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        std::size_t end = at_;
        while (end < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
          ++end;
        }
        tokens.push_back({TokenType::Ident, std::string(src_.substr(at_, end - at_)), start});
        advance(end - at_);
      } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
        const std::size_t len = number_length();
        if (len == 0) {
          throw ScriptError(ErrorCode::SyntaxError, start, std::string(1, ch),
                            "unexpected character '" + std::string(1, ch) + "'");
        }
        tokens.push_back({TokenType::Number, std::string(src_.substr(at_, len)), start});
        advance(len);
      } else {
        TokenType type;
        switch (ch) {
          case '(': type = TokenType::LParen; break;
          case ')': type = TokenType::RParen; break;
          case ',': type = TokenType::Comma; break;
          case ';': type = TokenType::Semicolon; break;
          case '+': type = TokenType::Plus; break;
          case '-': type = TokenType::Minus; break;
          case '/': type = TokenType::Slash; break;
          default:
            throw ScriptError(ErrorCode::SyntaxError, start, std::string(1, ch),
                              "unexpected character '" + std::string(1, ch) + "'");
        }
        tokens.push_back({type, std::string(1, ch), start});
        advance(1);
      }
    }
    tokens.push_back({TokenType::End, "<end of input>", end_pos()});
    return tokens;
  }

 private:
  SourcePos here() const { return {at_, line_, column_}; }

  void advance(std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (src_[at_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++at_;
    }
  }

  void skip_space() {
    while (at_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[at_]))) advance(1);
  }

  // digits [. digits] [(e|E) [+-] digits], or . digits ...
  std::size_t number_length() const {
    std::size_t i = at_;
    std::size_t digits = 0;
    auto is_digit = [&](std::size_t k) {
      return k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]));
    };
    while (is_digit(i)) ++i, ++digits;
    if (i < src_.size() && src_[i] == '.') {
      ++i;
      while (is_digit(i)) ++i, ++digits;
    }
    if (digits == 0) return 0;
    if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
      std::size_t j = i + 1;
      if (j < src_.size() && (src_[j] == '+' || src_[j] == '-')) ++j;
      if (is_digit(j)) {
        while (is_digit(j)) ++j;
        i = j;
      }
    }
    return i - at_;
  }

  // End-of-input diagnostics point at the last non-blank character so the
  // reported offset stays inside the source.
  SourcePos end_pos() const {
    std::size_t last = src_.size();
    while (last > 0 && std::isspace(static_cast<unsigned char>(src_[last - 1]))) --last;
    const std::size_t target = last == 0 ? 0 : last - 1;
    SourcePos pos;
    for (std::size_t i = 0; i < target; ++i) {
      if (src_[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
    pos.offset = target;
    return pos;
  }

  std::string_view src_;
  std::size_t at_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  GateProgram program() {
    GateProgram prog;
    if (peek().type == TokenType::End) fail(peek(), "empty program");
    prog.terms.push_back(term());
    while (peek().type == TokenType::Semicolon) {
      next();
      if (peek().type == TokenType::End) break;
      prog.terms.push_back(term());
    }
    if (peek().type != TokenType::End) fail(peek(), "expected ';' or end of input");
    return prog;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  const Token& next() { return tokens_[at_++]; }

  [[noreturn]] static void fail(const Token& tok, const std::string& what) {
    throw ScriptError(ErrorCode::SyntaxError, tok.pos, tok.text,
                      what + ", found '" + tok.text + "'");
  }

  const Token& expect(TokenType type, const char* what) {
    if (peek().type != type) fail(peek(), std::string("expected ") + what);
    return next();
  }

  static bool lookup(const std::string& name, TermKind& kind) {
    struct Entry {
      std::string_view name;
      TermKind kind;
    };
    static constexpr Entry table[] = {
        {"not", TermKind::Not},   {"hadamard", TermKind::Hadamard}, {"h", TermKind::Hadamard},
        {"rotx", TermKind::RotX}, {"rx", TermKind::RotX},           {"roty", TermKind::RotY},
        {"ry", TermKind::RotY},   {"rotz", TermKind::RotZ},         {"rz", TermKind::RotZ},
        {"su2", TermKind::Su2},   {"raw", TermKind::Raw},
    };
    for (const auto& e : table) {
      if (e.name == name) {
        kind = e.kind;
        return true;
      }
    }
    return false;
  }

  GateTerm term() {
    const Token& name = peek();
    if (name.type != TokenType::Ident) fail(name, "expected a gate name");
    GateTerm t;
    if (!lookup(lower(name.text), t.kind)) fail(name, "unknown gate '" + name.text + "'");
    t.pos = name.pos;
    next();
    const std::size_t want = arity(t.kind);
    if (want == 0) return t;

    expect(TokenType::LParen, "'('");
    if (peek().type != TokenType::RParen) {
      t.params.push_back(number());
      while (peek().type == TokenType::Comma) {
        next();
        t.params.push_back(number());
      }
    }
    expect(TokenType::RParen, "',' or ')'");
    if (t.params.size() != want) {
      throw ScriptError(ErrorCode::ArityError, name.pos, name.text,
                        std::string(keyword(t.kind)) + " takes " + std::to_string(want) +
                            " argument(s), got " + std::to_string(t.params.size()));
    }
    return t;
  }

  double number() {
    double sign = 1.0;
    bool explicit_plus = false;
    if (peek().type == TokenType::Minus) {
      sign = -1.0;
      next();
    } else if (peek().type == TokenType::Plus) {
      explicit_plus = true;
      next();
    }
    const Token& tok = peek();
    if (tok.type == TokenType::Number) {
      next();
      double value = 0.0;
      const auto* first = tok.text.data();
      const auto* last = first + tok.text.size();
      const auto res = std::from_chars(first, last, value);
      if (res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) {
        fail(tok, "number out of range");
      }
      return sign * value;
    }
    if (tok.type == TokenType::Ident && lower(tok.text) == "pi") {
      if (explicit_plus) fail(tok, "'pi' literals take no '+' sign");
      next();
      double value = std::numbers::pi;
      if (peek().type == TokenType::Slash) {
        next();
        const Token& den = peek();
        if (den.type != TokenType::Number || (den.text != "2" && den.text != "4")) {
          fail(den, "expected 2 or 4 after 'pi/'");
        }
        value /= den.text == "2" ? 2.0 : 4.0;
        next();
      }
      return sign * value;
    }
    fail(tok, "expected a number");
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline GateProgram parse(std::string_view source) {
  detail::Parser parser(detail::Lexer(source).tokenize());
  return parser.program();
}

inline std::string render(const GateTerm& term) {
  std::string out(keyword(term.kind));
  if (term.params.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < term.params.size(); ++i) {
    if (i) out += ", ";
    out += detail::format_number(term.params[i]);
  }
  out += ')';
  return out;
}

/// Canonical text; parse(render(p)) == p.
inline std::string render(const GateProgram& program) {
  std::string out;
  for (std::size_t i = 0; i < program.terms.size(); ++i) {
    if (i) out += "; ";
    out += render(program.terms[i]);
  }
  return out;
}

inline MoebiusMap term_map(const GateTerm& term) {
  const auto& p = term.params;
  switch (term.kind) {
    case TermKind::Not: return standard_gate(StandardGate::Not);
    case TermKind::Hadamard: return standard_gate(StandardGate::Hadamard);
    case TermKind::RotX: return standard_gate(StandardGate::RotX, p.at(0));
    case TermKind::RotY: return standard_gate(StandardGate::RotY, p.at(0));
    case TermKind::RotZ: return standard_gate(StandardGate::RotZ, p.at(0));
    case TermKind::Su2: return from_su2(Complex(p.at(0), p.at(1)), Complex(p.at(2), p.at(3)));
    case TermKind::Raw:
      return MoebiusMap::make(Complex(p.at(0), p.at(1)), Complex(p.at(2), p.at(3)),
                              Complex(p.at(4), p.at(5)), Complex(p.at(6), p.at(7)));
  }
  throw Error(ErrorCode::UnknownGate, "unknown term kind");
}

/// Program order is application order: the first term acts first, so the
/// result is term_n o ... o term_1.
inline MoebiusMap compile(const GateProgram& program, bool allow_nonunitary = false) {
  MoebiusMap result = MoebiusMap::identity();
  for (std::size_t i = 0; i < program.terms.size(); ++i) {
    const GateTerm& term = program.terms[i];
    const std::string where = "term " + std::to_string(i + 1) + " '" + render(term) +
                              "' (line " + std::to_string(term.pos.line) + ", column " +
                              std::to_string(term.pos.column) + ")";
    MoebiusMap map;
    try {
      map = term_map(term);
    } catch (const Error& e) {
      throw Error(e.code(), where + ": " + e.what());
    }
    if (!allow_nonunitary && !is_special_unitary(map)) {
      throw Error(ErrorCode::NonUnitaryGate, where + " is not special-unitary");
    }
    result = compose(map, result);
  }
  return result;
}

inline MoebiusMap compile(std::string_view source, bool allow_nonunitary = false) {
  return compile(parse(source), allow_nonunitary);
}

}  // namespace majorana::script
