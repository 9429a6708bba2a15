// Copyright 2026 The Hyperslice Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hyperslice/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

namespace hyperslice {

bool operator==(const Expr& a, const Expr& b) {
  return a.kind == b.kind && a.variable == b.variable && a.literal == b.literal &&
         a.exponent == b.exponent && a.children == b.children;
}

namespace {

enum class Tok { Var, Number, Unit, Inv, Conj, LParen, RParen, Plus, Minus, Star, Caret, End };

struct Token {
  Token(Tok k, std::size_t off) : kind(k), offset(off) {}

  Tok kind;
  std::size_t offset;
  int var = 0;
  double number = 0.0;
  Quat unit;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::End, start};
    const char c = src_[pos_];
    switch (c) {
      case '(': ++pos_; return {Tok::LParen, start};
      case ')': ++pos_; return {Tok::RParen, start};
      case '+': ++pos_; return {Tok::Plus, start};
      case '-': ++pos_; return {Tok::Minus, start};
      case '*': ++pos_; return {Tok::Star, start};
      case '^': ++pos_; return {Tok::Caret, start};
      default: break;
    }
    if (src_.substr(pos_).starts_with("inv(")) {
      pos_ += 3;
      return {Tok::Inv, start};
    }
    if (src_.substr(pos_).starts_with("conj(")) {
      pos_ += 4;
      return {Tok::Conj, start};
    }
    if (c == 'q') {
      ++pos_;
      const std::size_t digits = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == digits) throw SyntaxError("expected variable index after 'q'", digits);
      Token t{Tok::Var, start};
      const auto [ptr, ec] = std::from_chars(src_.data() + digits, src_.data() + pos_, t.var);
      if (ec != std::errc()) throw SyntaxError("variable index out of range", digits);
      return t;
    }
    if (c == 'i' || c == 'j' || c == 'k') {
      ++pos_;
      Token t{Tok::Unit, start};
      t.unit = c == 'i' ? Quat::unit_i() : c == 'j' ? Quat::unit_j() : Quat::unit_k();
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number(start);
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  Token number(std::size_t start) {
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return pos_ - from;
    };
    std::size_t mantissa = digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) throw SyntaxError("malformed number", start);
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (digits() == 0) pos_ = save;  // not an exponent after all
    }
    Token t{Tok::Number, start};
    const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, t.number);
    if (ec != std::errc() || ptr != src_.data() + pos_) throw SyntaxError("malformed number", start);
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view src, int arity) : lex_(src), arity_(arity) { advance(); }

  Expr parse_all() {
    if (cur_.kind == Tok::End) throw SyntaxError("empty expression", cur_.offset);
    Expr e = expr();
    if (cur_.kind != Tok::End) throw SyntaxError("unexpected trailing input", cur_.offset);
    return e;
  }

 private:
  void advance() { cur_ = lex_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) throw SyntaxError(std::string("expected ") + what, cur_.offset);
    advance();
  }

  static Expr binary(Expr::Kind kind, Expr l, Expr r, std::size_t offset) {
    Expr e;
    e.kind = kind;
    e.offset = offset;
    e.children.push_back(std::move(l));
    e.children.push_back(std::move(r));
    return e;
  }

  static Expr unary(Expr::Kind kind, Expr child, std::size_t offset) {
    Expr e;
    e.kind = kind;
    e.offset = offset;
    e.children.push_back(std::move(child));
    return e;
  }

  bool starts_atom() const {
    switch (cur_.kind) {
      case Tok::Var: case Tok::Number: case Tok::Unit: case Tok::Inv: case Tok::Conj:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Expr expr() {
    Expr lhs = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      const auto kind = cur_.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Subtract;
      const std::size_t at = cur_.offset;
      advance();
      lhs = binary(kind, std::move(lhs), term(), at);
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      const std::size_t at = cur_.offset;
      if (cur_.kind == Tok::Star) {
        advance();
      } else if (!starts_atom()) {
        break;
      }
      lhs = binary(Expr::Kind::Multiply, std::move(lhs), factor(), at);
    }
    return lhs;
  }

  Expr factor() {
    Expr base = atom();
    if (cur_.kind != Tok::Caret) return base;
    const std::size_t at = cur_.offset;
    advance();
    bool negative = false;
    if (cur_.kind == Tok::Minus) {
      negative = true;
      advance();
    }
    if (cur_.kind != Tok::Number || cur_.number != std::floor(cur_.number) ||
        std::abs(cur_.number) > 1e6) {
      throw SyntaxError("expected integer exponent", cur_.offset);
    }
    Expr e = unary(Expr::Kind::Power, std::move(base), at);
    e.exponent = static_cast<int>(negative ? -cur_.number : cur_.number);
    advance();
    return e;
  }

  Expr atom() {
    const Token t = cur_;
    switch (t.kind) {
      case Tok::Var: {
        if (t.var < 1 || (arity_ > 0 && t.var > arity_)) {
          throw ArityError("variable q" + std::to_string(t.var) + " outside q1..q" +
                           std::to_string(arity_));
        }
        advance();
        Expr e;
        e.kind = Expr::Kind::Variable;
        e.variable = t.var;
        e.offset = t.offset;
        return e;
      }
      case Tok::Number:
      case Tok::Unit: {
        advance();
        Expr e;
        e.kind = Expr::Kind::Literal;
        e.literal = t.kind == Tok::Number ? Quat(t.number) : t.unit;
        e.offset = t.offset;
        return e;
      }
      case Tok::Inv:
      case Tok::Conj: {
        advance();
        expect(Tok::LParen, "'('");
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return unary(t.kind == Tok::Inv ? Expr::Kind::Inverse : Expr::Kind::Conjugate,
                     std::move(inner), t.offset);
      }
      case Tok::LParen: {
        advance();
        Expr inner = expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::Minus:
        advance();
        return unary(Expr::Kind::Negate, atom(), t.offset);
      default:
        throw SyntaxError("expected an operand", t.offset);
    }
  }

  Lexer lex_;
  int arity_;
  Token cur_{Tok::End, 0};
};

std::string format_real(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

// Binding levels: 1 sum, 2 product, 3 power, 4 atom.
std::string print(const Expr& e, int required) {
  auto wrap = [required](int level, std::string s) {
    return level < required ? "(" + s + ")" : s;
  };
  switch (e.kind) {
    case Expr::Kind::Variable:
      return "q" + std::to_string(e.variable);
    case Expr::Kind::Literal: {
      const Quat& q = e.literal;
      if (q == Quat::unit_i()) return "i";
      if (q == Quat::unit_j()) return "j";
      if (q == Quat::unit_k()) return "k";
      if (q.x == 0.0 && q.y == 0.0 && q.z == 0.0 && q.w >= 0.0 && !std::signbit(q.w)) {
        return format_real(q.w);
      }
      // Not produced by the parser; printed as an equivalent sum.
      return wrap(1, format_real(q.w) + " + " + format_real(q.x) + "*i + " + format_real(q.y) +
                         "*j + " + format_real(q.z) + "*k");
    }
    case Expr::Kind::Add:
      return wrap(1, print(e.children[0], 1) + " + " + print(e.children[1], 2));
    case Expr::Kind::Subtract:
      return wrap(1, print(e.children[0], 1) + " - " + print(e.children[1], 2));
    case Expr::Kind::Multiply:
      return wrap(2, print(e.children[0], 2) + "*" + print(e.children[1], 3));
    case Expr::Kind::Power:
      return wrap(3, print(e.children[0], 4) + "^" + std::to_string(e.exponent));
    case Expr::Kind::Negate:
      return "-" + print(e.children[0], 4);
    case Expr::Kind::Inverse:
      return "inv(" + print(e.children[0], 0) + ")";
    case Expr::Kind::Conjugate:
      return "conj(" + print(e.children[0], 0) + ")";
  }
  return {};
}

Quat checked_inverse(const Quat& q, std::size_t offset) {
  if (!(abs(q) >= 1e-300)) {
    throw ZeroDivision("division by zero in subexpression at offset " + std::to_string(offset));
  }
  return qinv(q);
}

}  // namespace

Expr parse(std::string_view src, int arity) { return Parser(src, arity).parse_all(); }

std::string to_string(const Expr& e) { return print(e, 0); }

Quat evaluate(const Expr& e, const QVec& point) {
  switch (e.kind) {
    case Expr::Kind::Variable:
      if (e.variable < 1 || e.variable > point.size()) {
        throw ArityError("variable q" + std::to_string(e.variable) + " not supplied");
      }
      return point[e.variable - 1];
    case Expr::Kind::Literal:
      return e.literal;
    case Expr::Kind::Add:
      return evaluate(e.children[0], point) + evaluate(e.children[1], point);
    case Expr::Kind::Subtract:
      return evaluate(e.children[0], point) - evaluate(e.children[1], point);
    case Expr::Kind::Negate:
      return -evaluate(e.children[0], point);
    case Expr::Kind::Multiply: {
      const Quat l = evaluate(e.children[0], point);
      return l * evaluate(e.children[1], point);
    }
    case Expr::Kind::Power: {
      Quat base = evaluate(e.children[0], point);
      if (e.exponent < 0) base = checked_inverse(base, e.offset);
      Quat out(1.0);
      for (int i = 0; i < std::abs(e.exponent); ++i) out = out * base;
      return out;
    }
    case Expr::Kind::Inverse:
      return checked_inverse(evaluate(e.children[0], point), e.offset);
    case Expr::Kind::Conjugate:
      return conj(evaluate(e.children[0], point));
  }
  return {};
}

int max_variable(const Expr& e) {
  int m = e.kind == Expr::Kind::Variable ? e.variable : 0;
  for (const Expr& c : e.children) m = std::max(m, max_variable(c));
  return m;
}

QFunctionN expression_function(const Expr& e, int arity) {
  if (max_variable(e) > arity) throw ArityError("expression uses more variables than declared");
  return QFunctionN(arity, [e](const QVec& q) { return evaluate(e, q); });
}

}  // namespace hyperslice
