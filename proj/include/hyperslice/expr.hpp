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

#pragma once

// Noncommutative expressions in q1..qn.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (factor | '*' factor)*
//   factor := atom ('^' int)?
//   atom   := 'q'digits | real | 'i' | 'j' | 'k' | 'inv(' expr ')'
//           | 'conj(' expr ')' | '(' expr ')' | '-' atom
//
// Juxtaposition and '*' are the same ordered product; '^' binds tighter than
// either, so "q1q2^2" is q1 (q2 q2).

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperslice/quaternion.hpp"
#include "hyperslice/stem.hpp"

namespace hyperslice {

struct Expr {
  enum class Kind { Variable, Literal, Add, Subtract, Negate, Multiply, Power, Inverse, Conjugate };

  Kind kind = Kind::Literal;
  int variable = 0;  // 1-based, Variable only
  Quat literal;      // Literal only
  int exponent = 0;  // Power only
  std::vector<Expr> children;
  std::size_t offset = 0;  // byte offset in the source; ignored by ==

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Parses `src` with variables q1..q`arity`. Throws SyntaxError (with byte
/// offset) or ArityError.
Expr parse(std::string_view src, int arity);

/// Canonical text that parses back to an equal tree.
std::string to_string(const Expr& e);

/// Strict left-to-right evaluation of products. Division by zero throws
/// ZeroDivision naming the offending subexpression offset.
Quat evaluate(const Expr& e, const QVec& point);

/// Largest variable index used.
int max_variable(const Expr& e);

QFunctionN expression_function(const Expr& e, int arity);

}  // namespace hyperslice
