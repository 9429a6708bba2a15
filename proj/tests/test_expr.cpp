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

#include <gtest/gtest.h>

#include <functional>

#include "hyperslice/catalog.hpp"
#include "hyperslice/expr.hpp"
#include "hyperslice/random.hpp"
#include "support.hpp"

namespace hs = hyperslice;
using hs::Expr;
using hs::Quat;
using hs::QVec;

namespace {

const Quat I = Quat::unit_i(), J = Quat::unit_j(), K = Quat::unit_k();

QVec qvec(std::initializer_list<Quat> qs) {
  QVec v(static_cast<Eigen::Index>(qs.size()));
  Eigen::Index h = 0;
  for (const auto& q : qs) v[h++] = q;
  return v;
}

Quat eval(const std::string& src, const QVec& q) {
  return hs::evaluate(hs::parse(src, static_cast<int>(q.size())), q);
}

// A random expression as fully parenthesized text together with a direct
// evaluator written against the quaternion type.
struct Generated {
  std::string text;
  std::function<Quat(const QVec&)> eval;
};

Generated generate(hs::Rng& rng, int n, int depth) {
  const auto pick = [&](std::uint64_t k) { return rng.next() % k; };
  if (depth == 0 || pick(4) == 0) {
    switch (pick(3)) {
      case 0: {
        const int v = 1 + static_cast<int>(pick(static_cast<std::uint64_t>(n)));
        return {"q" + std::to_string(v), [v](const QVec& q) { return q[v - 1]; }};
      }
      case 1: {
        const Quat u = std::array<Quat, 3>{I, J, K}[pick(3)];
        const char* name = u == I ? "i" : u == J ? "j" : "k";
        return {name, [u](const QVec&) { return u; }};
      }
      default: {
        const double r = static_cast<double>(1 + pick(9)) / 4.0;
        return {std::to_string(r), [r](const QVec&) { return Quat(r); }};
      }
    }
  }
  Generated a = generate(rng, n, depth - 1);
  switch (pick(8)) {
    case 0: {
      Generated b = generate(rng, n, depth - 1);
      return {"(" + a.text + " + " + b.text + ")",
              [a, b](const QVec& q) { return a.eval(q) + b.eval(q); }};
    }
    case 1: {
      Generated b = generate(rng, n, depth - 1);
      return {"(" + a.text + " - " + b.text + ")",
              [a, b](const QVec& q) { return a.eval(q) - b.eval(q); }};
    }
    case 2: {
      Generated b = generate(rng, n, depth - 1);
      return {"(" + a.text + " * " + b.text + ")",
              [a, b](const QVec& q) { return a.eval(q) * b.eval(q); }};
    }
    case 3: {
      // Juxtaposition.
      Generated b = generate(rng, n, depth - 1);
      return {"(" + a.text + ")(" + b.text + ")",
              [a, b](const QVec& q) { return a.eval(q) * b.eval(q); }};
    }
    case 4: {
      const int p = static_cast<int>(pick(7)) - 3;
      return {"(" + a.text + ")^" + std::to_string(p), [a, p](const QVec& q) {
                Quat base = a.eval(q);
                if (p < 0) base = hs::qinv(base);
                Quat out(1.0);
                for (int k = 0; k < std::abs(p); ++k) out = out * base;
                return out;
              }};
    }
    case 5:
      return {"inv(" + a.text + ")", [a](const QVec& q) { return hs::qinv(a.eval(q)); }};
    case 6:
      return {"conj(" + a.text + ")", [a](const QVec& q) { return hs::conj(a.eval(q)); }};
    default:
      return {"-(" + a.text + ")", [a](const QVec& q) { return -a.eval(q); }};
  }
}

}  // namespace

TEST(Parse, Examples) {
  const Expr e = hs::parse("inv(q1)*q2", 2);
  ASSERT_EQ(e.kind, Expr::Kind::Multiply);
  EXPECT_EQ(e.children[0].kind, Expr::Kind::Inverse);
  EXPECT_EQ(e.children[1].kind, Expr::Kind::Variable);
  EXPECT_NE(hs::parse("q2*q1", 2), hs::parse("q1*q2", 2));
  EXPECT_EQ(hs::parse("q2*q1*q3", 3), hs::parse(hs::catalog_entry("q2_q1_q3").expression, 3));
  EXPECT_EQ(hs::parse("q1 q2", 2), hs::parse("q1*q2", 2));
  EXPECT_EQ(hs::parse("q1q2^2", 2), hs::parse("q1*(q2^2)", 2));
  EXPECT_EQ(hs::parse("2i", 1), hs::parse("2*i", 1));
  EXPECT_EQ(hs::parse("q1^-1", 1).exponent, -1);
  EXPECT_EQ(hs::parse("1.5e-3", 1).literal, Quat(1.5e-3));
}

TEST(Parse, Errors) {
  try {
    hs::parse("q1 + * q2", 2);
    FAIL() << "expected SyntaxError";
  } catch (const hs::SyntaxError& e) {
    EXPECT_EQ(e.offset(), 5u);
  }
  try {
    hs::parse("q1 + q3", 2);
    FAIL() << "expected ArityError";
  } catch (const hs::ArityError&) {
  }
  EXPECT_THROW(hs::parse("", 1), hs::SyntaxError);
  EXPECT_THROW(hs::parse("(q1", 1), hs::SyntaxError);
  EXPECT_THROW(hs::parse("q1)", 1), hs::SyntaxError);
  EXPECT_THROW(hs::parse("q", 1), hs::SyntaxError);
  EXPECT_THROW(hs::parse("q1^x", 1), hs::SyntaxError);
  EXPECT_THROW(hs::parse("q1 $ q1", 1), hs::SyntaxError);
  EXPECT_THROW(hs::parse("q0", 1), hs::ArityError);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(eval("q1*q2", qvec({I, J})), K);
  EXPECT_EQ(eval("q2*q1", qvec({I, J})), -K);
  EXPECT_EQ(eval("inv(q1)*q2", qvec({J, K})), -I);
  EXPECT_EQ(eval("q1^2 - 3", qvec({I})), Quat(-4.0));
  EXPECT_EQ(eval("conj(1 + 2i)", qvec({I})), Quat(1, -2, 0, 0));
  EXPECT_EQ(eval("-q1^2", qvec({I})), Quat(-1.0));
}

TEST(Evaluate, ZeroDivisionNamesOffset) {
  try {
    eval("q1 + inv(q2 - q2)", qvec({I, J}));
    FAIL() << "expected ZeroDivision";
  } catch (const hs::ZeroDivision& e) {
    EXPECT_NE(std::string(e.what()).find("offset 5"), std::string::npos) << e.what();
  }
  EXPECT_THROW(eval("(q1 - q1)^-2", qvec({I})), hs::ZeroDivision);
}

TEST(Evaluate, StrictProductOrder) {
  hs::Rng rng(1);
  const QVec q = rng.vector(3);
  EXPECT_EQ(eval("q1 q2 q3", q), (q[0] * q[1]) * q[2]);
  EXPECT_EQ(eval("q3*q2*q1", q), (q[2] * q[1]) * q[0]);
}

TEST(PrintParse, Idempotent) {
  hs::Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    const Generated g = generate(rng, 3, 4);
    const Expr e = hs::parse(g.text, 3);
    const std::string printed = hs::to_string(e);
    const Expr again = hs::parse(printed, 3);
    EXPECT_EQ(e, again) << g.text << "\nprinted: " << printed;
    EXPECT_EQ(hs::to_string(again), printed);
  }
}

TEST(Evaluate, AgreesWithDirectInterpreter) {
  hs::Rng rng(3);
  int compared = 0;
  for (int t = 0; t < 1000; ++t) {
    const Generated g = generate(rng, 3, 3);
    const QVec q = rng.vector_in_shell(3, 0.5, 1.5);
    Quat direct;
    try {
      direct = g.eval(q);
    } catch (const hs::ZeroDivision&) {
      EXPECT_THROW(eval(g.text, q), hs::ZeroDivision);
      continue;
    }
    const Quat parsed = eval(g.text, q);
    EXPECT_QUAT_NEAR(parsed, direct, 1e-12 * (1 + hs::abs(direct))) << g.text;
    ++compared;
  }
  EXPECT_GT(compared, 900);
}

TEST(ExpressionFunction, Arity) {
  EXPECT_THROW(hs::expression_function(hs::parse("q1*q3", 3), 2), hs::ArityError);
  EXPECT_EQ(hs::max_variable(hs::parse("q1*q3 + 2", 3)), 3);
  const auto f = hs::expression_function(hs::parse("q1*q2", 2), 2);
  EXPECT_EQ(f(qvec({I, J})), K);
}

TEST(Catalog, Lookup) {
  EXPECT_EQ(hs::catalog_entry("q2_q1").expected, hs::Regularity::RightRegular);
  EXPECT_THROW(hs::catalog_entry("nope"), hs::DomainError);
  // Literals print with round-trip precision, so the text reproduces the
  // affine map exactly.
  const hs::Affine f = hs::catalog_affine();
  const auto g = hs::catalog_entry("affine_c1").function();
  hs::Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const QVec q = rng.vector(2);
    EXPECT_QUAT_NEAR(g(q), f(q)[0], 1e-14);
  }
}
