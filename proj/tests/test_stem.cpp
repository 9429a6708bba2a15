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

#include <array>
#include <complex>

#include "hyperslice/catalog.hpp"
#include "hyperslice/regularity.hpp"
#include "hyperslice/stem.hpp"
#include "support.hpp"

namespace hs = hyperslice;
using hs::ComplexPoint;
using hs::MultivectorHQ;
using hs::Quat;
using hs::QVec;
using hs::Side;
using hs::Unit;

namespace {

ComplexPoint point(std::initializer_list<std::complex<double>> zs) {
  ComplexPoint z(static_cast<Eigen::Index>(zs.size()));
  Eigen::Index h = 0;
  for (auto w : zs) z[h++] = w;
  return z;
}

QVec qvec(std::initializer_list<Quat> qs) {
  QVec v(static_cast<Eigen::Index>(qs.size()));
  Eigen::Index h = 0;
  for (const auto& q : qs) v[h++] = q;
  return v;
}

}  // namespace

TEST(Induce, IdentityAndSquare) {
  EXPECT_QUAT_NEAR(hs::induce_left(hs::variable_stem(1, 1), qvec({Quat(1, 0, 2, 0)})),
                   Quat(1, 0, 2, 0), 1e-15);
  EXPECT_QUAT_NEAR(hs::induce_left(hs::power_stem(1, 1, 2), qvec({Quat::unit_i()})), Quat(-1.0),
                   1e-15);
  // Real points are ambiguous; the value must not depend on the chosen unit.
  EXPECT_QUAT_NEAR(hs::induce_left(hs::power_stem(1, 1, 3), qvec({Quat(2.0)})), Quat(8.0), 1e-14);
}

TEST(Induce, OrderedMonomials) {
  const std::array<int, 2> ones{1, 1};
  const QVec ij = qvec({Quat::unit_i(), Quat::unit_j()});
  const auto left = hs::monomial_stem(ones, Quat(1.0), Side::Left);
  const auto right = hs::monomial_stem(ones, Quat(1.0), Side::Right);
  EXPECT_QUAT_NEAR(hs::induce_left(left, ij), Quat::unit_k(), 1e-15);
  EXPECT_QUAT_NEAR(hs::induce_right(right, ij), -Quat::unit_k(), 1e-15);
}

TEST(Induce, MonomialsMatchDirectProducts) {
  hs::Rng rng(41);
  const std::array<int, 3> powers{2, -1, 3};
  const Quat c = rng.quaternion();
  const auto left = hs::induced_function(hs::monomial_stem(powers, c, Side::Left), Side::Left);
  const auto right = hs::induced_function(hs::monomial_stem(powers, c, Side::Right), Side::Right);
  for (int t = 0; t < 50; ++t) {
    const QVec q = rng.vector_in_shell(3, 0.3, 2.0);
    const Quat l = q[0] * q[0] * hs::qinv(q[1]) * q[2] * q[2] * q[2] * c;
    const Quat r = c * q[2] * q[2] * q[2] * hs::qinv(q[1]) * q[0] * q[0];
    EXPECT_QUAT_NEAR(left(q), l, 1e-11 * (1 + hs::abs(l)));
    EXPECT_QUAT_NEAR(right(q), r, 1e-11 * (1 + hs::abs(r)));
  }
}

TEST(Induce, OutsideDomain) {
  EXPECT_THROW(hs::induce_left(hs::power_stem(1, 1, -1), qvec({Quat()})), hs::DomainError);
}

TEST(Recover, IdentityExample) {
  const std::array<Unit, 1> j{Unit::j()};
  const auto f = hs::induced_function(hs::variable_stem(1, 1), Side::Left);
  const MultivectorHQ stem = hs::recover_stem_left(f, point({{1.0, 2.0}}), j);
  EXPECT_QUAT_NEAR(stem[0], Quat(1.0), 1e-15);
  EXPECT_QUAT_NEAR(stem[1], Quat(2.0), 1e-15);
}

TEST(Recover, ConjugationStem) {
  hs::Rng rng(2);
  const hs::QFunctionN f(1, [](const QVec& q) { return hs::conj(q[0]); });
  const ComplexPoint z = point({{0.7, 1.3}});
  const std::array<Unit, 1> u1{rng.unit()}, u2{rng.unit()};
  const auto a = hs::recover_stem_left(f, z, u1);
  const auto b = hs::recover_stem_left(f, z, u2);
  EXPECT_QUAT_NEAR(a[0], Quat(0.7), 1e-14);
  EXPECT_QUAT_NEAR(a[1], Quat(-1.3), 1e-14);
  EXPECT_LE(hs::max_distance(a, b), 1e-14);
}

TEST(Recover, RealSliceRejected) {
  const std::array<Unit, 1> i{Unit::i()};
  const auto f = hs::induced_function(hs::variable_stem(1, 1), Side::Left);
  EXPECT_THROW(hs::recover_stem_left(f, point({{1.0, 1e-4}}), i), hs::RealSliceError);
}

TEST(Recover, RoundTripOverCatalog) {
  for (const auto& entry : hs::catalog()) {
    if (!entry.stem) continue;
    const auto f = hs::induced_function(*entry.stem, entry.stem_side);
    hs::CircularSampler cfg;
    cfg.n = entry.n;
    cfg.seed = 77;
    hs::SampleStream stream(cfg);
    for (int t = 0; t < 20; ++t) {
      const auto s = stream.next();
      const MultivectorHQ expected = (*entry.stem)(s.z);
      const MultivectorHQ got = hs::recover_stem(f, s.z, s.units, entry.stem_side);
      EXPECT_LE(hs::max_distance(expected, got), 1e-9 * (1 + hs::norm(expected))) << entry.name;
    }
  }
}

TEST(Recover, ExpressionsMatchStems) {
  // The parsed expression and the stem-induced function are the same map.
  hs::Rng rng(8);
  for (const auto& entry : hs::catalog()) {
    if (!entry.stem) continue;
    const auto g = hs::induced_function(*entry.stem, entry.stem_side);
    const auto f = entry.function();
    for (int t = 0; t < 20; ++t) {
      const QVec q = rng.vector_in_shell(entry.n, 0.3, 2.0);
      EXPECT_QUAT_NEAR(f(q), g(q), 1e-10 * (1 + hs::abs(f(q)))) << entry.name;
    }
  }
}

TEST(Stem, Intrinsic) {
  EXPECT_EQ(hs::check_intrinsic(hs::variable_stem(1, 1), 50, 1), 0.0);
  EXPECT_LE(hs::check_intrinsic(hs::power_stem(1, 1, 2), 50, 1), 1e-14);
  const std::array<int, 3> powers{1, 2, -1};
  EXPECT_LE(hs::check_intrinsic(hs::monomial_stem(powers, Quat(0, 1, 2, 3), Side::Left), 50, 1),
            1e-12);
  const hs::StemFunction bad(1, [](const ComplexPoint& z) {
    return MultivectorHQ::scalar(1, Quat(z[0].imag()));
  });
  EXPECT_GT(hs::check_intrinsic(bad, 50, 1), 0.1);
}

TEST(Stem, SquareComponents) {
  const auto f = hs::power_stem(1, 1, 2);
  const MultivectorHQ v = f(point({{1.5, 0.5}}));
  EXPECT_QUAT_NEAR(v[0], Quat(1.5 * 1.5 - 0.5 * 0.5), 1e-15);
  EXPECT_QUAT_NEAR(v[1], Quat(2 * 1.5 * 0.5), 1e-15);
}

TEST(Stem, ArithmeticOperators) {
  const auto f = hs::variable_stem(2, 1) * hs::variable_stem(2, 2) + hs::constant_stem(2, Quat(3.0));
  const ComplexPoint z = point({{1.0, 2.0}, {0.5, -1.0}});
  const MultivectorHQ v = f(z);
  EXPECT_QUAT_NEAR(v[0], Quat(1.0 * 0.5 + 3.0), 1e-15);
  EXPECT_QUAT_NEAR(v[0b01], Quat(2.0 * 0.5), 1e-15);
  EXPECT_QUAT_NEAR(v[0b10], Quat(1.0 * -1.0), 1e-15);
  EXPECT_QUAT_NEAR(v[0b11], Quat(2.0 * -1.0), 1e-15);
}
