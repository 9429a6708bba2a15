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
#include <cmath>
#include <numbers>

#include "hyperslice/quaternion.hpp"
#include "hyperslice/random.hpp"
#include "support.hpp"

namespace hs = hyperslice;
using hs::Quat;
using hs::Unit;

TEST(Quaternion, HamiltonRelations) {
  const Quat i = Quat::unit_i(), j = Quat::unit_j(), k = Quat::unit_k();
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, Quat(-1.0));
  EXPECT_EQ(i * j * k, Quat(-1.0));
}

TEST(Quaternion, ProductExamples) {
  const Quat q{0.3, -1.2, 2.0, 0.7};
  EXPECT_EQ(q * Quat(1.0), q);
  EXPECT_EQ(Quat(1, 1, 0, 0) * Quat(1, 0, 1, 0), Quat(1, 1, 1, 1));
  EXPECT_EQ(hs::qmul(Quat(1, 1, 0, 0), Quat(1, 0, 1, 0)), Quat(1, 1, 1, 1));
}

TEST(Quaternion, Inverse) {
  EXPECT_EQ(hs::qinv(Quat::unit_i()), -Quat::unit_i());
  EXPECT_EQ(hs::qinv(Quat(2.0)), Quat(0.5));
  EXPECT_QUAT_NEAR(hs::qinv(Quat(1, 1, 1, 1)), Quat(0.25, -0.25, -0.25, -0.25), 1e-15);
  EXPECT_THROW(hs::qinv(Quat()), hs::ZeroDivision);
  EXPECT_THROW(hs::qinv(Quat(1e-301)), hs::ZeroDivision);

  hs::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const Quat a = rng.quaternion(-3, 3);
    EXPECT_QUAT_NEAR(a * hs::qinv(a), Quat(1.0), 1e-12);
    EXPECT_QUAT_NEAR(hs::qinv(a) * a, Quat(1.0), 1e-12);
  }
}

TEST(Quaternion, ConjugateAndNorm) {
  hs::Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const Quat a = rng.quaternion(-5, 5), b = rng.quaternion(-5, 5);
    const double lhs = hs::abs(a * b), rhs = hs::abs(a) * hs::abs(b);
    EXPECT_NEAR(lhs, rhs, 1e-12 * rhs);
    EXPECT_QUAT_NEAR(a * hs::conj(a), Quat(hs::norm2(a)), 1e-12 * hs::norm2(a));
    EXPECT_QUAT_NEAR(hs::conj(a * b), hs::conj(b) * hs::conj(a), 1e-12 * rhs);
  }
}

TEST(Quaternion, Associativity) {
  hs::Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    const Quat a = rng.quaternion(), b = rng.quaternion(), c = rng.quaternion();
    EXPECT_QUAT_NEAR((a * b) * c, a * (b * c), 1e-14);
    EXPECT_QUAT_NEAR(a * (b + c), a * b + a * c, 1e-14);
  }
}

TEST(ImaginaryUnit, Validation) {
  EXPECT_NO_THROW(Unit(Quat(0, 0, 0, 1)));
  EXPECT_THROW(Unit(Quat(0.1, 0, 0, 1)), hs::DomainError);
  EXPECT_THROW(Unit(Quat(0, 0, 0, 1.01)), hs::DomainError);
  EXPECT_THROW(Unit::from_direction(0, 0, 0), hs::DomainError);
  const Unit u = Unit::from_direction(1, 2, -2);
  EXPECT_QUAT_NEAR(u.value() * u.value(), Quat(-1.0), 1e-15);
}

TEST(SliceDecompose, Examples) {
  const auto a = hs::slice_decompose(Quat(1, 0, 2, 0));
  EXPECT_EQ(a.x, 1.0);
  EXPECT_EQ(a.y, 2.0);
  EXPECT_EQ(a.unit.value(), Quat::unit_j());
  EXPECT_FALSE(a.ambiguous);

  const auto b = hs::slice_decompose(Quat(3.0));
  EXPECT_EQ(b.x, 3.0);
  EXPECT_EQ(b.y, 0.0);
  EXPECT_EQ(b.unit.value(), Quat::unit_i());
  EXPECT_TRUE(b.ambiguous);

  const auto c = hs::slice_decompose(Quat(0, 1, 0, 1));
  EXPECT_NEAR(c.y, std::sqrt(2.0), 1e-15);
  EXPECT_QUAT_NEAR(c.unit.value(), Quat(0, 1, 0, 1) / std::sqrt(2.0), 1e-15);
  EXPECT_QUAT_NEAR(c.reconstruct(), Quat(0, 1, 0, 1), 1e-15);
}

TEST(SliceDecompose, Reconstruction) {
  hs::Rng rng(17);
  for (int t = 0; t < 1000; ++t) {
    const Quat q = rng.quaternion(-10, 10);
    const auto d = hs::slice_decompose(q);
    EXPECT_GE(d.y, 0.0);
    EXPECT_QUAT_NEAR(d.reconstruct(), q, 1e-12 * (1 + hs::abs(q)));
    EXPECT_NEAR(hs::abs(d.unit.value()), 1.0, 1e-12);
    EXPECT_EQ(d.unit.value().w, 0.0);
  }
}

TEST(OrderedProduct, Examples) {
  const std::array<Unit, 2> ij{Unit::i(), Unit::j()};
  const std::array<Unit, 2> ji{Unit::j(), Unit::i()};
  EXPECT_EQ(hs::ordered_product<double>(ij, 0b11), Quat::unit_k());
  EXPECT_EQ(hs::ordered_product<double>(ji, 0b11), -Quat::unit_k());
  EXPECT_EQ(hs::ordered_product<double>(ij, 0), Quat(1.0));
  EXPECT_EQ(hs::reversed_product<double>(ij, 0b11), -Quat::unit_k());
}

TEST(OrderedProduct, MatchesLeftFold) {
  hs::Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    std::array<Unit, 4> units{rng.unit(), rng.unit(), rng.unit(), rng.unit()};
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      Quat fold(1.0), rfold(1.0);
      for (int h = 0; h < 4; ++h) {
        if (mask & (1u << h)) fold = fold * units[static_cast<std::size_t>(h)].value();
      }
      for (int h = 3; h >= 0; --h) {
        if (mask & (1u << h)) rfold = rfold * units[static_cast<std::size_t>(h)].value();
      }
      EXPECT_EQ(hs::ordered_product<double>(units, mask), fold);
      EXPECT_EQ(hs::reversed_product<double>(units, mask), rfold);
    }
  }
}

TEST(Rng, Deterministic) {
  hs::Rng a(99), b(99);
  for (int t = 0; t < 10; ++t) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(hs::derive_seed(1, 2), hs::derive_seed(1, 3));
  EXPECT_EQ(hs::derive_seed(1, 2, 3), hs::derive_seed(1, 2, 3));
}
