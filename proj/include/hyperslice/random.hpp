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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "hyperslice/qmatrix.hpp"
#include "hyperslice/quaternion.hpp"

namespace hyperslice {

/// Splitmix64 finalizer.
constexpr std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Mixes stream labels into a base seed, so independent sub-streams stay
/// reproducible whatever order they are consumed in.
template <typename... Labels>
constexpr std::uint64_t derive_seed(std::uint64_t seed, Labels... labels) {
  std::uint64_t s = mix_seed(seed);
  ((s = mix_seed(s ^ static_cast<std::uint64_t>(labels))), ...);
  return s;
}

/// The single random source of the library: std::mt19937_64 seeded with a
/// 64-bit value. Reals are built from the top 53 bits of each draw instead of
/// std::uniform_real_distribution, whose output is implementation defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next() { return engine_(); }

  /// Uniform point of the sphere S of imaginary units.
  Unit unit() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 2.0 * std::numbers::pi);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return Unit::from_direction(r * std::cos(phi), r * std::sin(phi), z);
  }

  /// Quaternion with independent coordinates uniform in [lo, hi).
  Quat quaternion(double lo = -1.0, double hi = 1.0) {
    const double w = uniform(lo, hi), x = uniform(lo, hi), y = uniform(lo, hi);
    return {w, x, y, uniform(lo, hi)};
  }

  /// Quaternion with modulus uniform in [r_min, r_max] and uniform direction.
  Quat quaternion_in_shell(double r_min, double r_max) {
    const double r = uniform(r_min, r_max);
    const double w = uniform(-1.0, 1.0);
    const Unit u = unit();
    const double s = std::sqrt(std::max(0.0, 1.0 - w * w));
    return r * (Quat(w) + s * u.value());
  }

  QVec vector(Eigen::Index n, double lo = -1.0, double hi = 1.0) {
    QVec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = quaternion(lo, hi);
    return v;
  }

  QVec vector_in_shell(Eigen::Index n, double r_min, double r_max) {
    QVec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = quaternion_in_shell(r_min, r_max);
    return v;
  }

  QMat matrix(Eigen::Index rows, Eigen::Index cols, double lo = -1.0, double hi = 1.0) {
    QMat m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r)
      for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = quaternion(lo, hi);
    return m;
  }

  QMat2 matrix2(double lo = -1.0, double hi = 1.0) {
    const Quat a = quaternion(lo, hi), b = quaternion(lo, hi), c = quaternion(lo, hi);
    return {a, b, c, quaternion(lo, hi)};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperslice
