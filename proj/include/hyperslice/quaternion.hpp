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

#include <Eigen/Core>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>

#include "hyperslice/errors.hpp"

namespace hyperslice {

/// Element w + x i + y j + z k of the skew field H.
///
/// Plain value type. Multiplication is the Hamilton product and does not
/// commute; every routine in this library keeps operand order explicit.
template <typename Scalar>
struct Quaternion {
  Scalar w{0}, x{0}, y{0}, z{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(Scalar w_, Scalar x_, Scalar y_, Scalar z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  // Implicit on purpose: Eigen builds Scalar(0) / Scalar(1) internally.
  constexpr Quaternion(Scalar real) : w(real) {}  // NOLINT
  constexpr Quaternion(int real) : w(static_cast<Scalar>(real)) {}  // NOLINT

  static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }

  constexpr Scalar real() const { return w; }
  constexpr Quaternion imag() const { return {0, x, y, z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(const Quaternion& o) {
    return *this = *this * o;
  }
  constexpr Quaternion& operator*=(Scalar s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) {
    return a += b;
  }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) {
    return a -= b;
  }
  friend constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& a,
                                        const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr Quaternion operator*(Quaternion a, Scalar s) {
    return a *= s;
  }
  friend constexpr Quaternion operator*(Scalar s, Quaternion a) {
    return a *= s;
  }
  friend constexpr Quaternion operator/(Quaternion a, Scalar s) {
    return a *= (Scalar(1) / s);
  }
  friend constexpr bool operator==(const Quaternion&,
                                   const Quaternion&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ", " << q.x << ", " << q.y << ", " << q.z
              << ')';
  }
};

using Quat = Quaternion<double>;

template <typename Scalar>
using QuatVector = Eigen::Matrix<Quaternion<Scalar>, Eigen::Dynamic, 1>;
using QVec = QuatVector<double>;

template <typename Scalar>
constexpr Quaternion<Scalar> conj(const Quaternion<Scalar>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

template <typename Scalar>
constexpr Scalar norm2(const Quaternion<Scalar>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <typename Scalar>
Scalar abs(const Quaternion<Scalar>& q) {
  using std::sqrt;
  return sqrt(norm2(q));
}

template <typename Scalar>
constexpr Quaternion<Scalar> qmul(const Quaternion<Scalar>& a,
                                  const Quaternion<Scalar>& b) {
  return a * b;
}

/// Two-sided inverse conj(a) / |a|^2. Throws ZeroDivision when |a| < 1e-300.
template <typename Scalar>
Quaternion<Scalar> qinv(const Quaternion<Scalar>& a) {
  const Scalar n2 = norm2(a);
  if (!(abs(a) >= Scalar(1e-300))) {
    throw ZeroDivision("quaternion inverse of zero");
  }
  return conj(a) / n2;
}

template <typename Scalar>
Scalar distance(const Quaternion<Scalar>& a, const Quaternion<Scalar>& b) {
  return abs(a - b);
}

/// A unit of the sphere S = { q : q^2 = -1 }.
template <typename Scalar>
class ImaginaryUnit {
 public:
  /// Validates Re(J) = 0 and |J| = 1 to within 1e-12.
  explicit ImaginaryUnit(const Quaternion<Scalar>& j) : j_(j) {
    using std::abs;
    if (abs(j.w) > Scalar(1e-12) || abs(hyperslice::abs(j) - Scalar(1)) > Scalar(1e-12)) {
      throw DomainError("not an imaginary unit");
    }
  }
  /// Normalizes a nonzero imaginary direction onto S.
  static ImaginaryUnit from_direction(Scalar x, Scalar y, Scalar z) {
    using std::sqrt;
    const Scalar r = sqrt(x * x + y * y + z * z);
    if (!(r > Scalar(0))) throw DomainError("zero imaginary direction");
    return ImaginaryUnit(Quaternion<Scalar>{0, x / r, y / r, z / r});
  }
  static ImaginaryUnit i() { return ImaginaryUnit(Quaternion<Scalar>::unit_i()); }
  static ImaginaryUnit j() { return ImaginaryUnit(Quaternion<Scalar>::unit_j()); }
  static ImaginaryUnit k() { return ImaginaryUnit(Quaternion<Scalar>::unit_k()); }

  const Quaternion<Scalar>& value() const { return j_; }
  operator const Quaternion<Scalar>&() const { return j_; }  // NOLINT

 private:
  Quaternion<Scalar> j_;
};

using Unit = ImaginaryUnit<double>;

template <typename Scalar>
struct SliceDecomposition {
  Scalar x;
  Scalar y;  // always >= 0
  ImaginaryUnit<Scalar> unit;
  bool ambiguous;  // y == 0; unit is the conventional i

  Quaternion<Scalar> reconstruct() const { return x + y * unit.value(); }
};

/// q = x + y J with y >= 0. Real points get J = i and the ambiguity flag.
template <typename Scalar>
SliceDecomposition<Scalar> slice_decompose(const Quaternion<Scalar>& q) {
  using std::sqrt;
  const Scalar y = sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
  if (y == Scalar(0)) {
    return {q.w, Scalar(0), ImaginaryUnit<Scalar>::i(), true};
  }
  return {q.w, y, ImaginaryUnit<Scalar>::from_direction(q.x, q.y, q.z), false};
}

/// J_{k1} ... J_{ks} for the set bits k1 < ... < ks of `mask` (bit h-1 is
/// variable h). The empty product is 1.
template <typename Scalar>
Quaternion<Scalar> ordered_product(std::span<const ImaginaryUnit<Scalar>> units,
                                   std::uint32_t mask) {
  Quaternion<Scalar> p(Scalar(1));
  for (std::size_t h = 0; h < units.size(); ++h) {
    if (mask & (std::uint32_t{1} << h)) p = p * units[h].value();
  }
  return p;
}

/// J_{ks} ... J_{k1}, the same factors multiplied in decreasing index order.
template <typename Scalar>
Quaternion<Scalar> reversed_product(std::span<const ImaginaryUnit<Scalar>> units,
                                    std::uint32_t mask) {
  Quaternion<Scalar> p(Scalar(1));
  for (std::size_t h = units.size(); h-- > 0;) {
    if (mask & (std::uint32_t{1} << h)) p = p * units[h].value();
  }
  return p;
}

}  // namespace hyperslice

namespace Eigen {

template <typename Scalar>
struct NumTraits<hyperslice::Quaternion<Scalar>> : GenericNumTraits<Scalar> {
  using Real = Scalar;
  using NonInteger = hyperslice::Quaternion<Scalar>;
  using Nested = hyperslice::Quaternion<Scalar>;
  using Literal = hyperslice::Quaternion<Scalar>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 4,
    AddCost = 4,
    MulCost = 16
  };
};

}  // namespace Eigen
