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

// The real Clifford algebra R_n of signature (0, n) and the tensor product
// H (x) R_n. Basis blades e_K are indexed by bitmasks: bit h-1 set means
// e_h is a factor. Every blade sign is computed in integer arithmetic.

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "hyperslice/errors.hpp"
#include "hyperslice/quaternion.hpp"

namespace hyperslice {

inline constexpr int kMaxCliffordDim = 8;

using BladeMask = std::uint32_t;

struct BladeIndex {
  int n;
  BladeMask mask;

  constexpr int grade() const { return std::popcount(mask); }
  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;
};

/// sign * e_mask; the result of every blade-level operation.
struct SignedBlade {
  int sign;
  BladeMask mask;
  friend constexpr bool operator==(SignedBlade, SignedBlade) = default;
};

inline constexpr BladeMask variable_bit(int h) { return BladeMask{1} << (h - 1); }

/// e_K e_L = sign e_{K xor L}. The sign counts the transpositions needed to
/// sort the concatenated index list, and one factor -1 per repeated index
/// (e_h^2 = -1).
constexpr SignedBlade blade_product(BladeMask k, BladeMask l) {
  int swaps = 0;
  for (BladeMask rest = l; rest != 0; rest &= rest - 1) {
    const BladeMask low = rest & (~rest + 1);
    // Factors of K with a larger index than this factor of L.
    swaps += std::popcount(k & ~((low << 1) - 1));
  }
  swaps += std::popcount(k & l);
  return {(swaps % 2 == 0) ? 1 : -1, k ^ l};
}

/// Sign of e_K^c = (-1)^{s(s+1)/2} e_K, s = |K|.
constexpr int clifford_conjugate_sign(BladeMask k) {
  const int s = std::popcount(k);
  return ((s * (s + 1) / 2) % 2 == 0) ? 1 : -1;
}

/// J_h(e_K) = -e_{K \ {h}} if h in K, e_{K u {h}} otherwise.
constexpr SignedBlade complex_structure(int h, BladeMask k) {
  const BladeMask bit = variable_bit(h);
  if (k & bit) return {-1, k & ~bit};
  return {1, k | bit};
}

/// J^r_h(e_K) = -(J_h(e_K^c))^c.
constexpr SignedBlade right_complex_structure(int h, BladeMask k) {
  const int c1 = clifford_conjugate_sign(k);
  const SignedBlade j = complex_structure(h, k);
  return {-c1 * j.sign * clifford_conjugate_sign(j.mask), j.mask};
}

/// Element sum_K e_K F_K of H (x) R_n, stored densely (2^n coefficients).
template <typename Scalar>
class Multivector {
 public:
  using Coeff = Quaternion<Scalar>;

  explicit Multivector(int n) : n_(check_dim(n)), coeffs_(QuatVector<Scalar>::Zero(std::size_t{1} << n)) {}

  static Multivector scalar(int n, const Coeff& q) {
    Multivector m(n);
    m[0] = q;
    return m;
  }
  static Multivector blade(int n, BladeMask k, const Coeff& q = Coeff(1)) {
    Multivector m(n);
    m[k] = q;
    return m;
  }

  int dim() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(coeffs_.size()); }

  Coeff& operator[](BladeMask k) { return coeffs_[static_cast<Eigen::Index>(k)]; }
  const Coeff& operator[](BladeMask k) const { return coeffs_[static_cast<Eigen::Index>(k)]; }

  const QuatVector<Scalar>& coeffs() const { return coeffs_; }

  Multivector& operator+=(const Multivector& o) {
    same_dim(o);
    for (std::size_t k = 0; k < size(); ++k) (*this)[k] += o[k];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    same_dim(o);
    for (std::size_t k = 0; k < size(); ++k) (*this)[k] -= o[k];
    return *this;
  }
  Multivector& operator*=(Scalar s) {
    for (std::size_t k = 0; k < size(); ++k) (*this)[k] *= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= Scalar(-1); }
  friend Multivector operator*(Multivector a, Scalar s) { return a *= s; }
  friend Multivector operator*(Scalar s, Multivector a) { return a *= s; }

  /// Product in H (x) R_n: (a (x) e_K)(b (x) e_L) = ab (x) e_K e_L.
  friend Multivector operator*(const Multivector& a, const Multivector& b) {
    a.same_dim(b);
    Multivector out(a.n_);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k] == Coeff()) continue;
      for (std::size_t l = 0; l < b.size(); ++l) {
        const SignedBlade p = blade_product(static_cast<BladeMask>(k), static_cast<BladeMask>(l));
        out[p.mask] += Scalar(p.sign) * (a[k] * b[l]);
      }
    }
    return out;
  }

  /// Quaternionic scaling from the right: sum e_K (F_K q).
  friend Multivector operator*(Multivector a, const Coeff& q) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] * q;
    return a;
  }
  /// Quaternionic scaling from the left: sum e_K (q F_K).
  friend Multivector operator*(const Coeff& q, Multivector a) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = q * a[k];
    return a;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

 private:
  static int check_dim(int n) {
    if (n < 0 || n > kMaxCliffordDim) {
      throw DomainError("Clifford dimension out of range: " + std::to_string(n));
    }
    return n;
  }
  void same_dim(const Multivector& o) const {
    if (o.n_ != n_) throw DomainError("Clifford dimension mismatch");
  }

  int n_;
  QuatVector<Scalar> coeffs_;
};

using MultivectorHQ = Multivector<double>;

/// Euclidean norm over all 4 * 2^n real coordinates.
template <typename Scalar>
Scalar norm(const Multivector<Scalar>& m) {
  Scalar s(0);
  for (std::size_t k = 0; k < m.size(); ++k) s += norm2(m[k]);
  using std::sqrt;
  return sqrt(s);
}

template <typename Scalar>
Scalar max_distance(const Multivector<Scalar>& a, const Multivector<Scalar>& b) {
  Scalar worst(0);
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, distance(a[k], b[k]));
  }
  return worst;
}

template <typename Scalar>
Multivector<Scalar> clifford_conjugate(const Multivector<Scalar>& m) {
  Multivector<Scalar> out(m.dim());
  for (std::size_t k = 0; k < m.size(); ++k) {
    out[k] = Scalar(clifford_conjugate_sign(static_cast<BladeMask>(k))) * m[k];
  }
  return out;
}

namespace detail {
template <typename Scalar, typename BladeMap>
Multivector<Scalar> apply_bladewise(int h, const Multivector<Scalar>& m, BladeMap map) {
  if (h < 1 || h > m.dim()) throw DomainError("structure index out of range");
  Multivector<Scalar> out(m.dim());
  for (std::size_t k = 0; k < m.size(); ++k) {
    const SignedBlade b = map(h, static_cast<BladeMask>(k));
    out[b.mask] += Scalar(b.sign) * m[k];
  }
  return out;
}
}  // namespace detail

/// J_h extended H-linearly: J_h(a (x) e_K) = a (x) J_h(e_K).
template <typename Scalar>
Multivector<Scalar> jh_apply(int h, const Multivector<Scalar>& m) {
  return detail::apply_bladewise(h, m, complex_structure);
}

template <typename Scalar>
Multivector<Scalar> jhr_apply(int h, const Multivector<Scalar>& m) {
  return detail::apply_bladewise(h, m, right_complex_structure);
}

/// "[1,3]" style key: sorted 1-based indices of the blade.
inline std::string blade_key(BladeMask k) {
  std::string s = "[";
  bool first = true;
  for (int h = 1; h <= 32; ++h) {
    if (k & variable_bit(h)) {
      if (!first) s += ',';
      s += std::to_string(h);
      first = false;
    }
  }
  return s + "]";
}

}  // namespace hyperslice
