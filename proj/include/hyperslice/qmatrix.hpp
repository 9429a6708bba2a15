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

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>

#include "hyperslice/errors.hpp"
#include "hyperslice/quaternion.hpp"

namespace hyperslice {

template <typename Scalar>
using QuatMatrix = Eigen::Matrix<Quaternion<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
using QMat = QuatMatrix<double>;

/// 2x2 quaternionic matrix with rows (a b) / (c d).
template <typename Scalar>
struct QuatMatrix2 {
  Quaternion<Scalar> a, b, c, d;

  static QuatMatrix2 identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }

  Scalar max_abs() const {
    return std::max({abs(a), abs(b), abs(c), abs(d)});
  }
  friend bool operator==(const QuatMatrix2&, const QuatMatrix2&) = default;
};
using QMat2 = QuatMatrix2<double>;

template <typename Scalar>
QuatMatrix<Scalar> to_matrix(const QuatMatrix2<Scalar>& m) {
  QuatMatrix<Scalar> out(2, 2);
  out << m.a, m.b, m.c, m.d;
  return out;
}

template <typename Scalar>
QuatMatrix2<Scalar> to_matrix2(const QuatMatrix<Scalar>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw DomainError("expected a 2x2 matrix");
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

template <typename Scalar>
QuatMatrix2<Scalar> operator*(const QuatMatrix2<Scalar>& l, const QuatMatrix2<Scalar>& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

/// Quaternionic matrix product, sum_k A_ik B_kj with A's entry on the left.
/// Written out by hand: Eigen's product kernels are free to evaluate a
/// transposed problem, which would swap the factors of each scalar product.
template <typename Scalar>
QuatMatrix<Scalar> matmul(const QuatMatrix<Scalar>& lhs, const QuatMatrix<Scalar>& rhs) {
  if (lhs.cols() != rhs.rows()) throw DomainError("matmul: shape mismatch");
  QuatMatrix<Scalar> out = QuatMatrix<Scalar>::Zero(lhs.rows(), rhs.cols());
  for (Eigen::Index i = 0; i < lhs.rows(); ++i)
    for (Eigen::Index j = 0; j < rhs.cols(); ++j)
      for (Eigen::Index k = 0; k < lhs.cols(); ++k) out(i, j) += lhs(i, k) * rhs(k, j);
  return out;
}

/// Row vector times matrix: (QA)_j = sum_k q_k A_kj.
template <typename Scalar>
QuatVector<Scalar> row_times(const QuatVector<Scalar>& q, const QuatMatrix<Scalar>& m) {
  if (q.size() != m.rows()) throw DomainError("row_times: shape mismatch");
  QuatVector<Scalar> out = QuatVector<Scalar>::Zero(m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index k = 0; k < m.rows(); ++k) out[j] += q[k] * m(k, j);
  return out;
}

template <typename Scalar>
QuatMatrix<Scalar> identity_matrix(Eigen::Index n) {
  QuatMatrix<Scalar> m = QuatMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Quaternion<Scalar>(Scalar(1));
  return m;
}

/// Standard embedding H^{n x n} -> C^{2n x 2n}: q = z1 + z2 j maps to the
/// block ((z1, z2), (-conj z2, conj z1)). A ring homomorphism.
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic> complex_embedding(
    const QuatMatrix<Scalar>& m) {
  using C = std::complex<Scalar>;
  Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic> out(2 * m.rows(), 2 * m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto& q = m(r, c);
      const C z1(q.w, q.x), z2(q.y, q.z);
      out(2 * r, 2 * c) = z1;
      out(2 * r, 2 * c + 1) = z2;
      out(2 * r + 1, 2 * c) = -std::conj(z2);
      out(2 * r + 1, 2 * c + 1) = std::conj(z1);
    }
  }
  return out;
}

/// det_C of the complex embedding (the Study determinant). Real and >= 0 up
/// to rounding.
template <typename Scalar>
Scalar study_determinant(const QuatMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  return complex_embedding(m).partialPivLu().determinant().real();
}

/// Dieudonne determinant of an n x n matrix: sqrt |det_C(chi(A))|.
template <typename Scalar>
Scalar detN(const QuatMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return Scalar(1);
  using std::abs;
  using std::sqrt;
  return sqrt(abs(complex_embedding(m).partialPivLu().determinant()));
}

template <typename Scalar>
Scalar det2_radicand(const QuatMatrix2<Scalar>& m) {
  return norm2(m.a) * norm2(m.d) + norm2(m.b) * norm2(m.c) -
         Scalar(2) * (m.c * conj(m.a) * m.b * conj(m.d)).real();
}

/// Dieudonne determinant of a 2x2 matrix,
///   sqrt(|a|^2 |d|^2 + |b|^2 |c|^2 - 2 Re(c conj(a) b conj(d))).
/// Tiny negative radicands from rounding are clamped to 0; anything below
/// -1e-9 * (|a|^2|d|^2 + |b|^2|c|^2) throws NegativeRadicand.
template <typename Scalar>
Scalar det2(const QuatMatrix2<Scalar>& m) {
  const Scalar rad = det2_radicand(m);
  const Scalar scale = norm2(m.a) * norm2(m.d) + norm2(m.b) * norm2(m.c);
  if (rad < Scalar(0)) {
    if (rad < Scalar(-1e-9) * scale) throw NegativeRadicand("det2: negative radicand");
    return Scalar(0);
  }
  using std::sqrt;
  return sqrt(rad);
}

/// Same expression with coefficient 1 on the cross term. Kept only to show
/// that it does not vanish on matrices with right-dependent columns.
template <typename Scalar>
Scalar det2_single_cross_term(const QuatMatrix2<Scalar>& m) {
  using std::sqrt;
  const Scalar rad = norm2(m.a) * norm2(m.d) + norm2(m.b) * norm2(m.c) -
                     (m.c * conj(m.a) * m.b * conj(m.d)).real();
  return sqrt(std::max(rad, Scalar(0)));
}

/// Cayley-style a d - c b. Order sensitive and not a determinant over H.
template <typename Scalar>
Quaternion<Scalar> cayley_det2(const QuatMatrix2<Scalar>& m) {
  return m.a * m.d - m.c * m.b;
}

namespace detail {
template <typename Scalar>
void require_pivot(const Quaternion<Scalar>& p, Scalar scale, const char* what) {
  if (!(abs(p) > Scalar(1e-14) * scale)) throw ZeroPivot(what);
}
template <typename Scalar>
Quaternion<Scalar> complement_inverse(const Quaternion<Scalar>& s, Scalar scale,
                                      const char* what) {
  if (!(abs(s) > Scalar(1e-12) * scale)) throw SingularMatrix(what);
  return qinv(s);
}
}  // namespace detail

/// Right inverse by elimination on the pivot a (requires a != 0):
///   S = d - c a^-1 b,
///   [[a^-1 + a^-1 b S^-1 c a^-1, -a^-1 b S^-1], [-S^-1 c a^-1, S^-1]].
template <typename Scalar>
QuatMatrix2<Scalar> inv2_via_a(const QuatMatrix2<Scalar>& m) {
  const Scalar scale = m.max_abs();
  detail::require_pivot(m.a, scale, "inv2_via_a: a = 0");
  const auto a_inv = qinv(m.a);
  const auto s = m.d - m.c * a_inv * m.b;
  const auto si = detail::complement_inverse(s, abs(m.d) + abs(m.c) * abs(a_inv) * abs(m.b),
                                             "inv2_via_a: d - c a^-1 b not invertible");
  return {a_inv + a_inv * m.b * si * m.c * a_inv, -(a_inv * m.b * si), -(si * m.c * a_inv), si};
}

/// Right inverse by elimination on the pivot b (requires b != 0):
///   T = c - d b^-1 a,
///   [[-T^-1 d b^-1, T^-1], [b^-1 + b^-1 a T^-1 d b^-1, -b^-1 a T^-1]].
template <typename Scalar>
QuatMatrix2<Scalar> inv2_via_b(const QuatMatrix2<Scalar>& m) {
  const Scalar scale = m.max_abs();
  detail::require_pivot(m.b, scale, "inv2_via_b: b = 0");
  const auto bi = qinv(m.b);
  const auto t = m.c - m.d * bi * m.a;
  const auto ti = detail::complement_inverse(t, abs(m.c) + abs(m.d) * abs(bi) * abs(m.a),
                                             "inv2_via_b: c - d b^-1 a not invertible");
  return {-(ti * m.d * bi), ti, bi + bi * m.a * ti * m.d * bi, -(bi * m.a * ti)};
}

/// Entrywise form for abcd != 0:
///   [[(a - b d^-1 c)^-1, (c - d b^-1 a)^-1], [(b - a c^-1 d)^-1, (d - c a^-1 b)^-1]].
template <typename Scalar>
QuatMatrix2<Scalar> inv2_bilateral(const QuatMatrix2<Scalar>& m) {
  const Scalar scale = m.max_abs();
  detail::require_pivot(m.a, scale, "inv2_bilateral: a = 0");
  detail::require_pivot(m.b, scale, "inv2_bilateral: b = 0");
  detail::require_pivot(m.c, scale, "inv2_bilateral: c = 0");
  detail::require_pivot(m.d, scale, "inv2_bilateral: d = 0");
  const auto a_inv = qinv(m.a), bi = qinv(m.b), ci = qinv(m.c), di = qinv(m.d);
  auto entry = [](const Quaternion<Scalar>& p, const Quaternion<Scalar>& q,
                  const Quaternion<Scalar>& r_inv, const Quaternion<Scalar>& s) {
    const auto comp = p - q * r_inv * s;
    return detail::complement_inverse(comp, abs(p) + abs(q) * abs(r_inv) * abs(s),
                                      "inv2_bilateral: complement not invertible");
  };
  return {entry(m.a, m.b, di, m.c), entry(m.c, m.d, bi, m.a),
          entry(m.b, m.a, ci, m.d), entry(m.d, m.c, a_inv, m.b)};
}

/// Gauss-Jordan inverse with partial pivoting; row operations act from the
/// left. Throws SingularMatrix when no usable pivot remains.
template <typename Scalar>
QuatMatrix<Scalar> inverse(const QuatMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  QuatMatrix<Scalar> work = m;
  QuatMatrix<Scalar> inv = identity_matrix<Scalar>(n);
  Scalar scale(0);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) scale = std::max(scale, abs(m(r, c)));

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    for (Eigen::Index r = col + 1; r < n; ++r)
      if (abs(work(r, col)) > abs(work(piv, col))) piv = r;
    if (!(abs(work(piv, col)) > Scalar(1e-13) * scale)) {
      throw SingularMatrix("inverse: matrix is singular");
    }
    work.row(col).swap(work.row(piv));
    inv.row(col).swap(inv.row(piv));
    const auto p = qinv(work(col, col));
    for (Eigen::Index c = 0; c < n; ++c) {
      work(col, c) = p * work(col, c);
      inv(col, c) = p * inv(col, c);
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const auto f = work(r, col);
      if (f == Quaternion<Scalar>()) continue;
      for (Eigen::Index c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

/// Scale-aware invertibility: detN(A) > 1e-12 * prod_i |row_i|.
template <typename Scalar>
bool is_invertible(const QuatMatrix<Scalar>& m) {
  Scalar bound(1);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Scalar row(0);
    for (Eigen::Index c = 0; c < m.cols(); ++c) row += norm2(m(r, c));
    using std::sqrt;
    bound *= sqrt(row);
  }
  return bound > Scalar(0) && detN(m) > Scalar(1e-12) * bound;
}

/// Finds lambda with q = a lambda, using the vanishing of every 2x2
/// Dieudonne minor det2((q_i a_i; q_j a_j)) as the test and a_p^-1 q_p
/// (p = argmax |a_p|) as the candidate, which is then checked componentwise.
/// Both tests are relative to |q|_inf + |a|_inf |lambda|.
template <typename Scalar>
std::optional<Quaternion<Scalar>> right_proportional(const QuatVector<Scalar>& q,
                                                     const QuatVector<Scalar>& a,
                                                     Scalar tol = Scalar(1e-6)) {
  if (q.size() != a.size()) throw DomainError("right_proportional: length mismatch");
  const Eigen::Index n = a.size();
  Eigen::Index p = 0;
  Scalar a_max(0), q_max(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (abs(a[i]) > a_max) {
      a_max = abs(a[i]);
      p = i;
    }
    q_max = std::max(q_max, abs(q[i]));
  }
  if (!(a_max > Scalar(0))) throw DomainError("right_proportional: a = 0");

  const Scalar minor_scale = q_max * a_max;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (det2(QuatMatrix2<Scalar>{q[i], a[i], q[j], a[j]}) > tol * minor_scale) {
        return std::nullopt;
      }
    }
  }
  const auto lambda = qinv(a[p]) * q[p];
  const Scalar scale = std::max(q_max, a_max * abs(lambda));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (distance(q[i], a[i] * lambda) > tol * scale) return std::nullopt;
  }
  return lambda;
}

/// Q -> Q A + B on row vectors, with A invertible.
template <typename Scalar>
class AffineMap {
 public:
  AffineMap(QuatMatrix<Scalar> a, QuatVector<Scalar> b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() != a_.cols() || a_.rows() != b_.size()) {
      throw DomainError("AffineMap: shape mismatch");
    }
    if (!is_invertible(a_)) throw SingularMatrix("AffineMap: linear part is singular");
  }

  static AffineMap identity(Eigen::Index n) {
    return AffineMap(identity_matrix<Scalar>(n), QuatVector<Scalar>::Zero(n));
  }
  static AffineMap translation(QuatVector<Scalar> b) {
    const auto n = b.size();
    return AffineMap(identity_matrix<Scalar>(n), std::move(b));
  }
  /// Q -> Q s for a scalar quaternion s acting on every coordinate.
  static AffineMap right_scaling(Eigen::Index n, const Quaternion<Scalar>& s) {
    QuatMatrix<Scalar> a = QuatMatrix<Scalar>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) a(i, i) = s;
    return AffineMap(std::move(a), QuatVector<Scalar>::Zero(n));
  }

  Eigen::Index dim() const { return b_.size(); }
  const QuatMatrix<Scalar>& linear() const { return a_; }
  const QuatVector<Scalar>& offset() const { return b_; }

  QuatVector<Scalar> operator()(const QuatVector<Scalar>& q) const {
    return row_times(q, a_) + b_;
  }

 private:
  QuatMatrix<Scalar> a_;
  QuatVector<Scalar> b_;
};

using Affine = AffineMap<double>;

template <typename Scalar>
QuatVector<Scalar> affine_apply(const AffineMap<Scalar>& f, const QuatVector<Scalar>& q) {
  return f(q);
}

/// f o g: Q -> (Q A_g + B_g) A_f + B_f.
template <typename Scalar>
AffineMap<Scalar> affine_compose(const AffineMap<Scalar>& f, const AffineMap<Scalar>& g) {
  if (f.dim() != g.dim()) throw DomainError("affine_compose: dimension mismatch");
  return AffineMap<Scalar>(matmul(g.linear(), f.linear()), row_times(g.offset(), f.linear()) + f.offset());
}

/// Q -> (Q - B) A^-1.
template <typename Scalar>
AffineMap<Scalar> affine_invert(const AffineMap<Scalar>& f) {
  const auto a_inv = inverse(f.linear());
  return AffineMap<Scalar>(a_inv, -row_times(f.offset(), a_inv));
}

}  // namespace hyperslice
