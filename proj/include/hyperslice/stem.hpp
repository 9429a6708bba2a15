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

// Stem functions D -> H (x) R_n, the slice functions they induce on the
// circular set Omega_D, and recovery of a stem from samples of a function
// given on H^n.

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hyperslice/clifford.hpp"
#include "hyperslice/qmatrix.hpp"
#include "hyperslice/quaternion.hpp"

namespace hyperslice {

/// A point (x_1 + i y_1, ..., x_n + i y_n) of C^n.
using ComplexPoint = Eigen::VectorXcd;

enum class Side { Left, Right };

const char* to_string(Side side);

/// Evaluable map from a conjugation-invariant subset of C^n to H (x) R_n.
class StemFunction {
 public:
  using Evaluator = std::function<MultivectorHQ(const ComplexPoint&)>;
  using Domain = std::function<bool(const ComplexPoint&)>;

  StemFunction(int n, Evaluator eval, Domain domain = {});

  int dim() const { return n_; }
  bool contains(const ComplexPoint& z) const;
  /// Throws DomainError outside the domain.
  MultivectorHQ operator()(const ComplexPoint& z) const;

  friend StemFunction operator+(const StemFunction& f, const StemFunction& g);
  /// Pointwise product in H (x) R_n.
  friend StemFunction operator*(const StemFunction& f, const StemFunction& g);
  /// Constant quaternion on the right (left) of every component.
  friend StemFunction operator*(const StemFunction& f, const Quat& q);
  friend StemFunction operator*(const Quat& q, const StemFunction& f);

 private:
  int n_;
  Evaluator eval_;
  Domain domain_;
};

/// Function H^n -> H given pointwise, with its domain.
class QFunctionN {
 public:
  using Evaluator = std::function<Quat(const QVec&)>;
  using Domain = std::function<bool(const QVec&)>;

  QFunctionN(int n, Evaluator eval, Domain domain = {});

  int dim() const { return n_; }
  bool contains(const QVec& q) const;
  /// Throws DomainError outside the domain; evaluator errors propagate.
  Quat operator()(const QVec& q) const;

 private:
  int n_;
  Evaluator eval_;
  Domain domain_;
};

/// Left blade unit J_K = J_{k1} ... J_{ks}.
Quat left_blade_unit(std::span<const Unit> units, BladeMask k);

/// Right blade unit (-1)^{s(s-1)/2} J_{ks} ... J_{k1}: the image of e_K once
/// it is rewritten as a product of generators in decreasing order. With this
/// choice the right slice functions with J^r-holomorphic stems are exactly
/// the ones built from decreasing-order products such as q2 q1.
Quat right_blade_unit(std::span<const Unit> units, BladeMask k);

Quat blade_unit(std::span<const Unit> units, BladeMask k, Side side);

/// q_h = x_h + y_h J_h.
QVec slice_point(const ComplexPoint& z, std::span<const Unit> units);

/// sum_K J_K F_K(z) at q = slice point of (z, J).
Quat induce_left(const StemFunction& f, const QVec& q);
/// sum_K F_K(z) J_K.
Quat induce_right(const StemFunction& f, const QVec& q);
Quat induce(const StemFunction& f, const QVec& q, Side side);

/// The n-variable slice function induced by `f` on the chosen side.
QFunctionN induced_function(const StemFunction& f, Side side);

/// G_K = 2^-n sum_eps (prod_{k in K} eps_k) f(x + eps y J), over the 2^n
/// sign patterns eps. For a left slice function G_K = J_K F_K; for a right
/// one G_K = F_K J_K. Throws RealSliceError if some |y_h| < margin.
MultivectorHQ slice_moments(const QFunctionN& f, const ComplexPoint& z,
                            std::span<const Unit> units, double margin = 1e-3);

/// F_K = J_K^-1 G_K (left) or G_K J_K^-1 (right).
MultivectorHQ stem_from_moments(const MultivectorHQ& moments, std::span<const Unit> units,
                                Side side);

MultivectorHQ recover_stem(const QFunctionN& f, const ComplexPoint& z,
                           std::span<const Unit> units, Side side, double margin = 1e-3);
MultivectorHQ recover_stem_left(const QFunctionN& f, const ComplexPoint& z,
                                std::span<const Unit> units, double margin = 1e-3);
MultivectorHQ recover_stem_right(const QFunctionN& f, const ComplexPoint& z,
                                 std::span<const Unit> units, double margin = 1e-3);

/// z with z_h replaced by its conjugate (h is 1-based).
ComplexPoint conjugate_variable(const ComplexPoint& z, int h);

// Building blocks for concrete stems.

/// Stem x_h + e_h y_h of the coordinate q_h.
StemFunction variable_stem(int n, int h);
/// Stem of q_h^power (negative powers excluded from z_h = 0).
StemFunction power_stem(int n, int h, int power);
/// Stem x_h - e_h y_h of conj(q_h).
StemFunction conjugate_stem(int n, int h);
StemFunction constant_stem(int n, const Quat& q);

/// Ordered monomial. Left: q_1^{p_1} ... q_n^{p_n} c, factors in increasing
/// variable order with the coefficient on the right. Right: c q_n^{p_n} ...
/// q_1^{p_1}, decreasing order with the coefficient on the left. Zero
/// exponents are skipped.
StemFunction monomial_stem(std::span<const int> powers, const Quat& coeff, Side side);

/// Stem of component `col` of Q -> Q A + B: sum_k (x_k + e_k y_k) A_k,col + B_col.
StemFunction affine_component_stem(const Affine& map, int col);

}  // namespace hyperslice
