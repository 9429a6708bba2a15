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

// Concrete quaternionic manifolds: projective space, the blow-up of H^n at the
// origin, affine quotients and the Grassmannian Gr(2,4).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperslice/atlas.hpp"

namespace hyperslice {

/// A right line [a_0, ..., a_n] in H^{n+1}. Stored with the first
/// largest-modulus coordinate scaled to exactly 1 from the right.
class HomogeneousPoint {
 public:
  /// Throws DomainError if every coordinate vanishes.
  explicit HomogeneousPoint(QVec coords);

  Eigen::Index size() const { return coords_.size(); }
  const QVec& coords() const { return coords_; }
  const Quat& operator[](Eigen::Index i) const { return coords_[i]; }

 private:
  QVec coords_;
};

/// Distance between two lines, measured on representatives that share the
/// pivot of `a`.
double line_distance(const HomogeneousPoint& a, const HomogeneousPoint& b);

/// A point (q, [a]) of Bl_0(H^n): q lies on the right line [a].
struct BlowupPoint {
  QVec q;
  HomogeneousPoint line;

  /// Whether q = a lambda for some lambda, at tolerance `tol`.
  bool valid(double tol = 1e-6) const;
};

double blowup_distance(const BlowupPoint& a, const BlowupPoint& b);

/// Coordinate samples are drawn from this shell so every inverse stays tame.
inline constexpr double kShellMin = 0.2;
inline constexpr double kShellMax = 2.0;

// Projective space HP^n, n+1 charts p_i([a]) = (a_k a_i^-1)_{k != i}.
Atlas hp_atlas(int n);
Chart<HomogeneousPoint> hp_chart(int n, int i);

// Bl_0(H^n), n charts phi_i(q, [a]) = (a_1 a_i^-1, ..., q_i, ..., a_n a_i^-1).
Atlas blowup_atlas(int n);
Chart<BlowupPoint> blowup_chart(int n, int i);
/// phi_j o phi_i^-1 in closed form: slot i is b_j^-1, slot j is b_j b_i,
/// other slots b_k b_j^-1. Indices are 0-based.
QVec blowup_transition_closed_form(int i, int j, const QVec& b);
/// pi_1 o phi_i^-1 in closed form: (b_1 b_i, ..., b_i, ..., b_n b_i).
QVec blowup_pi1_closed_form(int i, const QVec& b);

QVec pi1(const BlowupPoint& p);
HomogeneousPoint pi2(const BlowupPoint& p);

/// H([w, q]) = ((q_k |q|^-2 conj(w))_k, [q]). Throws ExcludedPoint at [1, 0, ..., 0].
BlowupPoint map_H(const HomogeneousPoint& p);
/// Same map evaluated on an arbitrary (unnormalized) representative [w, q].
BlowupPoint map_H(const QVec& representative);
/// H^-1((b u), [b]) = [conj(u), b / |b|^2].
HomogeneousPoint map_H_inv(const BlowupPoint& p);

/// Chart-level model of the blow-up of a quaternionic manifold M at a point:
/// M is H^n with a random affine chart phi centred at the blown-up point,
/// and the composite phi o (phi^-1 o pi_1) o phi_i^-1 is compared with the
/// monomial form (q_1 q_i, ..., q_i, ..., q_n q_i).
struct ConnectedSumReport {
  int n = 0;
  int chart = 0;  // 0-based
  double max_residual = 0.0;
  int samples = 0;
  std::vector<RegularityVerdict> components;
  std::uint64_t seed = 0;

  bool all_regular() const;
};

QVec connected_sum_monomial(int i, const QVec& q);
ConnectedSumReport connected_sum_chart_check(int n, int i, int samples = 100,
                                             std::uint64_t seed = 1);

// Gr(2,4): points are 4x2 matrices of rank 2 modulo right GL(2, H).
// Chart P (a pair of rows) sends Z to the complementary rows of Z Z_P^-1,
// read row-major into H^4.
using GrassmannPoint = QMat;

Atlas grassmann24_atlas();
/// The transition from rows {1,2} to rows {3,4}, written entrywise as
/// [(a - b d^-1 c)^-1, (c - d b^-1 a)^-1; (b - a c^-1 d)^-1, (d - c a^-1 b)^-1].
/// Throws DomainError when abcd = 0 or a complement is degenerate.
QVec grassmann_transition(const QVec& abcd);
QFunctionN grassmann_component(int component);

struct GrassmannReport {
  std::vector<RegularityVerdict> components;
  bool any_neither() const;
  /// Largest min(left, right) residual over the Neither components.
  double failing_residual() const;
};

GrassmannReport grassmann_counterexample(int samples = 50, std::uint64_t seed = 1,
                                         const Tolerances& tol = {});

// Affine quotients H^n / Gamma.

struct CellSampler {
  std::function<QVec(Rng&)> sample;
  std::function<bool(const QVec&)> contains;
};

/// The box prod_h [lo, hi)^4 in real coordinates.
CellSampler box_cell(int n, double lo, double hi);

/// A reduced word in the generators; letter +g / -g stands for gen_g or its
/// inverse (1-based). Evaluated as l_1 o l_2 o ... o l_k.
using Word = std::vector<int>;
std::string word_string(const Word& w);
Affine evaluate_word(const std::vector<Affine>& generators, const Word& w);
std::vector<Word> reduced_words(int generators, int max_length);

struct FreenessReport {
  int max_length = 4;
  int words_checked = 0;
  int identity_words = 0;  // words skipped because they evaluate to the identity
  int points = 0;
  double min_displacement = 0.0;
  std::string closest_word;
};

struct QuotientAtlas {
  Atlas atlas;
  FreenessReport freeness;
};

/// Charts are the identity and each generator g, with phi_g = g on
/// representatives; transitions h o g^-1 are group elements. Throws
/// FreenessViolation if a nonidentity word of length <= max_length fixes a
/// sampled cell point or has its fixed point inside the cell.
QuotientAtlas affine_quotient_atlas(const std::vector<Affine>& generators, const CellSampler& cell,
                                    int max_length = 4, int cell_samples = 32,
                                    std::uint64_t seed = 1);

/// H / (Z + Zi + Zj + Zk).
std::vector<Affine> torus_generators();
QuotientAtlas torus_atlas(std::uint64_t seed = 1);

}  // namespace hyperslice
