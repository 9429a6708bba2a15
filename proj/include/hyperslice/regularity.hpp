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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperslice/random.hpp"
#include "hyperslice/stem.hpp"

namespace hyperslice {

/// Draws points of Omega_D for D = { r_min <= |z_h| <= r_max, |y_h| >= margin }
/// together with a tuple of imaginary units. With `shared_unit` every
/// coordinate uses the same unit, i.e. the sample stays in one slice L_J.
struct CircularSampler {
  int n = 1;
  std::uint64_t seed = 1;
  double r_min = 0.2;
  double r_max = 2.0;
  double margin = 1e-3;
  bool shared_unit = false;
};

struct CircularSample {
  ComplexPoint z;
  std::vector<Unit> units;

  QVec point() const { return slice_point(z, units); }
};

class SampleStream {
 public:
  explicit SampleStream(const CircularSampler& cfg);
  CircularSample next();

 private:
  CircularSampler cfg_;
  Rng rng_;
};

struct Tolerances {
  double step = 1e-5;    // central-difference step
  double tol_ok = 1e-5;  // accept if residual <= tol_ok * (1 + |F(z)|)
  double tol_bad = 1e-2; // reject once any residual >= tol_bad
};

/// 1/2 (dF/dx_h + J_h dF/dy_h) (left) or with J^r_h (right), by central
/// differences of `stem` around z.
MultivectorHQ dbar(const StemFunction& stem, Side side, int h, const ComplexPoint& z,
                   double step = 1e-5);

/// |dbar| of an explicit stem.
double dbar_residual(const StemFunction& stem, Side side, int h, const ComplexPoint& z,
                     double step = 1e-5);
/// |dbar| of the stem recovered from f with the units J. Requires
/// |y_h| > 2 step for every h.
double dbar_residual(const QFunctionN& f, Side side, int h, const ComplexPoint& z,
                     std::span<const Unit> units, double step = 1e-5);

enum class Regularity { LeftRegular, RightRegular, Both, Neither };

const char* to_string(Regularity r);
std::optional<Regularity> parse_regularity(const std::string& s);

/// Regular on at least one side.
inline bool is_regular(Regularity r) { return r != Regularity::Neither; }
inline bool is_left_regular(Regularity r) {
  return r == Regularity::LeftRegular || r == Regularity::Both;
}
inline bool is_right_regular(Regularity r) {
  return r == Regularity::RightRegular || r == Regularity::Both;
}

struct SideReport {
  double max_residual = 0.0;
  bool accepted = false;       // every sample under its accept threshold
  bool rejected = false;       // some sample at or above tol_bad
  bool indeterminate = false;  // neither of the above
  QVec witness;                // sample with the largest residual
  int witness_h = 0;
};

struct RegularityVerdict {
  std::string component;
  Regularity classification = Regularity::Neither;
  SideReport left;
  SideReport right;
  int samples = 0;         // samples that evaluated cleanly
  int failed_samples = 0;  // samples dropped because evaluation threw
  std::uint64_t seed = 0;
  Tolerances tolerances;
};

/// Residual-based classification of f over `samples` draws of `sampler`.
/// Samples whose stencil leaves the domain (or divides by zero) are counted
/// in failed_samples and replaced, up to 20 * samples attempts.
RegularityVerdict classify(const QFunctionN& f, const CircularSampler& sampler, int samples,
                           const Tolerances& tol = {}, std::string component = {});

/// Max over samples and h of the violation of the intrinsic mirror rule
/// F_K(.., conj z_h, ..) = +-F_K(z). Throws DomainError if a mirror point
/// leaves the domain.
double check_intrinsic(const StemFunction& f, int samples, std::uint64_t seed);

/// One-variable check on the slice L_I: max |1/2 (d/dx + I d/dy) f(x + y I)|
/// over the sampled (x, y).
double check_one_var_direct(const QFunctionN& f, const Unit& unit,
                            const CircularSampler& sampler, int samples, double step = 1e-5);

}  // namespace hyperslice
