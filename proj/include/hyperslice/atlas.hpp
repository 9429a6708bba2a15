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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "hyperslice/random.hpp"
#include "hyperslice/regularity.hpp"

namespace hyperslice {

/// A chart phi: U -> H^n on a manifold whose points have type Point.
template <typename Point>
struct Chart {
  std::string id;
  std::function<QVec(const Point&)> forward;
  std::function<Point(const QVec&)> backward;
  std::function<bool(const Point&)> contains;
  /// Well-conditioned coordinates in phi(U).
  std::function<QVec(Rng&)> sample;
};

/// max_h |a_h - b_h|.
double max_distance(const QVec& a, const QVec& b);

/// A finite atlas, reduced to what verification needs: coordinate
/// transitions phi_j o phi_i^-1 and per-chart samplers. The point type is
/// erased when the atlas is built.
class Atlas {
 public:
  using Transition = std::function<QVec(const QVec&)>;

  template <typename Point>
  static Atlas from_charts(std::string name, int dim, std::vector<Chart<Point>> charts);

  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::string& chart_id(int i) const { return entries_.at(static_cast<std::size_t>(i)).id; }

  /// Whether phi_i^-1(b) lies in U_j.
  bool in_overlap(int i, int j, const QVec& b) const;
  /// phi_j o phi_i^-1 (or an override). Throws DomainError outside the overlap.
  QVec transition(int i, int j, const QVec& b) const;
  /// |phi_i(phi_i^-1(b)) - b|.
  double chart_roundtrip(int i, const QVec& b) const;
  QVec sample(int i, Rng& rng) const;

  /// Replaces the transition i -> j; used to build deliberately broken atlases.
  void override_transition(int i, int j, Transition t);

 private:
  struct Entry {
    std::string id;
    std::function<bool(int, const QVec&)> lands_in;  // (j, b) -> phi_i^-1(b) in U_j
    std::function<QVec(int, const QVec&)> to_chart;  // (j, b) -> phi_j(phi_i^-1(b))
    std::function<QVec(Rng&)> sample;
  };

  std::string name_;
  int dim_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::vector<Transition>> overrides_;
};

template <typename Point>
Atlas Atlas::from_charts(std::string name, int dim, std::vector<Chart<Point>> charts) {
  Atlas a;
  a.name_ = std::move(name);
  a.dim_ = dim;
  auto shared = std::make_shared<const std::vector<Chart<Point>>>(std::move(charts));
  const std::size_t count = shared->size();
  for (std::size_t i = 0; i < count; ++i) {
    Entry e;
    e.id = (*shared)[i].id;
    e.lands_in = [shared, i](int j, const QVec& b) {
      const Point p = (*shared)[i].backward(b);
      return (*shared)[static_cast<std::size_t>(j)].contains(p);
    };
    e.to_chart = [shared, i](int j, const QVec& b) {
      const Point p = (*shared)[i].backward(b);
      const auto& target = (*shared)[static_cast<std::size_t>(j)];
      if (!target.contains(p)) throw DomainError("point outside chart " + target.id);
      return target.forward(p);
    };
    e.sample = (*shared)[i].sample;
    a.entries_.push_back(std::move(e));
  }
  a.overrides_.assign(count, std::vector<Transition>(count));
  return a;
}

struct PairResidual {
  int from = 0, to = 0;
  double max_residual = 0.0;  // |phi_ji(phi_ij(b)) - b|
  int samples = 0;
};

struct TripleResidual {
  int i = 0, j = 0, k = 0;
  double max_residual = 0.0;  // |phi_jk(phi_ij(b)) - phi_ik(b)|
  int samples = 0;
};

struct TransitionVerdict {
  int from = 0, to = 0, component = 0;
  RegularityVerdict verdict;
};

struct AtlasReport {
  std::string atlas;
  std::vector<double> chart_roundtrip;
  std::vector<PairResidual> pairs;
  std::vector<TripleResidual> triples;
  std::vector<TransitionVerdict> transitions;
  std::uint64_t seed = 0;
  Tolerances tolerances;
  double identity_tol = 1e-9;

  double max_pair_residual() const;
  double max_triple_residual() const;
  double max_roundtrip() const;
  bool consistent() const;  // every residual under identity_tol
  bool all_regular() const;
  bool any_neither() const;
};

struct VerifyOptions {
  int samples = 200;           // per pair and per triple
  int classify_samples = 50;   // per transition component
  std::uint64_t seed = 1;
  Tolerances tolerances;
  double identity_tol = 1e-9;
  bool triples = true;
};

AtlasReport verify_atlas(const Atlas& atlas, const VerifyOptions& options);

}  // namespace hyperslice
