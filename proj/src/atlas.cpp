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

#include "hyperslice/atlas.hpp"

#include <algorithm>

namespace hyperslice {

double max_distance(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DomainError("max_distance: length mismatch");
  double worst = 0.0;
  for (Eigen::Index h = 0; h < a.size(); ++h) worst = std::max(worst, distance(a[h], b[h]));
  return worst;
}

bool Atlas::in_overlap(int i, int j, const QVec& b) const {
  try {
    return entries_.at(static_cast<std::size_t>(i)).lands_in(j, b);
  } catch (const Error&) {
    return false;
  }
}

QVec Atlas::transition(int i, int j, const QVec& b) const {
  const auto& t = overrides_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
  if (t) return t(b);
  return entries_.at(static_cast<std::size_t>(i)).to_chart(j, b);
}

double Atlas::chart_roundtrip(int i, const QVec& b) const {
  return max_distance(entries_.at(static_cast<std::size_t>(i)).to_chart(i, b), b);
}

QVec Atlas::sample(int i, Rng& rng) const {
  return entries_.at(static_cast<std::size_t>(i)).sample(rng);
}

void Atlas::override_transition(int i, int j, Transition t) {
  overrides_.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)) = std::move(t);
}

double AtlasReport::max_pair_residual() const {
  double m = 0.0;
  for (const auto& p : pairs) m = std::max(m, p.max_residual);
  return m;
}

double AtlasReport::max_triple_residual() const {
  double m = 0.0;
  for (const auto& t : triples) m = std::max(m, t.max_residual);
  return m;
}

double AtlasReport::max_roundtrip() const {
  double m = 0.0;
  for (double r : chart_roundtrip) m = std::max(m, r);
  return m;
}

bool AtlasReport::consistent() const {
  return max_pair_residual() < identity_tol && max_triple_residual() < identity_tol &&
         max_roundtrip() < identity_tol;
}

bool AtlasReport::all_regular() const {
  return std::all_of(transitions.begin(), transitions.end(), [](const TransitionVerdict& t) {
    return is_regular(t.verdict.classification);
  });
}

bool AtlasReport::any_neither() const { return !all_regular(); }

namespace {

// Stream labels for derive_seed.
enum : std::uint64_t { kPairStream = 1, kTripleStream = 2, kClassifyStream = 3, kChartStream = 4 };

// Draws a chart-i sample whose preimage also lies in every chart of `others`.
// Returns false if the attempt budget runs out.
bool overlap_sample(const Atlas& atlas, int i, std::initializer_list<int> others, Rng& rng,
                    QVec& out) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    QVec b = atlas.sample(i, rng);
    if (std::all_of(others.begin(), others.end(),
                    [&](int j) { return atlas.in_overlap(i, j, b); })) {
      out = std::move(b);
      return true;
    }
  }
  return false;
}

}  // namespace

AtlasReport verify_atlas(const Atlas& atlas, const VerifyOptions& options) {
  AtlasReport report;
  report.atlas = atlas.name();
  report.seed = options.seed;
  report.tolerances = options.tolerances;
  report.identity_tol = options.identity_tol;
  const int m = atlas.size();

  for (int i = 0; i < m; ++i) {
    Rng rng(derive_seed(options.seed, kChartStream, i));
    double worst = 0.0;
    for (int s = 0; s < options.samples; ++s) {
      worst = std::max(worst, atlas.chart_roundtrip(i, atlas.sample(i, rng)));
    }
    report.chart_roundtrip.push_back(worst);
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      Rng rng(derive_seed(options.seed, kPairStream, i, j));
      PairResidual pr{i, j, 0.0, 0};
      QVec b;
      for (int s = 0; s < options.samples; ++s) {
        if (!overlap_sample(atlas, i, {j}, rng, b)) break;
        const QVec there = atlas.transition(i, j, b);
        pr.max_residual = std::max(pr.max_residual, max_distance(atlas.transition(j, i, there), b));
        ++pr.samples;
      }
      report.pairs.push_back(pr);
    }
  }

  if (options.triples) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) {
          if (i == j || j == k || i == k) continue;
          Rng rng(derive_seed(options.seed, kTripleStream, i, j, k));
          TripleResidual tr{i, j, k, 0.0, 0};
          QVec b;
          for (int s = 0; s < options.samples; ++s) {
            if (!overlap_sample(atlas, i, {j, k}, rng, b)) break;
            const QVec via = atlas.transition(j, k, atlas.transition(i, j, b));
            tr.max_residual = std::max(tr.max_residual, max_distance(via, atlas.transition(i, k, b)));
            ++tr.samples;
          }
          report.triples.push_back(tr);
        }
      }
    }
  }

  const int n = atlas.dim();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      for (int c = 0; c < n; ++c) {
        QFunctionN f(
            n, [atlas, i, j, c](const QVec& b) { return atlas.transition(i, j, b)[c]; },
            [atlas, i, j](const QVec& b) { return atlas.in_overlap(i, j, b); });
        CircularSampler sampler;
        sampler.n = n;
        sampler.seed = derive_seed(options.seed, kClassifyStream, i, j, c);
        const std::string name = atlas.chart_id(i) + "->" + atlas.chart_id(j) + "[" +
                                 std::to_string(c + 1) + "]";
        report.transitions.push_back(
            {i, j, c, classify(f, sampler, options.classify_samples, options.tolerances, name)});
      }
    }
  }
  return report;
}

}  // namespace hyperslice
