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

#include "hyperslice/models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace hyperslice {

namespace {

Eigen::Index argmax_abs(const QVec& v) {
  Eigen::Index p = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (abs(v[i]) > abs(v[p])) p = i;
  }
  return p;
}

QVec scale_right(const QVec& v, const Quat& s) {
  QVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

// Smallest coordinate modulus admitted as a chart pivot on normalized points.
constexpr double kPivotFloor = 1e-9;

}  // namespace

HomogeneousPoint::HomogeneousPoint(QVec coords) {
  if (coords.size() == 0) throw DomainError("HomogeneousPoint: empty");
  const Eigen::Index p = argmax_abs(coords);
  if (!(abs(coords[p]) > 0.0)) throw DomainError("HomogeneousPoint: all coordinates vanish");
  coords_ = scale_right(coords, qinv(coords[p]));
  coords_[p] = Quat(1.0);
}

double line_distance(const HomogeneousPoint& a, const HomogeneousPoint& b) {
  if (a.size() != b.size()) throw DomainError("line_distance: length mismatch");
  const Eigen::Index p = argmax_abs(a.coords());
  if (!(abs(b[p]) > 0.0)) return std::numeric_limits<double>::infinity();
  return max_distance(scale_right(a.coords(), qinv(a[p])), scale_right(b.coords(), qinv(b[p])));
}

bool BlowupPoint::valid(double tol) const {
  if (q.size() != line.size()) return false;
  return right_proportional(q, line.coords(), tol).has_value();
}

double blowup_distance(const BlowupPoint& a, const BlowupPoint& b) {
  return std::max(max_distance(a.q, b.q), line_distance(a.line, b.line));
}

// Projective space.

Chart<HomogeneousPoint> hp_chart(int n, int i) {
  Chart<HomogeneousPoint> c;
  c.id = "U" + std::to_string(i);
  c.forward = [n, i](const HomogeneousPoint& p) {
    const Quat inv = qinv(p[i]);
    QVec b(n);
    for (int k = 0, s = 0; k <= n; ++k) {
      if (k != i) b[s++] = p[k] * inv;
    }
    return b;
  };
  c.backward = [n, i](const QVec& b) {
    QVec a(n + 1);
    for (int k = 0, s = 0; k <= n; ++k) a[k] = k == i ? Quat(1.0) : b[s++];
    return HomogeneousPoint(std::move(a));
  };
  c.contains = [i](const HomogeneousPoint& p) { return abs(p[i]) > kPivotFloor; };
  c.sample = [n](Rng& rng) { return rng.vector_in_shell(n, kShellMin, kShellMax); };
  return c;
}

Atlas hp_atlas(int n) {
  if (n < 1) throw DomainError("hp_atlas: n must be >= 1");
  std::vector<Chart<HomogeneousPoint>> charts;
  for (int i = 0; i <= n; ++i) charts.push_back(hp_chart(n, i));
  return Atlas::from_charts("HP^" + std::to_string(n), n, std::move(charts));
}

// Blow-up of H^n at the origin.

Chart<BlowupPoint> blowup_chart(int n, int i) {
  Chart<BlowupPoint> c;
  c.id = "V" + std::to_string(i + 1);
  c.forward = [n, i](const BlowupPoint& p) {
    const Quat inv = qinv(p.line[i]);
    QVec b(n);
    for (int k = 0; k < n; ++k) b[k] = k == i ? p.q[i] : p.line[k] * inv;
    return b;
  };
  c.backward = [n, i](const QVec& b) {
    QVec a = b;
    a[i] = Quat(1.0);
    return BlowupPoint{scale_right(a, b[i]), HomogeneousPoint(a)};
  };
  c.contains = [i](const BlowupPoint& p) { return abs(p.line[i]) > kPivotFloor; };
  c.sample = [n](Rng& rng) { return rng.vector_in_shell(n, kShellMin, kShellMax); };
  return c;
}

Atlas blowup_atlas(int n) {
  if (n < 2) throw DomainError("blowup_atlas: n must be >= 2");
  std::vector<Chart<BlowupPoint>> charts;
  for (int i = 0; i < n; ++i) charts.push_back(blowup_chart(n, i));
  return Atlas::from_charts("Bl0(H^" + std::to_string(n) + ")", n, std::move(charts));
}

QVec blowup_transition_closed_form(int i, int j, const QVec& b) {
  const Quat bj_inv = qinv(b[j]);
  QVec out(b.size());
  for (Eigen::Index k = 0; k < b.size(); ++k) {
    if (k == i) {
      out[k] = bj_inv;
    } else if (k == j) {
      out[k] = b[j] * b[i];
    } else {
      out[k] = b[k] * bj_inv;
    }
  }
  return out;
}

QVec blowup_pi1_closed_form(int i, const QVec& b) {
  QVec out(b.size());
  for (Eigen::Index k = 0; k < b.size(); ++k) out[k] = k == i ? b[i] : b[k] * b[i];
  return out;
}

QVec pi1(const BlowupPoint& p) { return p.q; }
HomogeneousPoint pi2(const BlowupPoint& p) { return p.line; }

BlowupPoint map_H(const QVec& representative) {
  const Eigen::Index n = representative.size() - 1;
  if (n < 1) throw DomainError("map_H: need at least two homogeneous coordinates");
  const Quat w = representative[0];
  const QVec q = representative.tail(n);
  double q2 = 0.0, scale = norm2(w);
  for (Eigen::Index k = 0; k < n; ++k) q2 += norm2(q[k]);
  scale = std::max(scale, q2);
  if (!(q2 > 1e-24 * scale)) throw ExcludedPoint("map_H: [1, 0, ..., 0] is excluded");
  const Quat factor = (1.0 / q2) * conj(w);
  QVec out(n);
  for (Eigen::Index k = 0; k < n; ++k) out[k] = q[k] * factor;
  return BlowupPoint{std::move(out), HomogeneousPoint(q)};
}

BlowupPoint map_H(const HomogeneousPoint& p) { return map_H(p.coords()); }

HomogeneousPoint map_H_inv(const BlowupPoint& p) {
  const QVec& b = p.line.coords();
  const Eigen::Index n = b.size();
  const Eigen::Index m = argmax_abs(b);
  const Quat u = qinv(b[m]) * p.q[m];
  double b2 = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) b2 += norm2(b[k]);
  QVec out(n + 1);
  out[0] = conj(u);
  for (Eigen::Index k = 0; k < n; ++k) out[k + 1] = b[k] / b2;
  return HomogeneousPoint(std::move(out));
}

// Connected sum.

QVec connected_sum_monomial(int i, const QVec& q) { return blowup_pi1_closed_form(i, q); }

bool ConnectedSumReport::all_regular() const {
  return std::all_of(components.begin(), components.end(),
                     [](const RegularityVerdict& v) { return is_regular(v.classification); });
}

ConnectedSumReport connected_sum_chart_check(int n, int i, int samples, std::uint64_t seed) {
  if (n < 2 || i < 0 || i >= n) throw DomainError("connected_sum_chart_check: bad n or i");
  Rng rng(derive_seed(seed, 0));
  // Chart phi of M = H^n centred at the blown-up point p0 = phi^-1(0).
  Affine phi = Affine::identity(n);
  for (;;) {
    try {
      phi = Affine(rng.matrix(n, n), rng.vector(n));
      if (detN(phi.linear()) > 0.1) break;
    } catch (const SingularMatrix&) {
    }
  }
  const Affine phi_inv = affine_invert(phi);
  const auto chart = blowup_chart(n, i);
  // psi = phi^-1 o pi_1 identifies Bl_0(H^n) near the exceptional set with Bl_p0(M).
  auto composite = [phi, phi_inv, chart](const QVec& q) {
    return phi(phi_inv(pi1(chart.backward(q))));
  };

  ConnectedSumReport report;
  report.n = n;
  report.chart = i;
  report.seed = seed;
  Rng pts(derive_seed(seed, 1));
  for (int s = 0; s < samples; ++s) {
    const QVec q = pts.vector_in_shell(n, kShellMin, kShellMax);
    report.max_residual =
        std::max(report.max_residual, max_distance(composite(q), connected_sum_monomial(i, q)));
    ++report.samples;
  }
  for (int c = 0; c < n; ++c) {
    QFunctionN f(n, [composite, c](const QVec& q) { return composite(q)[c]; });
    CircularSampler sampler;
    sampler.n = n;
    sampler.seed = derive_seed(seed, 2, c);
    report.components.push_back(
        classify(f, sampler, samples, {}, "component " + std::to_string(c + 1)));
  }
  return report;
}

// Grassmannian Gr(2,4).

namespace {

constexpr std::array<std::array<int, 2>, 6> kRowPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

std::array<int, 2> complement(const std::array<int, 2>& rows) {
  std::array<int, 2> out{};
  for (int r = 0, s = 0; r < 4; ++r) {
    if (r != rows[0] && r != rows[1]) out[static_cast<std::size_t>(s++)] = r;
  }
  return out;
}

QMat rows_of(const QMat& z, const std::array<int, 2>& rows) {
  QMat p(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) p(r, c) = z(rows[static_cast<std::size_t>(r)], c);
  return p;
}

// Pivot blocks below this (scale-free) Dieudonne determinant are treated as
// outside the chart; it keeps the transitions away from near-singular blocks.
constexpr double kGrassmannPivot = 1e-3;

Chart<GrassmannPoint> grassmann_chart(std::size_t index) {
  const auto rows = kRowPairs[index];
  const auto other = complement(rows);
  Chart<GrassmannPoint> c;
  c.id = "G" + std::to_string(rows[0] + 1) + std::to_string(rows[1] + 1);
  c.forward = [rows, other](const GrassmannPoint& z) {
    const QMat w = matmul(z, inverse(rows_of(z, rows)));
    QVec b(4);
    b << w(other[0], 0), w(other[0], 1), w(other[1], 0), w(other[1], 1);
    return b;
  };
  c.backward = [rows, other](const QVec& b) {
    GrassmannPoint z = QMat::Zero(4, 2);
    z(rows[0], 0) = Quat(1.0);
    z(rows[1], 1) = Quat(1.0);
    z(other[0], 0) = b[0];
    z(other[0], 1) = b[1];
    z(other[1], 0) = b[2];
    z(other[1], 1) = b[3];
    return z;
  };
  c.contains = [rows](const GrassmannPoint& z) {
    double scale = 0.0;
    for (Eigen::Index r = 0; r < z.rows(); ++r)
      for (Eigen::Index k = 0; k < z.cols(); ++k) scale = std::max(scale, abs(z(r, k)));
    return scale > 0.0 && detN(rows_of(z, rows)) > kGrassmannPivot * scale * scale;
  };
  c.sample = [](Rng& rng) { return rng.vector_in_shell(4, kShellMin, kShellMax); };
  return c;
}

}  // namespace

Atlas grassmann24_atlas() {
  std::vector<Chart<GrassmannPoint>> charts;
  for (std::size_t k = 0; k < kRowPairs.size(); ++k) charts.push_back(grassmann_chart(k));
  return Atlas::from_charts("Gr(2,4)", 4, std::move(charts));
}

QVec grassmann_transition(const QVec& abcd) {
  if (abcd.size() != 4) throw DomainError("grassmann_transition: expects 4 coordinates");
  const Quat a = abcd[0], b = abcd[1], c = abcd[2], d = abcd[3];
  double scale = 0.0;
  for (int k = 0; k < 4; ++k) scale = std::max(scale, abs(abcd[k]));
  for (int k = 0; k < 4; ++k) {
    if (!(abs(abcd[k]) > 1e-12 * scale)) throw DomainError("grassmann_transition: abcd = 0");
  }
  auto inv_complement = [scale](const Quat& s) {
    if (!(abs(s) > 1e-12 * scale)) throw DomainError("grassmann_transition: degenerate block");
    return qinv(s);
  };
  QVec out(4);
  out << inv_complement(a - b * qinv(d) * c), inv_complement(c - d * qinv(b) * a),
      inv_complement(b - a * qinv(c) * d), inv_complement(d - c * qinv(a) * b);
  return out;
}

QFunctionN grassmann_component(int component) {
  if (component < 0 || component > 3) throw DomainError("grassmann_component: 0..3");
  return QFunctionN(4, [component](const QVec& x) { return grassmann_transition(x)[component]; });
}

bool GrassmannReport::any_neither() const {
  return std::any_of(components.begin(), components.end(), [](const RegularityVerdict& v) {
    return v.classification == Regularity::Neither;
  });
}

double GrassmannReport::failing_residual() const {
  double worst = 0.0;
  for (const auto& v : components) {
    if (v.classification != Regularity::Neither) continue;
    worst = std::max(worst, std::min(v.left.max_residual, v.right.max_residual));
  }
  return worst;
}

GrassmannReport grassmann_counterexample(int samples, std::uint64_t seed, const Tolerances& tol) {
  static constexpr std::array<const char*, 4> kNames{"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
  GrassmannReport report;
  for (int c = 0; c < 4; ++c) {
    CircularSampler sampler;
    sampler.n = 4;
    sampler.seed = derive_seed(seed, c);
    report.components.push_back(
        classify(grassmann_component(c), sampler, samples, tol, kNames[static_cast<std::size_t>(c)]));
  }
  return report;
}

// Affine quotients.

CellSampler box_cell(int n, double lo, double hi) {
  CellSampler cell;
  cell.sample = [n, lo, hi](Rng& rng) {
    QVec q(n);
    for (int k = 0; k < n; ++k) q[k] = rng.quaternion(lo, hi);
    return q;
  };
  cell.contains = [lo, hi](const QVec& q) {
    for (Eigen::Index k = 0; k < q.size(); ++k) {
      for (double v : {q[k].w, q[k].x, q[k].y, q[k].z}) {
        if (!(v >= lo && v < hi)) return false;
      }
    }
    return true;
  };
  return cell;
}

std::string word_string(const Word& w) {
  if (w.empty()) return "id";
  std::string out;
  for (int letter : w) {
    if (!out.empty()) out += ' ';
    out += "g" + std::to_string(std::abs(letter));
    if (letter < 0) out += "^-1";
  }
  return out;
}

Affine evaluate_word(const std::vector<Affine>& generators, const Word& w) {
  if (generators.empty()) throw DomainError("evaluate_word: no generators");
  Affine out = Affine::identity(generators.front().dim());
  for (int letter : w) {
    const int g = std::abs(letter);
    if (g < 1 || g > static_cast<int>(generators.size())) {
      throw DomainError("evaluate_word: letter out of range");
    }
    const Affine& map = generators[static_cast<std::size_t>(g - 1)];
    out = affine_compose(out, letter > 0 ? map : affine_invert(map));
  }
  return out;
}

std::vector<Word> reduced_words(int generators, int max_length) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (int g = 1; g <= generators; ++g) {
        for (int letter : {g, -g}) {
          if (!w.empty() && w.back() == -letter) continue;
          Word x = w;
          x.push_back(letter);
          next.push_back(std::move(x));
        }
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

namespace {

bool is_identity(const Affine& f, double tol) {
  const Eigen::Index n = f.dim();
  for (Eigen::Index r = 0; r < n; ++r) {
    if (abs(f.offset()[r]) > tol) return false;
    for (Eigen::Index c = 0; c < n; ++c) {
      if (distance(f.linear()(r, c), Quat(r == c ? 1.0 : 0.0)) > tol) return false;
    }
  }
  return true;
}

std::vector<double> flatten(const QVec& q) {
  std::vector<double> out;
  for (Eigen::Index k = 0; k < q.size(); ++k) {
    out.insert(out.end(), {q[k].w, q[k].x, q[k].y, q[k].z});
  }
  return out;
}

}  // namespace

QuotientAtlas affine_quotient_atlas(const std::vector<Affine>& generators, const CellSampler& cell,
                                    int max_length, int cell_samples, std::uint64_t seed) {
  if (generators.empty()) throw DomainError("affine_quotient_atlas: no generators");
  const Eigen::Index n = generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != n) throw DomainError("affine_quotient_atlas: dimension mismatch");
  }

  Rng rng(derive_seed(seed, 0));
  std::vector<QVec> points;
  for (int s = 0; s < cell_samples; ++s) points.push_back(cell.sample(rng));

  constexpr double kMinDisplacement = 1e-6;
  FreenessReport freeness;
  freeness.max_length = max_length;
  freeness.points = cell_samples;
  freeness.min_displacement = std::numeric_limits<double>::infinity();
  for (const Word& w : reduced_words(static_cast<int>(generators.size()), max_length)) {
    const Affine map = evaluate_word(generators, w);
    if (is_identity(map, 1e-12)) {
      ++freeness.identity_words;
      continue;
    }
    ++freeness.words_checked;
    for (const QVec& q : points) {
      const double d = max_distance(map(q), q);
      if (d < freeness.min_displacement) {
        freeness.min_displacement = d;
        freeness.closest_word = word_string(w);
      }
      if (d < kMinDisplacement) {
        throw FreenessViolation("word " + word_string(w) + " fixes a cell point", word_string(w),
                                flatten(q));
      }
    }
    // A fixed point Q* = -B (A - I)^-1 inside the cell is a violation even
    // when no sample happens to land near it.
    QMat shifted = map.linear();
    for (Eigen::Index k = 0; k < n; ++k) shifted(k, k) -= Quat(1.0);
    if (is_invertible(shifted)) {
      const QVec fixed = -row_times(map.offset(), inverse(shifted));
      if (cell.contains(fixed)) {
        throw FreenessViolation("word " + word_string(w) + " has a fixed point in the cell",
                                word_string(w), flatten(fixed));
      }
    }
  }

  std::vector<Affine> maps{Affine::identity(n)};
  maps.insert(maps.end(), generators.begin(), generators.end());
  std::vector<Chart<QVec>> charts;
  for (std::size_t g = 0; g < maps.size(); ++g) {
    const Affine f = maps[g];
    const Affine f_inv = affine_invert(f);
    Chart<QVec> c;
    c.id = g == 0 ? "id" : "g" + std::to_string(g);
    c.forward = [f](const QVec& q) { return f(q); };
    c.backward = [f_inv](const QVec& b) { return f_inv(b); };
    c.contains = [](const QVec&) { return true; };
    c.sample = [f, sample = cell.sample](Rng& r) { return f(sample(r)); };
    charts.push_back(std::move(c));
  }
  return QuotientAtlas{Atlas::from_charts("H^" + std::to_string(n) + "/Gamma",
                                          static_cast<int>(n), std::move(charts)),
                       freeness};
}

std::vector<Affine> torus_generators() {
  std::vector<Affine> out;
  for (const Quat& t : {Quat(1.0), Quat::unit_i(), Quat::unit_j(), Quat::unit_k()}) {
    QVec b(1);
    b[0] = t;
    out.push_back(Affine::translation(b));
  }
  return out;
}

QuotientAtlas torus_atlas(std::uint64_t seed) {
  return affine_quotient_atlas(torus_generators(), box_cell(1, 0.0, 1.0), 4, 32, seed);
}

}  // namespace hyperslice
