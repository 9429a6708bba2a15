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

#include "hyperslice/regularity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace hyperslice {

SampleStream::SampleStream(const CircularSampler& cfg) : cfg_(cfg), rng_(cfg.seed) {
  if (cfg.n < 1) throw DomainError("sampler dimension must be positive");
  if (!(cfg.r_min > cfg.margin) || !(cfg.r_max >= cfg.r_min)) {
    throw DomainError("sampler radii must satisfy margin < r_min <= r_max");
  }
}

CircularSample SampleStream::next() {
  CircularSample s{ComplexPoint(cfg_.n), {}};
  for (int h = 0; h < cfg_.n; ++h) {
    const double r = rng_.uniform(cfg_.r_min, cfg_.r_max);
    const double theta_min = std::asin(std::min(1.0, cfg_.margin / r));
    const double theta = rng_.uniform(theta_min, std::numbers::pi - theta_min);
    s.z[h] = std::polar(r, theta);
  }
  if (cfg_.shared_unit) {
    s.units.assign(static_cast<std::size_t>(cfg_.n), rng_.unit());
  } else {
    for (int h = 0; h < cfg_.n; ++h) s.units.push_back(rng_.unit());
  }
  return s;
}

namespace {

MultivectorHQ apply_structure(Side side, int h, const MultivectorHQ& m) {
  return side == Side::Left ? jh_apply(h, m) : jhr_apply(h, m);
}

/// 1/2 (dF/dx + J dF/dy) from the four stencil values.
MultivectorHQ dbar_from_stencil(Side side, int h, const MultivectorHQ& x_plus,
                                const MultivectorHQ& x_minus, const MultivectorHQ& y_plus,
                                const MultivectorHQ& y_minus, double step) {
  const double inv = 1.0 / (2.0 * step);
  const MultivectorHQ dx = (x_plus - x_minus) * inv;
  const MultivectorHQ dy = (y_plus - y_minus) * inv;
  return (dx + apply_structure(side, h, dy)) * 0.5;
}

std::array<ComplexPoint, 4> stencil(const ComplexPoint& z, int h, double step) {
  std::array<ComplexPoint, 4> pts{z, z, z, z};
  pts[0][h - 1] += std::complex<double>(step, 0.0);
  pts[1][h - 1] -= std::complex<double>(step, 0.0);
  pts[2][h - 1] += std::complex<double>(0.0, step);
  pts[3][h - 1] -= std::complex<double>(0.0, step);
  return pts;
}

void check_structure_index(int n, int h) {
  if (h < 1 || h > n) throw DomainError("dbar: variable index out of range");
}

}  // namespace

MultivectorHQ dbar(const StemFunction& stem, Side side, int h, const ComplexPoint& z,
                   double step) {
  check_structure_index(stem.dim(), h);
  const auto pts = stencil(z, h, step);
  return dbar_from_stencil(side, h, stem(pts[0]), stem(pts[1]), stem(pts[2]), stem(pts[3]), step);
}

double dbar_residual(const StemFunction& stem, Side side, int h, const ComplexPoint& z,
                     double step) {
  return norm(dbar(stem, side, h, z, step));
}

double dbar_residual(const QFunctionN& f, Side side, int h, const ComplexPoint& z,
                     std::span<const Unit> units, double step) {
  check_structure_index(f.dim(), h);
  for (Eigen::Index k = 0; k < z.size(); ++k) {
    if (!(std::abs(z[k].imag()) > 2.0 * step)) {
      throw RealSliceError("dbar: point within two steps of a real slice");
    }
  }
  const auto pts = stencil(z, h, step);
  std::array<MultivectorHQ, 4> stems{MultivectorHQ(f.dim()), MultivectorHQ(f.dim()),
                                     MultivectorHQ(f.dim()), MultivectorHQ(f.dim())};
  for (std::size_t i = 0; i < 4; ++i) stems[i] = recover_stem(f, pts[i], units, side, step);
  return norm(dbar_from_stencil(side, h, stems[0], stems[1], stems[2], stems[3], step));
}

const char* to_string(Regularity r) {
  switch (r) {
    case Regularity::LeftRegular: return "LeftRegular";
    case Regularity::RightRegular: return "RightRegular";
    case Regularity::Both: return "Both";
    case Regularity::Neither: return "Neither";
  }
  return "Neither";
}

std::optional<Regularity> parse_regularity(const std::string& s) {
  for (Regularity r : {Regularity::LeftRegular, Regularity::RightRegular, Regularity::Both,
                       Regularity::Neither}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

RegularityVerdict classify(const QFunctionN& f, const CircularSampler& sampler, int samples,
                           const Tolerances& tol, std::string component) {
  if (sampler.n != f.dim()) throw DomainError("classify: sampler dimension mismatch");
  if (!(tol.tol_ok < tol.tol_bad)) throw DomainError("classify: need tol_ok < tol_bad");

  RegularityVerdict v;
  v.component = std::move(component);
  v.seed = sampler.seed;
  v.tolerances = tol;

  CircularSampler cfg = sampler;
  cfg.margin = std::max(cfg.margin, 2.0 * tol.step);
  SampleStream stream(cfg);

  const int n = f.dim();
  bool left_ok = true, right_ok = true;
  const int max_attempts = 20 * std::max(samples, 1);
  for (int attempt = 0; attempt < max_attempts && v.samples < samples; ++attempt) {
    const CircularSample s = stream.next();
    std::array<double, 2> worst{0.0, 0.0};
    std::array<int, 2> worst_h{1, 1};
    double scale = 0.0;
    try {
      scale = norm(slice_moments(f, s.z, s.units, tol.step));
      for (int h = 1; h <= n; ++h) {
        const auto pts = stencil(s.z, h, tol.step);
        std::array<MultivectorHQ, 4> moments{MultivectorHQ(n), MultivectorHQ(n),
                                             MultivectorHQ(n), MultivectorHQ(n)};
        for (std::size_t i = 0; i < 4; ++i) {
          moments[i] = slice_moments(f, pts[i], s.units, tol.step);
        }
        for (Side side : {Side::Left, Side::Right}) {
          std::array<MultivectorHQ, 4> stems{MultivectorHQ(n), MultivectorHQ(n),
                                             MultivectorHQ(n), MultivectorHQ(n)};
          for (std::size_t i = 0; i < 4; ++i) {
            stems[i] = stem_from_moments(moments[i], s.units, side);
          }
          const double r = norm(dbar_from_stencil(side, h, stems[0], stems[1], stems[2],
                                                  stems[3], tol.step));
          const std::size_t idx = side == Side::Left ? 0 : 1;
          if (!std::isfinite(r)) throw ZeroDivision("non-finite residual");
          if (r > worst[idx]) {
            worst[idx] = r;
            worst_h[idx] = h;
          }
        }
      }
    } catch (const Error&) {
      ++v.failed_samples;
      continue;
    }
    ++v.samples;
    const double accept = tol.tol_ok * (1.0 + scale);
    for (std::size_t idx = 0; idx < 2; ++idx) {
      SideReport& rep = idx == 0 ? v.left : v.right;
      bool& ok = idx == 0 ? left_ok : right_ok;
      if (worst[idx] > accept) ok = false;
      if (worst[idx] >= tol.tol_bad) rep.rejected = true;
      if (rep.witness.size() == 0 || worst[idx] > rep.max_residual) {
        rep.max_residual = worst[idx];
        rep.witness = s.point();
        rep.witness_h = worst_h[idx];
      }
    }
  }

  v.left.accepted = left_ok && v.samples > 0;
  v.right.accepted = right_ok && v.samples > 0;
  v.left.indeterminate = !v.left.accepted && !v.left.rejected;
  v.right.indeterminate = !v.right.accepted && !v.right.rejected;
  if (v.left.accepted && v.right.accepted) {
    v.classification = Regularity::Both;
  } else if (v.left.accepted) {
    v.classification = Regularity::LeftRegular;
  } else if (v.right.accepted) {
    v.classification = Regularity::RightRegular;
  } else {
    v.classification = Regularity::Neither;
  }
  return v;
}

double check_intrinsic(const StemFunction& f, int samples, std::uint64_t seed) {
  CircularSampler cfg;
  cfg.n = f.dim();
  cfg.seed = seed;
  SampleStream stream(cfg);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const CircularSample sample = stream.next();
    if (!f.contains(sample.z)) continue;
    const MultivectorHQ base = f(sample.z);
    for (int h = 1; h <= f.dim(); ++h) {
      const ComplexPoint mirror = conjugate_variable(sample.z, h);
      if (!f.contains(mirror)) throw DomainError("mirror point outside the stem domain");
      const MultivectorHQ m = f(mirror);
      for (std::size_t k = 0; k < m.size(); ++k) {
        const bool odd = (k & variable_bit(h)) != 0;
        const Quat expected = odd ? -base[k] : base[k];
        worst = std::max(worst, distance(m[k], expected));
      }
    }
  }
  return worst;
}

double check_one_var_direct(const QFunctionN& f, const Unit& unit,
                            const CircularSampler& sampler, int samples, double step) {
  if (f.dim() != 1) throw DomainError("check_one_var_direct: one variable only");
  CircularSampler cfg = sampler;
  cfg.n = 1;
  SampleStream stream(cfg);
  const Quat i_unit = unit.value();
  auto at = [&](double x, double y) {
    QVec q(1);
    q[0] = Quat(x) + y * i_unit;
    return f(q);
  };
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto z = stream.next().z[0];
    const double x = z.real(), y = z.imag();
    const Quat dx = (at(x + step, y) - at(x - step, y)) / (2.0 * step);
    const Quat dy = (at(x, y + step) - at(x, y - step)) / (2.0 * step);
    worst = std::max(worst, abs(0.5 * (dx + i_unit * dy)));
  }
  return worst;
}

}  // namespace hyperslice
