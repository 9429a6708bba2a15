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

#include "hyperslice/stem.hpp"

#include <bit>
#include <cmath>

namespace hyperslice {

const char* to_string(Side side) { return side == Side::Left ? "left" : "right"; }

StemFunction::StemFunction(int n, Evaluator eval, Domain domain)
    : n_(n), eval_(std::move(eval)), domain_(std::move(domain)) {
  if (n < 1 || n > kMaxCliffordDim) throw DomainError("stem dimension out of range");
}

bool StemFunction::contains(const ComplexPoint& z) const {
  return z.size() == n_ && (!domain_ || domain_(z));
}

MultivectorHQ StemFunction::operator()(const ComplexPoint& z) const {
  if (!contains(z)) throw DomainError("stem evaluated outside its domain");
  return eval_(z);
}

namespace {
StemFunction::Domain both_domains(const StemFunction& f, const StemFunction& g) {
  if (f.dim() != g.dim()) throw DomainError("stem dimension mismatch");
  return [f, g](const ComplexPoint& z) { return f.contains(z) && g.contains(z); };
}
}  // namespace

StemFunction operator+(const StemFunction& f, const StemFunction& g) {
  return StemFunction(
      f.dim(), [f, g](const ComplexPoint& z) { return f(z) + g(z); }, both_domains(f, g));
}

StemFunction operator*(const StemFunction& f, const StemFunction& g) {
  return StemFunction(
      f.dim(), [f, g](const ComplexPoint& z) { return f(z) * g(z); }, both_domains(f, g));
}

StemFunction operator*(const StemFunction& f, const Quat& q) {
  return StemFunction(
      f.dim(), [f, q](const ComplexPoint& z) { return f(z) * q; },
      [f](const ComplexPoint& z) { return f.contains(z); });
}

StemFunction operator*(const Quat& q, const StemFunction& f) {
  return StemFunction(
      f.dim(), [f, q](const ComplexPoint& z) { return q * f(z); },
      [f](const ComplexPoint& z) { return f.contains(z); });
}

QFunctionN::QFunctionN(int n, Evaluator eval, Domain domain)
    : n_(n), eval_(std::move(eval)), domain_(std::move(domain)) {
  if (n < 1) throw DomainError("function dimension must be positive");
}

bool QFunctionN::contains(const QVec& q) const {
  return q.size() == n_ && (!domain_ || domain_(q));
}

Quat QFunctionN::operator()(const QVec& q) const {
  if (!contains(q)) throw DomainError("function evaluated outside its domain");
  return eval_(q);
}

Quat left_blade_unit(std::span<const Unit> units, BladeMask k) {
  return ordered_product(units, k);
}

Quat right_blade_unit(std::span<const Unit> units, BladeMask k) {
  const int s = std::popcount(k);
  const double sign = ((s * (s - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * reversed_product(units, k);
}

Quat blade_unit(std::span<const Unit> units, BladeMask k, Side side) {
  return side == Side::Left ? left_blade_unit(units, k) : right_blade_unit(units, k);
}

QVec slice_point(const ComplexPoint& z, std::span<const Unit> units) {
  if (static_cast<std::size_t>(z.size()) != units.size()) {
    throw DomainError("slice_point: unit count does not match dimension");
  }
  QVec q(z.size());
  for (Eigen::Index h = 0; h < z.size(); ++h) {
    q[h] = Quat(z[h].real()) + z[h].imag() * units[static_cast<std::size_t>(h)].value();
  }
  return q;
}

namespace {

struct SlicedInput {
  ComplexPoint z;
  std::vector<Unit> units;
};

SlicedInput decompose(const QVec& q) {
  SlicedInput out{ComplexPoint(q.size()), {}};
  out.units.reserve(static_cast<std::size_t>(q.size()));
  for (Eigen::Index h = 0; h < q.size(); ++h) {
    const auto d = slice_decompose(q[h]);
    out.z[h] = {d.x, d.y};
    out.units.push_back(d.unit);
  }
  return out;
}

}  // namespace

Quat induce(const StemFunction& f, const QVec& q, Side side) {
  if (q.size() != f.dim()) throw DomainError("induce: dimension mismatch");
  const SlicedInput s = decompose(q);
  const MultivectorHQ stem = f(s.z);
  Quat out;
  for (std::size_t k = 0; k < stem.size(); ++k) {
    const Quat unit = blade_unit(s.units, static_cast<BladeMask>(k), side);
    out += side == Side::Left ? unit * stem[k] : stem[k] * unit;
  }
  return out;
}

Quat induce_left(const StemFunction& f, const QVec& q) { return induce(f, q, Side::Left); }
Quat induce_right(const StemFunction& f, const QVec& q) { return induce(f, q, Side::Right); }

QFunctionN induced_function(const StemFunction& f, Side side) {
  return QFunctionN(
      f.dim(), [f, side](const QVec& q) { return induce(f, q, side); },
      [f](const QVec& q) {
        const SlicedInput s = decompose(q);
        return f.contains(s.z);
      });
}

MultivectorHQ slice_moments(const QFunctionN& f, const ComplexPoint& z,
                            std::span<const Unit> units, double margin) {
  const int n = f.dim();
  if (z.size() != n || units.size() != static_cast<std::size_t>(n)) {
    throw DomainError("slice_moments: dimension mismatch");
  }
  for (int h = 0; h < n; ++h) {
    if (!(std::abs(z[h].imag()) >= margin)) {
      throw RealSliceError("stem recovery too close to the real slice of variable " +
                           std::to_string(h + 1));
    }
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<Quat> values(count);
  // Bit h of eps set means eps_{h+1} = -1.
  for (std::size_t eps = 0; eps < count; ++eps) {
    QVec q(n);
    for (int h = 0; h < n; ++h) {
      const double sign = (eps & (std::size_t{1} << h)) ? -1.0 : 1.0;
      q[h] = Quat(z[h].real()) + (sign * z[h].imag()) * units[static_cast<std::size_t>(h)].value();
    }
    values[eps] = f(q);
  }
  MultivectorHQ g(n);
  const double inv = 1.0 / static_cast<double>(count);
  for (std::size_t k = 0; k < count; ++k) {
    Quat acc;
    for (std::size_t eps = 0; eps < count; ++eps) {
      const bool negative = std::popcount(static_cast<unsigned>(k & eps)) % 2 == 1;
      acc += negative ? -values[eps] : values[eps];
    }
    g[static_cast<BladeMask>(k)] = acc * inv;
  }
  return g;
}

MultivectorHQ stem_from_moments(const MultivectorHQ& moments, std::span<const Unit> units,
                                Side side) {
  MultivectorHQ f(moments.dim());
  for (std::size_t k = 0; k < moments.size(); ++k) {
    // Blade units have modulus 1, so the inverse is the conjugate.
    const Quat unit_inv = conj(blade_unit(units, static_cast<BladeMask>(k), side));
    f[static_cast<BladeMask>(k)] =
        side == Side::Left ? unit_inv * moments[k] : moments[k] * unit_inv;
  }
  return f;
}

MultivectorHQ recover_stem(const QFunctionN& f, const ComplexPoint& z,
                           std::span<const Unit> units, Side side, double margin) {
  return stem_from_moments(slice_moments(f, z, units, margin), units, side);
}

MultivectorHQ recover_stem_left(const QFunctionN& f, const ComplexPoint& z,
                                std::span<const Unit> units, double margin) {
  return recover_stem(f, z, units, Side::Left, margin);
}

MultivectorHQ recover_stem_right(const QFunctionN& f, const ComplexPoint& z,
                                 std::span<const Unit> units, double margin) {
  return recover_stem(f, z, units, Side::Right, margin);
}

ComplexPoint conjugate_variable(const ComplexPoint& z, int h) {
  ComplexPoint out = z;
  out[h - 1] = std::conj(out[h - 1]);
  return out;
}

namespace {
void check_variable(int n, int h) {
  if (h < 1 || h > n) throw DomainError("variable index out of range");
}

/// Embeds a complex number w of variable h as Re w + e_h Im w.
MultivectorHQ embed(int n, int h, std::complex<double> w) {
  MultivectorHQ m(n);
  m[0] = Quat(w.real());
  m[variable_bit(h)] = Quat(w.imag());
  return m;
}
}  // namespace

StemFunction variable_stem(int n, int h) {
  check_variable(n, h);
  return StemFunction(n, [n, h](const ComplexPoint& z) { return embed(n, h, z[h - 1]); });
}

StemFunction power_stem(int n, int h, int power) {
  check_variable(n, h);
  StemFunction::Domain domain;
  if (power < 0) {
    domain = [h](const ComplexPoint& z) { return std::abs(z[h - 1]) > 0.0; };
  }
  return StemFunction(
      n,
      [n, h, power](const ComplexPoint& z) {
        std::complex<double> w(1.0);
        const std::complex<double> base = power < 0 ? 1.0 / z[h - 1] : z[h - 1];
        for (int i = 0; i < std::abs(power); ++i) w *= base;
        return embed(n, h, w);
      },
      domain);
}

StemFunction conjugate_stem(int n, int h) {
  check_variable(n, h);
  return StemFunction(n,
                      [n, h](const ComplexPoint& z) { return embed(n, h, std::conj(z[h - 1])); });
}

StemFunction constant_stem(int n, const Quat& q) {
  return StemFunction(n, [n, q](const ComplexPoint&) { return MultivectorHQ::scalar(n, q); });
}

StemFunction monomial_stem(std::span<const int> powers, const Quat& coeff, Side side) {
  const int n = static_cast<int>(powers.size());
  StemFunction acc = constant_stem(n, Quat(1.0));
  if (side == Side::Left) {
    for (int h = 1; h <= n; ++h) {
      if (powers[h - 1] != 0) acc = acc * power_stem(n, h, powers[h - 1]);
    }
    return acc * coeff;
  }
  for (int h = n; h >= 1; --h) {
    if (powers[h - 1] != 0) acc = acc * power_stem(n, h, powers[h - 1]);
  }
  return coeff * acc;
}

StemFunction affine_component_stem(const Affine& map, int col) {
  const int n = static_cast<int>(map.dim());
  if (col < 0 || col >= n) throw DomainError("affine component out of range");
  StemFunction acc = constant_stem(n, map.offset()[col]);
  for (int k = 1; k <= n; ++k) {
    acc = acc + variable_stem(n, k) * map.linear()(k - 1, col);
  }
  return acc;
}

}  // namespace hyperslice
