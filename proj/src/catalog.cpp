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

#include "hyperslice/catalog.hpp"

#include <array>
#include <charconv>

#include "hyperslice/random.hpp"

namespace hyperslice {

QFunctionN CatalogEntry::function() const {
  return expression_function(parse(expression, n), n);
}

std::string quaternion_literal(const Quat& q) {
  auto real = [](double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  };
  auto term = [&](double v, const char* unit) {
    std::string s = v < 0 ? " - " : " + ";
    return s + real(std::abs(v)) + "*" + unit;
  };
  std::string out = "(";
  out += q.w < 0 ? "-" + real(-q.w) : real(q.w);
  out += term(q.x, "i") + term(q.y, "j") + term(q.z, "k") + ")";
  return out;
}

Affine catalog_affine() {
  Rng rng(20130117);
  return Affine(rng.matrix(2, 2), rng.vector(2));
}

namespace {

CatalogEntry entry(std::string name, int n, std::string expr, std::optional<StemFunction> stem,
                   Side stem_side, bool left, bool right, Regularity expected) {
  return CatalogEntry{std::move(name), n,    std::move(expr), std::move(stem),
                      stem_side,       left, right,           expected};
}

std::vector<CatalogEntry> build_catalog() {
  const Quat a1{1.0, 2.0, -1.0, 0.5};
  const Quat b1{0.3, -1.0, 0.0, 2.0};
  const Quat c{1.0, 0.0, 2.0, 0.0};  // 1 + 2j

  std::vector<CatalogEntry> out;
  out.push_back(entry("identity", 1, "q1", variable_stem(1, 1), Side::Left, true, true,
                      Regularity::Both));
  out.push_back(entry("square", 1, "q1^2", power_stem(1, 1, 2), Side::Left, true, true,
                      Regularity::Both));
  out.push_back(entry("inverse", 1, "inv(q1)", power_stem(1, 1, -1), Side::Left, true, true,
                      Regularity::Both));
  out.push_back(entry("conj", 1, "conj(q1)", conjugate_stem(1, 1), Side::Left, true, true,
                      Regularity::Neither));
  out.push_back(entry("affine1", 1, "q1*" + quaternion_literal(a1) + " + " + quaternion_literal(b1),
                      variable_stem(1, 1) * a1 + constant_stem(1, b1), Side::Left, true, false,
                      Regularity::LeftRegular));

  const std::array<int, 2> inv_one{-1, 1};
  const std::array<int, 2> ones2{1, 1};
  const std::array<int, 2> two_one{2, 1};
  const std::array<int, 3> ones3{1, 1, 1};
  out.push_back(entry("q1inv_q2", 2, "inv(q1)*q2", monomial_stem(inv_one, Quat(1.0), Side::Left),
                      Side::Left, true, false, Regularity::LeftRegular));
  out.push_back(entry("q1_q2", 2, "q1*q2", monomial_stem(ones2, Quat(1.0), Side::Left), Side::Left,
                      true, false, Regularity::LeftRegular));
  out.push_back(entry("q2_q1", 2, "q2*q1", monomial_stem(ones2, Quat(1.0), Side::Right),
                      Side::Right, false, true, Regularity::RightRegular));
  out.push_back(entry("q1_q2_leftmono", 2, "q1^2*q2*" + quaternion_literal(c),
                      monomial_stem(two_one, c, Side::Left), Side::Left, true, false,
                      Regularity::LeftRegular));
  out.push_back(entry("q2_q1_rightmono", 2, quaternion_literal(c) + "*q2*q1^2",
                      monomial_stem(two_one, c, Side::Right), Side::Right, false, true,
                      Regularity::RightRegular));
  out.push_back(entry("q1_q2_q3", 3, "q1*q2*q3", monomial_stem(ones3, Quat(1.0), Side::Left),
                      Side::Left, true, false, Regularity::LeftRegular));
  out.push_back(entry("q3_q2_q1", 3, "q3*q2*q1", monomial_stem(ones3, Quat(1.0), Side::Right),
                      Side::Right, false, true, Regularity::RightRegular));
  out.push_back(entry("q2_q1_q3", 3, "q2*q1*q3", std::nullopt, Side::Left, false, false,
                      Regularity::Neither));

  const Affine aff = catalog_affine();
  for (int col = 0; col < 2; ++col) {
    std::string expr;
    for (int k = 0; k < 2; ++k) {
      expr += "q" + std::to_string(k + 1) + "*" + quaternion_literal(aff.linear()(k, col)) + " + ";
    }
    expr += quaternion_literal(aff.offset()[col]);
    out.push_back(entry("affine_c" + std::to_string(col + 1), 2, expr,
                        affine_component_stem(aff, col), Side::Left, true, false,
                        Regularity::LeftRegular));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown catalog entry: " + std::string(name));
}

}  // namespace hyperslice
