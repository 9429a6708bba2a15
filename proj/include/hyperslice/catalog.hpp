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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperslice/expr.hpp"
#include "hyperslice/regularity.hpp"
#include "hyperslice/stem.hpp"

namespace hyperslice {

/// A named function with two independent descriptions: its expression text
/// (evaluated through the parser) and, when known, a stem assembled from
/// Clifford products of one-variable stems.
struct CatalogEntry {
  std::string name;
  int n;
  std::string expression;
  std::optional<StemFunction> stem;
  Side stem_side = Side::Left;  // side on which `stem` induces the function
  bool left_slice = false;      // is a left slice function
  bool right_slice = false;     // is a right slice function
  Regularity expected = Regularity::Neither;

  QFunctionN function() const;
};

const std::vector<CatalogEntry>& catalog();

/// Throws DomainError for an unknown name.
const CatalogEntry& catalog_entry(std::string_view name);

/// Seeded random invertible affine map used by the "affine_c*" entries.
Affine catalog_affine();

/// "(w + x*i + y*j + z*k)" with round-trip exact reals.
std::string quaternion_literal(const Quat& q);

}  // namespace hyperslice
