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

// JSON encodings. Quaternions are [w, x, y, z]; every top-level document
// carries a "schema" field of the form "hyperslice.<kind>/<version>".

#include <nlohmann/json.hpp>

#include "hyperslice/atlas.hpp"
#include "hyperslice/clifford.hpp"
#include "hyperslice/models.hpp"
#include "hyperslice/qmatrix.hpp"
#include "hyperslice/regularity.hpp"

namespace hyperslice {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hyperslice.report/1";
inline constexpr const char* kMatrixSchema = "hyperslice.matrix/1";
inline constexpr const char* kMultivectorSchema = "hyperslice.multivector/1";
inline constexpr const char* kVerdictSchema = "hyperslice.verdict/1";
inline constexpr const char* kAtlasSchema = "hyperslice.atlas-report/1";

Json to_json(const Quat& q);
Json to_json(const QVec& v);
Json to_json(const MultivectorHQ& m);
Json to_json(const QMat& m);
Json to_json(const Tolerances& t);
Json to_json(const RegularityVerdict& v);
Json to_json(const AtlasReport& r);
Json to_json(const ConnectedSumReport& r);
Json to_json(const GrassmannReport& r);
Json to_json(const FreenessReport& r);

/// Accepts [w, x, y, z] or a bare real. Throws DomainError otherwise.
Quat quaternion_from_json(const Json& j);
/// Accepts {"rows": [[q, ...], ...]} (an "n" field, if present, must match)
/// or a bare array of rows. Rows must have equal length.
QMat matrix_from_json(const Json& j);
MultivectorHQ multivector_from_json(const Json& j);

}  // namespace hyperslice
