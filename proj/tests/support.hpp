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

#include <gtest/gtest.h>

#include "hyperslice/quaternion.hpp"

// Componentwise-agnostic closeness: |a - b| <= tol.
#define EXPECT_QUAT_NEAR(a, b, tol) \
  EXPECT_LE(::hyperslice::distance((a), (b)), (tol)) << "lhs " << (a) << "\nrhs " << (b)
#define ASSERT_QUAT_NEAR(a, b, tol) \
  ASSERT_LE(::hyperslice::distance((a), (b)), (tol)) << "lhs " << (a) << "\nrhs " << (b)
