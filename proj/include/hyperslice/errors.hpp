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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperslice {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
 public:
  using Error::Error;
};

/// A point (or one of its mirror / stencil neighbours) lies outside the
/// declared domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Stem recovery was asked for at a point too close to a real slice.
class RealSliceError : public Error {
 public:
  using Error::Error;
};

class NegativeRadicand : public Error {
 public:
  using Error::Error;
};

class ZeroPivot : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class ExcludedPoint : public Error {
 public:
  using Error::Error;
};

/// A non-identity group word moves a sampled cell point by less than the
/// freeness threshold (or fixes a point of the cell outright).
class FreenessViolation : public Error {
 public:
  FreenessViolation(const std::string& what, std::string word,
                    std::vector<double> point)
      : Error(what), word_(std::move(word)), point_(std::move(point)) {}

  const std::string& word() const { return word_; }
  /// Flattened witness point, four reals per quaternionic coordinate.
  const std::vector<double>& point() const { return point_; }

 private:
  std::string word_;
  std::vector<double> point_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperslice
