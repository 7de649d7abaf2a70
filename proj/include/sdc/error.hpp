// Copyright 2026 The sdcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
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

namespace sdc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hex string whose length is not the 36 digits of an 8x8 upper triangle.
/// Carries the actual length so callers can route it to errata handling.
class HexLengthError : public Error {
 public:
  HexLengthError(std::size_t actual, std::size_t expected)
      : Error("upper-triangular hex string has " + std::to_string(actual) +
              " digits, expected " + std::to_string(expected)),
        actual_(actual) {}

  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t actual_;
};

}  // namespace sdc
