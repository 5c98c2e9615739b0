// Copyright 2026 The realqt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace realqt {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSymmetric : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotUnitary : Error {
  using Error::Error;
};
struct NotSpecialSymmetric : Error {
  using Error::Error;
};
struct OddDimension : Error {
  using Error::Error;
};
struct DimMismatch : Error {
  using Error::Error;
};
struct DimNotDivisibleBy4 : Error {
  using Error::Error;
};
struct JCommutationViolated : Error {
  using Error::Error;
};
struct OutOfSubspace : Error {
  using Error::Error;
};
struct RuleMismatch : Error {
  using Error::Error;
};
struct InvalidWeights : Error {
  using Error::Error;
};
struct LocalFactorNotState : Error {
  using Error::Error;
};
struct NotATheoryElement : Error {
  using Error::Error;
};

}  // namespace realqt
