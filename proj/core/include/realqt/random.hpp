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

#include <cstdint>
#include <random>
#include <vector>

#include "realqt/theory.hpp"

namespace realqt {

/// Seeded generator with a self-contained normal sampler, so identical
/// seeds give identical streams independent of the standard library's
/// distribution implementations.  All randomness in the library flows
/// through explicitly passed instances of this class.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();
  /// Uniform integer in [0, bound).
  std::uint64_t integer(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Square matrix of iid complex standard normals.
ComplexMatrix ginibre(Index d, Prng& rng);

ComplexMatrix random_hermitian(Index d, Prng& rng);

/// G G^dagger / Tr, PSD with unit trace by construction.
ComplexMatrix random_density(Index d, Prng& rng);

/// Traceless Hermitian sample; has eigenvalues of both signs.
ComplexMatrix random_indefinite_hermitian(Index d, Prng& rng);

/// Haar-distributed unitary via QR of a Ginibre sample with the R diagonal
/// phase-fixed.
ComplexMatrix random_unitary(Index d, Prng& rng);

/// Random POVM with `outcomes` elements: PSD matrices conjugated by the
/// inverse square root of their sum, so they sum to the identity.
std::vector<ComplexMatrix> random_povm(Index d, int outcomes, Prng& rng);

/// Random separable mixture with `terms` product terms over `dims`.
SeparableSpec random_separable_spec(const SystemDims& dims, int terms,
                                    Prng& rng);

}  // namespace realqt
