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

#include <vector>

#include "realqt/combine.hpp"

namespace realqt {

/// A mapped vector whose complex preimage is a density matrix (PSD with
/// unit trace).  Under the Dot rule the matrix itself is additionally PSD.
struct RealState {
  MappedVector vec;
  bool trace_norm_checked = false;
};

/// A mapped vector whose complex preimage is PSD.
struct RealEffect {
  MappedVector vec;
};

/// Convex mixture of product states: weights p_j over rows of local density
/// matrices, one per subsystem.
struct SeparableSpec {
  std::vector<double> weights;
  std::vector<std::vector<ComplexMatrix>> local_states;  // [term][factor]
};

enum class Verdict { Entangled, Inconclusive };

/// One-sided entanglement test: a negative eigenvalue of a valid Tensor-rule
/// element certifies entanglement of the preimage; anything else says
/// nothing.
struct WitnessResult {
  double min_eigenvalue;
  Verdict verdict;
};

enum class DynKind { Orthosymplectic, Antiorthosymplectic };

/// Image of a unitary (orthogonal, commutes with J) or antiunitary
/// (orthogonal, anticommutes with J) transformation.
struct DynamicsImage {
  RealMatrix mat;
  DynKind kind;
};

/// State membership through the complex route: the preimage must be PSD
/// with unit trace.  Reference predicate for everything else.
bool is_state(const MappedVector& v, double tol = kPsdTol);

/// Effect membership: the preimage must be PSD.
bool is_effect(const MappedVector& v, double tol = kPsdTol);

/// State membership evaluated purely over the reals: positivity of the
/// basis-swapped matrix plus the trace normalization Tr[v] = 1.  Agrees
/// with is_state on every input.
bool is_state_real_only(const MappedVector& v, double tol = kPsdTol);

/// Convenience constructors mapping complex states / effects.
RealState make_state(const ComplexMatrix& rho, const SystemDims& dims,
                     CombinationRule rule, double tol = kPsdTol);
RealEffect make_effect(const ComplexMatrix& effect, const SystemDims& dims,
                       CombinationRule rule, double tol = kPsdTol);

/// Builds the convex mixture of rule-combined product states described by
/// the spec.  Throws InvalidWeights or LocalFactorNotState.
RealState make_separable(const SeparableSpec& spec, CombinationRule rule,
                         double tol = kPsdTol);

/// Outcome probability Tr[e s], evaluated entirely on the real side.
/// Throws RuleMismatch / DimMismatch when effect and state do not live in
/// the same representation.
double born(const RealEffect& effect, const RealState& state);

/// True when the effects are all PSD and sum to the identity.
bool is_povm(const std::vector<ComplexMatrix>& effects, double tol = kPsdTol);

/// Entanglement witness on a valid Tensor-rule element.  Throws
/// NotATheoryElement when the input is neither a state nor an effect,
/// RuleMismatch for Dot-rule input.
WitnessResult witness(const MappedVector& v, double tol = kWitnessTol);

/// gamma(u) for unitary u; orthogonal and commuting with J.
DynamicsImage unitary_image(const ComplexMatrix& u, double tol = kPsdTol);

/// gamma(u) composed with the conjugation representation Z (x) 1; orthogonal
/// and anticommuting with J.
DynamicsImage antiunitary_image(const ComplexMatrix& u, double tol = kPsdTol);

/// Conjugates a Dot-rule state by a dynamics image: o s o^T.  Commutes with
/// the complex-side evolution through the embedding.
RealState evolve(const RealState& state, const DynamicsImage& o);

}  // namespace realqt
