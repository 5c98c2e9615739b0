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

#include "realqt/gamma.hpp"
#include "realqt/matcore.hpp"

namespace realqt {

/// How subsystem representations are composed.  Tensor uses the plain
/// Kronecker product of the per-factor embeddings; Dot uses the combination
/// that commutes with the embedding, so the composite equals the embedding
/// of the complex Kronecker product.
enum class CombinationRule { Tensor, Dot };

const char* to_string(CombinationRule rule);

/// Subsystem dimensions d_1, ..., d_n.
class SystemDims {
 public:
  explicit SystemDims(std::vector<Index> dims);

  Index count() const { return static_cast<Index>(dims_.size()); }
  Index product() const;
  const std::vector<Index>& dims() const { return dims_; }
  bool operator==(const SystemDims& other) const {
    return dims_ == other.dims_;
  }

 private:
  std::vector<Index> dims_;
};

/// A real matrix produced by one of the maps below, tagged with the rule and
/// the subsystem layout it was built under.  Side length is 2^n * D for the
/// Tensor rule and 2 * D for the Dot rule.
struct MappedVector {
  CombinationRule rule;
  SystemDims dims;
  RealMatrix mat;
};

/// Expected side length of a mapped matrix.
Index mapped_dim(CombinationRule rule, const SystemDims& dims);

/// Throws DimMismatch when the matrix does not match its tag.
void check_mapped(const MappedVector& v);

/// Normalization constant of the state map, fixed so that the effect map
/// preserves the identity and the Born pairing holds exactly: 2^-n for the
/// Tensor rule and 1/2 for the Dot rule (the Dot composite is a single
/// embedding regardless of n, so its pairing factor stays 2).
double normalization_constant(CombinationRule rule, Index n);

/// The mixed combination s (*) t = (s (x) t - (J s) (x) (J t)) / 2 on
/// J-commuting inputs of even side 2*d1 and 2*d2.  Equals the projector
/// (I (*) I) applied to s (x) t.  Throws JCommutationViolated when an input
/// fails to commute with its J within `tol`, DimMismatch on odd sides.
RealMatrix wedge(const RealMatrix& s, const RealMatrix& t,
                 double tol = kPsdTol);

/// The combination rule for special symmetric matrices:
///   blocks (A1 (x) A2 - B1 (x) B2,  A1 (x) B2 + B1 (x) A2).
/// Satisfies gamma(H (x) L) = dot(gamma(H), gamma(L)).
SpecialSymmetric dot(const SpecialSymmetric& s, const SpecialSymmetric& t);

/// Compression from the wedge codomain back to a special symmetric matrix
/// of half dimension d1*d2.  The input layout is the literal Kronecker
/// layout of wedge(); the reordering of scalar factors is handled here.
/// tau(wedge(s, t)) == dot(s, t).  Throws DimNotDivisibleBy4 when the side
/// is not 4*d1*d2.
SpecialSymmetric tau(const RealMatrix& x, Index d1, Index d2);

/// The 4x4 scalar representations mixed over by the wedge: I2rep is the
/// idempotent (1 (x) 1 - J (x) J)/2 and J2rep = (1 (x) J + J (x) 1)/2 with
/// J2rep^2 = -I2rep.
RealMatrix i2rep();
RealMatrix j2rep();

/// State map on explicit product input: a * (gamma(rho_1) rule ...).
/// Dot-rule factors must be Hermitian.  Throws DimMismatch on non-square
/// factors.
MappedVector map_m(const std::vector<ComplexMatrix>& rhos,
                   CombinationRule rule);

/// State map on an arbitrary Hermitian D x D input, extended from products
/// by linearity through the product Hermitian basis.  For the Dot rule this
/// collapses to a * gamma(rho).  Throws NotHermitian.
MappedVector map_m_lifted(const ComplexMatrix& rho, const SystemDims& dims,
                          CombinationRule rule);

/// Inverse of the lifted state map.  Throws OutOfSubspace when the
/// round-trip residual exceeds 1e-8 (inputs outside the representable span
/// are rejected, not projected).
ComplexMatrix map_m_inv(const MappedVector& v);

/// Effect map E = M / a; preserves the identity effect and pairs with the
/// state map so that Tr[E(e) M(rho)] = Tr[e rho].
MappedVector map_e(const ComplexMatrix& effect, const SystemDims& dims,
                   CombinationRule rule);

ComplexMatrix map_e_inv(const MappedVector& v);

/// Basis swap replacing Tensor composition by Dot composition: product
/// basis elements S_{j1} (x) ... (x) S_{jn} are re-assembled as
/// S_{j1} dot ... dot S_{jn}.  Positivity of the result decides positivity
/// of the complex preimage without complex arithmetic.  Throws RuleMismatch
/// unless the input carries the Tensor rule, OutOfSubspace when the input
/// is not in the span of the product basis.
MappedVector g_map(const MappedVector& v);

}  // namespace realqt
