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

#include "realqt/matcore.hpp"

namespace realqt {

/// Real 2d x 2d matrix of the block form [[A, -B], [B, A]] with A symmetric
/// and B antisymmetric.  These are exactly the symmetric matrices commuting
/// with the imaginary-unit representation J_d, and exactly the images of the
/// complex Hermitian matrices under the block embedding.
class SpecialSymmetric {
 public:
  /// Builds from blocks; throws NotSpecialSymmetric when A is not symmetric
  /// or B not antisymmetric within `tol`.
  SpecialSymmetric(RealMatrix a, RealMatrix b, double tol = kAlgebraicTol);

  /// Splits an assembled 2d x 2d matrix into blocks and validates the form.
  static SpecialSymmetric from_assembled(const RealMatrix& m,
                                         double tol = kAlgebraicTol);

  Index half_dim() const { return a_.rows(); }
  const RealMatrix& sym_block() const { return a_; }
  const RealMatrix& antisym_block() const { return b_; }

  /// The assembled matrix [[a, -b], [b, a]].
  RealMatrix assemble() const;

 private:
  RealMatrix a_;
  RealMatrix b_;
};

/// 2d x 2d representations of the scalars 1 and i: I_d = 1 (x) 1_d and
/// J_d = J (x) 1_d, with J_d^2 = -I_d.
struct ScalarRep {
  Index half_dim;
  RealMatrix i_mat;
  RealMatrix j_mat;
};

ScalarRep scalar_rep(Index d);

/// J_d alone; the workhorse for commutation tests.
RealMatrix j_mat(Index d);

/// Matched orthonormal bases: d^2 Hermitian matrices H_j and d^2 special
/// symmetric matrices S_j with Tr[H_j H_k] = Tr[S_j S_k] = delta_jk.
/// Ordering: d diagonal elements, then the d(d-1)/2 real off-diagonal pairs,
/// then the d(d-1)/2 imaginary ones.  The block embedding relates the two
/// families by gamma(H_j) = sqrt(2) S_j.
struct DualBases {
  Index dim;
  std::vector<ComplexMatrix> herm;
  std::vector<SpecialSymmetric> sy;
};

/// Returns the bases for dimension d, built once and cached.  Thread-safe.
const DualBases& dual_bases(Index d);

/// The block embedding M -> 1 (x) Re(M) + J (x) Im(M) of complex d x d
/// matrices into real 2d x 2d matrices.  It is a *-ring homomorphism; on
/// Hermitian inputs the image is special symmetric and the map is an
/// isometry up to a factor 2: Tr[gamma(H) gamma(L)] = 2 Tr[H L].
RealMatrix gamma(const ComplexMatrix& m);

/// Inverse of the embedding on special symmetric matrices: reads the blocks
/// back as A + iB, which is Hermitian.
ComplexMatrix gamma_inv(const SpecialSymmetric& s);

/// Convenience overload validating the assembled form first; throws
/// NotSpecialSymmetric when the input is not in the image space.
ComplexMatrix gamma_inv(const RealMatrix& s, double tol = kAlgebraicTol);

/// Embedding along the basis-expansion route sum_j Tr[h H_j] S_j, rescaled
/// by sqrt(2) so that it agrees with the block form.  Exists as an
/// independent second route for cross-checking; `h` must be Hermitian.
RealMatrix gamma_via_basis(const ComplexMatrix& h);

/// Inverse along the basis route (1/sqrt(2)) sum_j Tr[s S_j] H_j.
ComplexMatrix gamma_inv_via_basis(const RealMatrix& s);

/// True when `r` is symmetric and commutes with J within `tol`.
/// Throws OddDimension when the matrix cannot carry a J at all.
bool is_special_symmetric(const RealMatrix& r, double tol = kAlgebraicTol);

/// Orthogonal split of a symmetric 2d x 2d matrix into the part commuting
/// with J (special symmetric) and the part anticommuting with it.  The
/// anticommuting part is traceless and orthogonal to the whole commuting
/// subspace.
struct SymmetricSplit {
  RealMatrix commuting;      // (r - J r J)/2
  RealMatrix anticommuting;  // (r + J r J)/2
};

SymmetricSplit sy_complement_split(const RealMatrix& r,
                                   double tol = kAlgebraicTol);

/// Image of entrywise complex conjugation: (Z (x) 1_d) s (Z (x) 1_d).
RealMatrix conjugate_image(const SpecialSymmetric& s);

}  // namespace realqt
