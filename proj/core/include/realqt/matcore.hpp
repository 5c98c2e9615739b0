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

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "realqt/error.hpp"

namespace realqt {

using Complex = std::complex<double>;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Default tolerance for exact algebraic identities.
inline constexpr double kAlgebraicTol = 1e-12;
/// Default tolerance for positive semi-definiteness decisions.
inline constexpr double kPsdTol = 1e-9;
/// Tolerance below which the entanglement witness refuses to fire.
inline constexpr double kWitnessTol = 1e-7;
/// Residual threshold for subspace-membership checks.
inline constexpr double kSubspaceTol = 1e-8;

/// Largest absolute entry, used for all max-norm residual checks.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.rows() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Four-part split M = A + iB + i(C + iD) with A, C symmetric and
/// B, D antisymmetric.  The split is unique and reconstructs M exactly.
struct QuadDecomposition {
  RealMatrix a;  // symmetric
  RealMatrix b;  // antisymmetric
  RealMatrix c;  // symmetric
  RealMatrix d;  // antisymmetric

  ComplexMatrix reconstruct() const;
};

QuadDecomposition quad_decompose(const ComplexMatrix& m);

/// The six named parts of a complex square matrix.  Re/Im pair under
/// conjugation, Sym/ASym under transposition, Herm/AHerm under the dagger;
/// each pair sums back to the original matrix (Im enters with a factor i).
enum class Part { Re, Im, Sym, ASym, Herm, AHerm };

ComplexMatrix part(const ComplexMatrix& m, Part kind);

/// Eigenvalues of a self-adjoint matrix, sorted descending, together with
/// the tolerance used for sign decisions on them.
struct Spectrum {
  std::vector<double> values;  // descending
  double tol = kPsdTol;

  double min() const { return values.empty() ? 0.0 : values.back(); }
  double max() const { return values.empty() ? 0.0 : values.front(); }
  double sum() const;
};

/// A spectrum counts as positive semi-definite when no eigenvalue lies
/// below -tol.
bool is_psd(const Spectrum& spec);

/// Eigenvalues of a real symmetric matrix.  Throws NotSymmetric when the
/// max-norm asymmetry exceeds `sym_tol`.
Spectrum eig_sym(const RealMatrix& s, double tol = kPsdTol,
                 double sym_tol = kPsdTol);

/// Eigenvalues of a complex Hermitian matrix.  Throws NotHermitian.
Spectrum eig_herm(const ComplexMatrix& h, double tol = kPsdTol,
                  double herm_tol = kPsdTol);

/// Full symmetric eigendecomposition S = Q diag(values) Q^T with the
/// columns of Q ordered to match the descending spectrum.
struct SymEigen {
  Spectrum spectrum;
  RealMatrix vectors;
};

SymEigen eig_sym_full(const RealMatrix& s, double tol = kPsdTol,
                      double sym_tol = kPsdTol);

RealMatrix kron(const RealMatrix& a, const RealMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace realqt
