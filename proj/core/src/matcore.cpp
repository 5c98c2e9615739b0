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

#include "realqt/matcore.hpp"

#include <algorithm>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

namespace realqt {

namespace {

void require_square(Index rows, Index cols, const char* who) {
  if (rows != cols || rows < 1) {
    throw DimMismatch(std::string(who) + ": matrix must be square, got " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Spectrum descending(Eigen::VectorXd v, double tol) {
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), std::greater<double>());
  return Spectrum{std::move(out), tol};
}

}  // namespace

ComplexMatrix QuadDecomposition::reconstruct() const {
  const Complex i(0.0, 1.0);
  return a.cast<Complex>() + i * b.cast<Complex>() + i * c.cast<Complex>() -
         d.cast<Complex>();
}

QuadDecomposition quad_decompose(const ComplexMatrix& m) {
  require_square(m.rows(), m.cols(), "quad_decompose");
  const RealMatrix re = m.real();
  const RealMatrix im = m.imag();
  QuadDecomposition q;
  q.a = (re + re.transpose()) / 2.0;   // Sym(Re m)
  q.b = (im - im.transpose()) / 2.0;   // ASym(Im m)
  q.c = (im + im.transpose()) / 2.0;   // Sym(Im m)
  q.d = -(re - re.transpose()) / 2.0;  // -ASym(Re m)
  return q;
}

ComplexMatrix part(const ComplexMatrix& m, Part kind) {
  require_square(m.rows(), m.cols(), "part");
  const Complex i(0.0, 1.0);
  switch (kind) {
    case Part::Re:
      return ((m + m.conjugate()) / 2.0).eval();
    case Part::Im:
      return ((m - m.conjugate()) / (2.0 * i)).eval();
    case Part::Sym:
      return ((m + m.transpose()) / 2.0).eval();
    case Part::ASym:
      return ((m - m.transpose()) / 2.0).eval();
    case Part::Herm:
      return ((m + m.adjoint()) / 2.0).eval();
    case Part::AHerm:
      return ((m - m.adjoint()) / 2.0).eval();
  }
  throw Error("part: unknown kind");
}

double Spectrum::sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

bool is_psd(const Spectrum& spec) { return spec.min() >= -spec.tol; }

Spectrum eig_sym(const RealMatrix& s, double tol, double sym_tol) {
  require_square(s.rows(), s.cols(), "eig_sym");
  if (max_abs(s - s.transpose()) > sym_tol) {
    throw NotSymmetric("eig_sym: input is not symmetric within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(s,
                                                   Eigen::EigenvaluesOnly);
  return descending(solver.eigenvalues(), tol);
}

Spectrum eig_herm(const ComplexMatrix& h, double tol, double herm_tol) {
  require_square(h.rows(), h.cols(), "eig_herm");
  if (max_abs(h - h.adjoint()) > herm_tol) {
    throw NotHermitian("eig_herm: input is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h,
                                                      Eigen::EigenvaluesOnly);
  return descending(solver.eigenvalues(), tol);
}

SymEigen eig_sym_full(const RealMatrix& s, double tol, double sym_tol) {
  require_square(s.rows(), s.cols(), "eig_sym_full");
  if (max_abs(s - s.transpose()) > sym_tol) {
    throw NotSymmetric("eig_sym_full: input is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(s);
  const Index n = s.rows();
  SymEigen out;
  out.spectrum.tol = tol;
  out.spectrum.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  // Eigen sorts ascending; flip to match the descending contract.
  for (Index k = 0; k < n; ++k) {
    out.spectrum.values[static_cast<std::size_t>(k)] =
        solver.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

}  // namespace realqt
