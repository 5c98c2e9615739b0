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

#include "realqt/gamma.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

namespace realqt {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void require_even(Index dim, const char* who) {
  if (dim < 2 || dim % 2 != 0) {
    throw OddDimension(std::string(who) + ": dimension " +
                       std::to_string(dim) + " is not of the form 2d");
  }
}

}  // namespace

SpecialSymmetric::SpecialSymmetric(RealMatrix a, RealMatrix b, double tol)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != a_.cols() || b_.rows() != b_.cols() ||
      a_.rows() != b_.rows() || a_.rows() < 1) {
    throw DimMismatch("SpecialSymmetric: blocks must be square and equal");
  }
  if (max_abs(a_ - a_.transpose()) > tol) {
    throw NotSpecialSymmetric("SpecialSymmetric: A block is not symmetric");
  }
  if (max_abs(b_ + b_.transpose()) > tol) {
    throw NotSpecialSymmetric(
        "SpecialSymmetric: B block is not antisymmetric");
  }
}

SpecialSymmetric SpecialSymmetric::from_assembled(const RealMatrix& m,
                                                  double tol) {
  if (m.rows() != m.cols()) {
    throw DimMismatch("SpecialSymmetric: matrix must be square");
  }
  require_even(m.rows(), "SpecialSymmetric");
  const Index d = m.rows() / 2;
  const RealMatrix a = m.topLeftCorner(d, d);
  const RealMatrix b = m.bottomLeftCorner(d, d);
  // The two diagonal blocks must agree and the off-diagonal ones must be
  // opposite; anything else is not in the image space.
  if (max_abs(m.bottomRightCorner(d, d) - a) > tol ||
      max_abs(m.topRightCorner(d, d) + b) > tol) {
    throw NotSpecialSymmetric(
        "from_assembled: matrix lacks the [[A,-B],[B,A]] block form");
  }
  return SpecialSymmetric(a, b, tol);
}

RealMatrix SpecialSymmetric::assemble() const {
  const Index d = half_dim();
  RealMatrix m(2 * d, 2 * d);
  m.topLeftCorner(d, d) = a_;
  m.topRightCorner(d, d) = -b_;
  m.bottomLeftCorner(d, d) = b_;
  m.bottomRightCorner(d, d) = a_;
  return m;
}

ScalarRep scalar_rep(Index d) {
  if (d < 1) throw DimMismatch("scalar_rep: d must be positive");
  ScalarRep rep;
  rep.half_dim = d;
  rep.i_mat = RealMatrix::Identity(2 * d, 2 * d);
  rep.j_mat = j_mat(d);
  return rep;
}

RealMatrix j_mat(Index d) {
  RealMatrix j = RealMatrix::Zero(2 * d, 2 * d);
  j.topRightCorner(d, d) = -RealMatrix::Identity(d, d);
  j.bottomLeftCorner(d, d) = RealMatrix::Identity(d, d);
  return j;
}

RealMatrix gamma(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw DimMismatch("gamma: matrix must be square");
  }
  const Index d = m.rows();
  const RealMatrix re = m.real();
  const RealMatrix im = m.imag();
  RealMatrix out(2 * d, 2 * d);
  out.topLeftCorner(d, d) = re;
  out.topRightCorner(d, d) = -im;
  out.bottomLeftCorner(d, d) = im;
  out.bottomRightCorner(d, d) = re;
  return out;
}

ComplexMatrix gamma_inv(const SpecialSymmetric& s) {
  const Complex i(0.0, 1.0);
  return s.sym_block().cast<Complex>() + i * s.antisym_block().cast<Complex>();
}

ComplexMatrix gamma_inv(const RealMatrix& s, double tol) {
  return gamma_inv(SpecialSymmetric::from_assembled(s, tol));
}

const DualBases& dual_bases(Index d) {
  if (d < 1) throw DimMismatch("dual_bases: d must be positive");
  static std::mutex mutex;
  static std::map<Index, DualBases> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;

  DualBases bases;
  bases.dim = d;
  const Complex i(0.0, 1.0);
  // Diagonal family |j><j|.
  for (Index j = 0; j < d; ++j) {
    ComplexMatrix h = ComplexMatrix::Zero(d, d);
    h(j, j) = 1.0;
    bases.herm.push_back(h);
  }
  // Real off-diagonal family (|j><k| + |k><j|)/sqrt(2).
  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      ComplexMatrix h = ComplexMatrix::Zero(d, d);
      h(j, k) = 1.0 / kSqrt2;
      h(k, j) = 1.0 / kSqrt2;
      bases.herm.push_back(h);
    }
  }
  // Imaginary off-diagonal family i(|j><k| - |k><j|)/sqrt(2).
  for (Index j = 0; j < d; ++j) {
    for (Index k = j + 1; k < d; ++k) {
      ComplexMatrix h = ComplexMatrix::Zero(d, d);
      h(j, k) = i / kSqrt2;
      h(k, j) = -i / kSqrt2;
      bases.herm.push_back(h);
    }
  }
  for (const ComplexMatrix& h : bases.herm) {
    const RealMatrix g = gamma(h) / kSqrt2;
    bases.sy.push_back(SpecialSymmetric::from_assembled(g));
  }
  return cache.emplace(d, std::move(bases)).first->second;
}

RealMatrix gamma_via_basis(const ComplexMatrix& h) {
  if (h.rows() != h.cols() || h.rows() < 1) {
    throw DimMismatch("gamma_via_basis: matrix must be square");
  }
  if (max_abs(h - h.adjoint()) > kAlgebraicTol) {
    throw NotHermitian("gamma_via_basis: input must be Hermitian");
  }
  const DualBases& bases = dual_bases(h.rows());
  RealMatrix out = RealMatrix::Zero(2 * h.rows(), 2 * h.rows());
  for (std::size_t j = 0; j < bases.herm.size(); ++j) {
    const double c = (h * bases.herm[j]).trace().real();
    out += c * bases.sy[j].assemble();
  }
  return kSqrt2 * out;
}

ComplexMatrix gamma_inv_via_basis(const RealMatrix& s) {
  require_even(s.rows(), "gamma_inv_via_basis");
  const Index d = s.rows() / 2;
  const DualBases& bases = dual_bases(d);
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (std::size_t j = 0; j < bases.herm.size(); ++j) {
    const double c = (s * bases.sy[j].assemble()).trace();
    out += c * bases.herm[j];
  }
  return out / kSqrt2;
}

bool is_special_symmetric(const RealMatrix& r, double tol) {
  if (r.rows() != r.cols()) {
    throw DimMismatch("is_special_symmetric: matrix must be square");
  }
  require_even(r.rows(), "is_special_symmetric");
  if (max_abs(r - r.transpose()) > tol) return false;
  const RealMatrix j = j_mat(r.rows() / 2);
  return max_abs(j * r - r * j) <= tol;
}

SymmetricSplit sy_complement_split(const RealMatrix& r, double tol) {
  if (r.rows() != r.cols()) {
    throw DimMismatch("sy_complement_split: matrix must be square");
  }
  require_even(r.rows(), "sy_complement_split");
  if (max_abs(r - r.transpose()) > tol) {
    throw NotSymmetric("sy_complement_split: input must be symmetric");
  }
  const RealMatrix j = j_mat(r.rows() / 2);
  const RealMatrix jrj = j * r * j;
  return SymmetricSplit{(r - jrj) / 2.0, (r + jrj) / 2.0};
}

RealMatrix conjugate_image(const SpecialSymmetric& s) {
  const Index d = s.half_dim();
  RealMatrix z = RealMatrix::Identity(2 * d, 2 * d);
  z.bottomRightCorner(d, d) *= -1.0;
  return z * s.assemble() * z;
}

}  // namespace realqt
