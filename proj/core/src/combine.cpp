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

#include "realqt/combine.hpp"

#include <cmath>
#include <utility>

namespace realqt {

namespace {

const RealMatrix kI2 = RealMatrix::Identity(2, 2);
const RealMatrix kJ2 = (RealMatrix(2, 2) << 0, -1, 1, 0).finished();

// Odometer over mixed radices, row-major (last index fastest).
template <typename Fn>
void for_each_combo(const std::vector<Index>& radices, Fn&& fn) {
  std::vector<Index> idx(radices.size(), 0);
  for (;;) {
    fn(idx);
    std::size_t p = idx.size();
    while (p > 0 && ++idx[p - 1] == radices[p - 1]) {
      idx[p - 1] = 0;
      --p;
    }
    if (p == 0) return;
  }
}

std::vector<Index> basis_radices(const SystemDims& dims) {
  std::vector<Index> r;
  r.reserve(dims.dims().size());
  for (Index d : dims.dims()) r.push_back(d * d);
  return r;
}

ComplexMatrix product_herm(const SystemDims& dims,
                           const std::vector<Index>& combo) {
  ComplexMatrix out = dual_bases(dims.dims()[0]).herm[combo[0]];
  for (std::size_t l = 1; l < combo.size(); ++l) {
    out = kron(out, dual_bases(dims.dims()[l]).herm[combo[l]]);
  }
  return out;
}

RealMatrix product_sy(const SystemDims& dims,
                      const std::vector<Index>& combo) {
  RealMatrix out = dual_bases(dims.dims()[0]).sy[combo[0]].assemble();
  for (std::size_t l = 1; l < combo.size(); ++l) {
    out = kron(out, dual_bases(dims.dims()[l]).sy[combo[l]].assemble());
  }
  return out;
}

// Shared core of map_m_lifted and map_e: the lift with a free scale factor.
RealMatrix lift(const ComplexMatrix& rho, const SystemDims& dims,
                CombinationRule rule, double scale) {
  if (rho.rows() != rho.cols() || rho.rows() != dims.product()) {
    throw DimMismatch("lift: matrix dimension does not match dims product");
  }
  if (max_abs(rho - rho.adjoint()) > kPsdTol) {
    throw NotHermitian("lift: input must be Hermitian");
  }
  if (rule == CombinationRule::Dot) {
    return scale * gamma(rho);
  }
  const Index side = mapped_dim(rule, dims);
  RealMatrix out = RealMatrix::Zero(side, side);
  for_each_combo(basis_radices(dims), [&](const std::vector<Index>& combo) {
    const double c = (rho * product_herm(dims, combo)).trace().real();
    RealMatrix g = gamma(dual_bases(dims.dims()[0]).herm[combo[0]]);
    for (std::size_t l = 1; l < combo.size(); ++l) {
      g = kron(g, gamma(dual_bases(dims.dims()[l]).herm[combo[l]]));
    }
    out += c * g;
  });
  return scale * out;
}

struct SyExpansion {
  std::vector<double> coeffs;  // odometer order
  double residual;
};

// Coefficients of m against the orthonormal product basis
// S_{j1} (x) ... (x) S_{jn}, plus the reconstruction residual.
SyExpansion expand_in_product_sy(const RealMatrix& m,
                                 const SystemDims& dims) {
  SyExpansion e;
  RealMatrix recon = RealMatrix::Zero(m.rows(), m.cols());
  for_each_combo(basis_radices(dims), [&](const std::vector<Index>& combo) {
    const RealMatrix sj = product_sy(dims, combo);
    const double c = (m * sj).trace();
    e.coeffs.push_back(c);
    recon += c * sj;
  });
  e.residual = max_abs(m - recon);
  return e;
}

}  // namespace

const char* to_string(CombinationRule rule) {
  return rule == CombinationRule::Tensor ? "tensor" : "dot";
}

SystemDims::SystemDims(std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DimMismatch("SystemDims: need at least one factor");
  for (Index d : dims_) {
    if (d < 1) throw DimMismatch("SystemDims: dimensions must be positive");
  }
}

Index SystemDims::product() const {
  Index p = 1;
  for (Index d : dims_) p *= d;
  return p;
}

Index mapped_dim(CombinationRule rule, const SystemDims& dims) {
  if (rule == CombinationRule::Dot) return 2 * dims.product();
  Index p = 1;
  for (Index d : dims.dims()) p *= 2 * d;
  return p;
}

void check_mapped(const MappedVector& v) {
  const Index want = mapped_dim(v.rule, v.dims);
  if (v.mat.rows() != v.mat.cols() || v.mat.rows() != want) {
    throw DimMismatch("MappedVector: matrix side " +
                      std::to_string(v.mat.rows()) + " does not match rule (" +
                      std::to_string(want) + " expected)");
  }
}

double normalization_constant(CombinationRule rule, Index n) {
  if (n < 1) throw DimMismatch("normalization_constant: n must be positive");
  // Fixed by E(identity) = identity together with the Born pairing: the
  // pairing factor of the composed embedding is 2^n under Tensor but stays
  // 2 under Dot, where the composite is a single embedding for any n.
  return rule == CombinationRule::Dot ? 0.5
                                      : std::ldexp(1.0, -static_cast<int>(n));
}

RealMatrix wedge(const RealMatrix& s, const RealMatrix& t, double tol) {
  if (s.rows() != s.cols() || t.rows() != t.cols()) {
    throw DimMismatch("wedge: inputs must be square");
  }
  if (s.rows() % 2 != 0 || t.rows() % 2 != 0 || s.rows() < 2 ||
      t.rows() < 2) {
    throw DimMismatch("wedge: inputs must have even side");
  }
  const RealMatrix j1 = j_mat(s.rows() / 2);
  const RealMatrix j2 = j_mat(t.rows() / 2);
  if (max_abs(j1 * s - s * j1) > tol || max_abs(j2 * t - t * j2) > tol) {
    throw JCommutationViolated("wedge: input does not commute with J");
  }
  return 0.5 * (kron(s, t) - kron((j1 * s).eval(), (j2 * t).eval()));
}

SpecialSymmetric dot(const SpecialSymmetric& s, const SpecialSymmetric& t) {
  const RealMatrix& a1 = s.sym_block();
  const RealMatrix& b1 = s.antisym_block();
  const RealMatrix& a2 = t.sym_block();
  const RealMatrix& b2 = t.antisym_block();
  return SpecialSymmetric(kron(a1, a2) - kron(b1, b2),
                          kron(a1, b2) + kron(b1, a2));
}

RealMatrix i2rep() {
  return 0.5 * (kron(kI2, kI2) - kron(kJ2, kJ2));
}

RealMatrix j2rep() {
  return 0.5 * (kron(kI2, kJ2) + kron(kJ2, kI2));
}

SpecialSymmetric tau(const RealMatrix& x, Index d1, Index d2) {
  const Index side = 4 * d1 * d2;
  if (x.rows() != x.cols() || x.rows() % 4 != 0 || x.rows() != side) {
    throw DimNotDivisibleBy4("tau: expected side 4*d1*d2 = " +
                             std::to_string(side) + ", got " +
                             std::to_string(x.rows()));
  }
  const Index m = d1 * d2;
  // The wedge lives on the literal layout (scalar_A, i_A, scalar_B, i_B);
  // move both scalar factors to the front before contracting them.
  const auto reordered = [&](Index sA, Index iA, Index sB, Index iB) {
    return ((sA * 2 + sB) * d1 + iA) * d2 + iB;
  };
  RealMatrix y(side, side);
  for (Index sA = 0; sA < 2; ++sA)
    for (Index iA = 0; iA < d1; ++iA)
      for (Index sB = 0; sB < 2; ++sB)
        for (Index iB = 0; iB < d2; ++iB) {
          const Index row_old = ((sA * d1 + iA) * 2 + sB) * d2 + iB;
          const Index row_new = reordered(sA, iA, sB, iB);
          for (Index sA2 = 0; sA2 < 2; ++sA2)
            for (Index iA2 = 0; iA2 < d1; ++iA2)
              for (Index sB2 = 0; sB2 < 2; ++sB2)
                for (Index iB2 = 0; iB2 < d2; ++iB2) {
                  const Index col_old = ((sA2 * d1 + iA2) * 2 + sB2) * d2 + iB2;
                  y(row_new, reordered(sA2, iA2, sB2, iB2)) =
                      x(row_old, col_old);
                }
        }
  // Contract the 4-dimensional scalar pair against the two representation
  // elements; the pairing duals are their transposes.
  const RealMatrix i4 = i2rep();
  const RealMatrix j4 = j2rep();
  RealMatrix p = RealMatrix::Zero(m, m);
  RealMatrix q = RealMatrix::Zero(m, m);
  for (Index a = 0; a < 4; ++a) {
    for (Index b = 0; b < 4; ++b) {
      if (i4(a, b) != 0.0) p += i4(a, b) * y.block(a * m, b * m, m, m);
      if (j4(a, b) != 0.0) q += j4(a, b) * y.block(a * m, b * m, m, m);
    }
  }
  return SpecialSymmetric(0.5 * p, 0.5 * q);
}

MappedVector map_m(const std::vector<ComplexMatrix>& rhos,
                   CombinationRule rule) {
  if (rhos.empty()) throw DimMismatch("map_m: need at least one factor");
  std::vector<Index> ds;
  for (const ComplexMatrix& r : rhos) {
    if (r.rows() != r.cols() || r.rows() < 1) {
      throw DimMismatch("map_m: factors must be square");
    }
    ds.push_back(r.rows());
  }
  SystemDims dims(ds);
  const double a = normalization_constant(rule, dims.count());
  if (rule == CombinationRule::Tensor) {
    RealMatrix out = gamma(rhos[0]);
    for (std::size_t l = 1; l < rhos.size(); ++l) {
      out = kron(out, gamma(rhos[l]));
    }
    return MappedVector{rule, dims, a * out};
  }
  // Dot rule composes inside the embedding; factors must be Hermitian so
  // that each image is special symmetric.
  for (const ComplexMatrix& r : rhos) {
    if (max_abs(r - r.adjoint()) > kPsdTol) {
      throw NotHermitian("map_m: Dot-rule factors must be Hermitian");
    }
  }
  SpecialSymmetric acc = SpecialSymmetric::from_assembled(gamma(rhos[0]));
  for (std::size_t l = 1; l < rhos.size(); ++l) {
    acc = dot(acc, SpecialSymmetric::from_assembled(gamma(rhos[l])));
  }
  return MappedVector{rule, dims, a * acc.assemble()};
}

MappedVector map_m_lifted(const ComplexMatrix& rho, const SystemDims& dims,
                          CombinationRule rule) {
  const double a = normalization_constant(rule, dims.count());
  return MappedVector{rule, dims, lift(rho, dims, rule, a)};
}

ComplexMatrix map_m_inv(const MappedVector& v) {
  check_mapped(v);
  const Index n = v.dims.count();
  const double a = normalization_constant(v.rule, n);
  const Index cap_d = v.dims.product();
  ComplexMatrix rho;
  if (v.rule == CombinationRule::Dot) {
    // Project the blocks, then gate on the round-trip residual below.
    const RealMatrix scaled = v.mat / a;
    const RealMatrix tl = scaled.topLeftCorner(cap_d, cap_d);
    const RealMatrix br = scaled.bottomRightCorner(cap_d, cap_d);
    const RealMatrix bl = scaled.bottomLeftCorner(cap_d, cap_d);
    const RealMatrix tr = scaled.topRightCorner(cap_d, cap_d);
    const RealMatrix a_blk = ((tl + br) + (tl + br).transpose()) / 4.0;
    const RealMatrix b_blk = ((bl - tr) - (bl - tr).transpose()) / 4.0;
    rho = a_blk.cast<Complex>() +
          Complex(0.0, 1.0) * b_blk.cast<Complex>();
  } else {
    const double scale = a * std::pow(2.0, static_cast<double>(n) / 2.0);
    SyExpansion e = expand_in_product_sy(v.mat, v.dims);
    rho = ComplexMatrix::Zero(cap_d, cap_d);
    std::size_t pos = 0;
    for_each_combo(basis_radices(v.dims),
                   [&](const std::vector<Index>& combo) {
                     rho += (e.coeffs[pos++] / scale) *
                            product_herm(v.dims, combo);
                   });
  }
  const MappedVector back = map_m_lifted(rho, v.dims, v.rule);
  const double residual = max_abs(back.mat - v.mat);
  if (residual > kSubspaceTol) {
    throw OutOfSubspace("map_m_inv: round-trip residual " +
                        std::to_string(residual) +
                        " exceeds the representable-subspace threshold");
  }
  return rho;
}

MappedVector map_e(const ComplexMatrix& effect, const SystemDims& dims,
                   CombinationRule rule) {
  return MappedVector{rule, dims, lift(effect, dims, rule, 1.0)};
}

ComplexMatrix map_e_inv(const MappedVector& v) {
  check_mapped(v);
  const double a = normalization_constant(v.rule, v.dims.count());
  return map_m_inv(MappedVector{v.rule, v.dims, a * v.mat});
}

MappedVector g_map(const MappedVector& v) {
  check_mapped(v);
  if (v.rule != CombinationRule::Tensor) {
    throw RuleMismatch("g_map: input must carry the Tensor rule");
  }
  SyExpansion e = expand_in_product_sy(v.mat, v.dims);
  if (e.residual > kSubspaceTol) {
    throw OutOfSubspace("g_map: expansion residual " +
                        std::to_string(e.residual) +
                        " exceeds the representable-subspace threshold");
  }
  const Index big_d = v.dims.product();
  RealMatrix out = RealMatrix::Zero(2 * big_d, 2 * big_d);
  std::size_t pos = 0;
  for_each_combo(basis_radices(v.dims), [&](const std::vector<Index>& combo) {
    const double c = e.coeffs[pos++];
    SpecialSymmetric acc = dual_bases(v.dims.dims()[0]).sy[combo[0]];
    for (std::size_t l = 1; l < combo.size(); ++l) {
      acc = dot(acc, dual_bases(v.dims.dims()[l]).sy[combo[l]]);
    }
    out += c * acc.assemble();
  });
  return MappedVector{CombinationRule::Dot, v.dims, out};
}

}  // namespace realqt
