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

#include "realqt/theory.hpp"

#include <cmath>

namespace realqt {

namespace {

void require_unitary(const ComplexMatrix& u, double tol, const char* who) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw DimMismatch(std::string(who) + ": matrix must be square");
  }
  const ComplexMatrix gram = u.adjoint() * u;
  if (max_abs(gram - ComplexMatrix::Identity(u.rows(), u.cols())) > tol) {
    throw NotUnitary(std::string(who) + ": input is not unitary");
  }
}

void verify_dynamics_invariants(const RealMatrix& m, DynKind kind,
                                const char* who) {
  const Index d = m.rows() / 2;
  const RealMatrix j = j_mat(d);
  const double ortho =
      max_abs(m.transpose() * m - RealMatrix::Identity(m.rows(), m.rows()));
  const double comm = kind == DynKind::Orthosymplectic
                          ? max_abs(m * j - j * m)
                          : max_abs(m * j + j * m);
  if (ortho > 1e-9 || comm > 1e-9) {
    throw Error(std::string(who) + ": constructed image violates its "
                                   "defining equations");
  }
}

}  // namespace

bool is_state(const MappedVector& v, double tol) {
  const ComplexMatrix rho = map_m_inv(v);
  if (std::abs(rho.trace().real() - 1.0) > tol ||
      std::abs(rho.trace().imag()) > tol) {
    return false;
  }
  return is_psd(eig_herm(rho, tol));
}

bool is_effect(const MappedVector& v, double tol) {
  return is_psd(eig_herm(map_m_inv(v), tol));
}

bool is_state_real_only(const MappedVector& v, double tol) {
  check_mapped(v);
  if (std::abs(v.mat.trace() - 1.0) > tol) return false;
  const RealMatrix& swapped =
      v.rule == CombinationRule::Tensor ? g_map(v).mat : v.mat;
  return is_psd(eig_sym(swapped, tol));
}

RealState make_state(const ComplexMatrix& rho, const SystemDims& dims,
                     CombinationRule rule, double tol) {
  MappedVector v = map_m_lifted(rho, dims, rule);
  if (!is_state(v, tol)) {
    throw NotATheoryElement("make_state: input is not a density matrix");
  }
  return RealState{std::move(v), true};
}

RealEffect make_effect(const ComplexMatrix& effect, const SystemDims& dims,
                       CombinationRule rule, double tol) {
  MappedVector v = map_e(effect, dims, rule);
  if (!is_psd(eig_herm(effect, tol))) {
    throw NotATheoryElement("make_effect: input is not PSD");
  }
  return RealEffect{std::move(v)};
}

RealState make_separable(const SeparableSpec& spec, CombinationRule rule,
                         double tol) {
  if (spec.weights.empty() || spec.weights.size() != spec.local_states.size()) {
    throw InvalidWeights("make_separable: weights and terms disagree");
  }
  double total = 0.0;
  for (double w : spec.weights) {
    if (w < -tol) throw InvalidWeights("make_separable: negative weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidWeights("make_separable: weights sum to " +
                         std::to_string(total));
  }
  const std::size_t n = spec.local_states.front().size();
  for (const auto& row : spec.local_states) {
    if (row.size() != n) {
      throw DimMismatch("make_separable: ragged local-state grid");
    }
    for (const ComplexMatrix& rho : row) {
      if (max_abs(rho - rho.adjoint()) > tol ||
          !is_psd(eig_herm(rho, tol)) ||
          std::abs(rho.trace().real() - 1.0) > 1e-9) {
        throw LocalFactorNotState(
            "make_separable: local factor is not a density matrix");
      }
    }
  }
  MappedVector acc = map_m(spec.local_states.front(), rule);
  acc.mat *= spec.weights.front();
  for (std::size_t j = 1; j < spec.weights.size(); ++j) {
    acc.mat += spec.weights[j] * map_m(spec.local_states[j], rule).mat;
  }
  return RealState{std::move(acc), true};
}

double born(const RealEffect& effect, const RealState& state) {
  if (effect.vec.rule != state.vec.rule) {
    throw RuleMismatch("born: effect and state use different rules");
  }
  if (!(effect.vec.dims == state.vec.dims)) {
    throw DimMismatch("born: effect and state dims differ");
  }
  return (effect.vec.mat * state.vec.mat).trace();
}

bool is_povm(const std::vector<ComplexMatrix>& effects, double tol) {
  if (effects.empty()) return false;
  ComplexMatrix sum =
      ComplexMatrix::Zero(effects.front().rows(), effects.front().cols());
  for (const ComplexMatrix& e : effects) {
    if (!is_psd(eig_herm(e, tol))) return false;
    sum += e;
  }
  return max_abs(sum - ComplexMatrix::Identity(sum.rows(), sum.cols())) <= tol;
}

WitnessResult witness(const MappedVector& v, double tol) {
  check_mapped(v);
  if (v.rule != CombinationRule::Tensor) {
    throw RuleMismatch("witness: defined on Tensor-rule elements");
  }
  bool element = false;
  try {
    element = is_state(v) || is_effect(v);
  } catch (const OutOfSubspace&) {
    element = false;
  }
  if (!element) {
    throw NotATheoryElement("witness: input is neither a state nor an effect");
  }
  const double min_eig = eig_sym(v.mat, tol).min();
  return WitnessResult{min_eig, min_eig < -tol ? Verdict::Entangled
                                               : Verdict::Inconclusive};
}

DynamicsImage unitary_image(const ComplexMatrix& u, double tol) {
  require_unitary(u, tol, "unitary_image");
  DynamicsImage img{gamma(u), DynKind::Orthosymplectic};
  verify_dynamics_invariants(img.mat, img.kind, "unitary_image");
  return img;
}

DynamicsImage antiunitary_image(const ComplexMatrix& u, double tol) {
  require_unitary(u, tol, "antiunitary_image");
  const Index d = u.rows();
  RealMatrix z = RealMatrix::Identity(2 * d, 2 * d);
  z.bottomRightCorner(d, d) *= -1.0;
  DynamicsImage img{gamma(u) * z, DynKind::Antiorthosymplectic};
  verify_dynamics_invariants(img.mat, img.kind, "antiunitary_image");
  return img;
}

RealState evolve(const RealState& state, const DynamicsImage& o) {
  if (state.vec.rule != CombinationRule::Dot) {
    throw RuleMismatch("evolve: defined on the Dot representation");
  }
  if (o.mat.rows() != state.vec.mat.rows()) {
    throw DimMismatch("evolve: dynamics image has the wrong dimension");
  }
  MappedVector out = state.vec;
  out.mat = o.mat * state.vec.mat * o.mat.transpose();
  return RealState{std::move(out), state.trace_norm_checked};
}

}  // namespace realqt
