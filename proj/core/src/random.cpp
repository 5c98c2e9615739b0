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

#include "realqt/random.hpp"

#include <cmath>

namespace realqt {

double Prng::uniform() {
  // 53 high bits of the engine output, mapped to [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Prng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::uint64_t Prng::integer(std::uint64_t bound) {
  return bound == 0 ? 0 : engine_() % bound;
}

ComplexMatrix ginibre(Index d, Prng& rng) {
  ComplexMatrix g(d, d);
  for (Index r = 0; r < d; ++r) {
    for (Index c = 0; c < d; ++c) {
      g(r, c) = Complex(rng.normal(), rng.normal());
    }
  }
  return g;
}

ComplexMatrix random_hermitian(Index d, Prng& rng) {
  const ComplexMatrix g = ginibre(d, rng);
  return ((g + g.adjoint()) / 2.0).eval();
}

ComplexMatrix random_density(Index d, Prng& rng) {
  const ComplexMatrix g = ginibre(d, rng);
  ComplexMatrix rho = g * g.adjoint();
  return (rho / rho.trace().real()).eval();
}

ComplexMatrix random_indefinite_hermitian(Index d, Prng& rng) {
  ComplexMatrix h = random_hermitian(d, rng);
  h -= (h.trace() / static_cast<double>(d)) *
       ComplexMatrix::Identity(d, d);
  return h;
}

ComplexMatrix random_unitary(Index d, Prng& rng) {
  const ComplexMatrix g = ginibre(d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index c = 0; c < d; ++c) {
    const Complex diag = r(c, c);
    q.col(c) *= diag / std::abs(diag);
  }
  return q;
}

std::vector<ComplexMatrix> random_povm(Index d, int outcomes, Prng& rng) {
  std::vector<ComplexMatrix> parts;
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (int r = 0; r < outcomes; ++r) {
    const ComplexMatrix g = ginibre(d, rng);
    parts.push_back(g * g.adjoint());
    sum += parts.back();
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sum);
  const ComplexMatrix inv_sqrt = solver.operatorInverseSqrt();
  for (ComplexMatrix& p : parts) {
    p = inv_sqrt * p * inv_sqrt;
    p = ((p + p.adjoint()) / 2.0).eval();
  }
  return parts;
}

SeparableSpec random_separable_spec(const SystemDims& dims, int terms,
                                    Prng& rng) {
  SeparableSpec spec;
  double total = 0.0;
  for (int j = 0; j < terms; ++j) {
    const double w = rng.uniform() + 1e-3;
    spec.weights.push_back(w);
    total += w;
    std::vector<ComplexMatrix> row;
    for (Index d : dims.dims()) row.push_back(random_density(d, rng));
    spec.local_states.push_back(std::move(row));
  }
  for (double& w : spec.weights) w /= total;
  return spec;
}

}  // namespace realqt
