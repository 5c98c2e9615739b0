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

#include <doctest.h>

#include "realqt/random.hpp"
#include "reference_data.hpp"

using namespace realqt;

namespace {

ComplexMatrix hadamard() {
  ComplexMatrix h(2, 2);
  const double s = 1.0 / std::sqrt(2.0);
  h << s, s, s, -s;
  return h;
}

ComplexMatrix ket_projector(const Eigen::VectorXcd& v) {
  return v * v.adjoint();
}

}  // namespace

TEST_CASE("state membership through the complex route") {
  Prng rng(61);
  const SystemDims dims({2, 2});
  for (auto rule : {CombinationRule::Tensor, CombinationRule::Dot}) {
    for (int t = 0; t < 10; ++t) {
      CHECK(is_state(map_m_lifted(random_density(4, rng), dims, rule)));
    }
  }
  // the Bell image is a state under the Tensor rule although indefinite
  const MappedVector bell =
      map_m_lifted(testdata::bell_density(), dims, CombinationRule::Tensor);
  CHECK(is_state(bell));
  CHECK_FALSE(is_psd(eig_sym(bell.mat)));

  // zero matrix: in the span, but trace zero
  const MappedVector zero{CombinationRule::Tensor, dims,
                          RealMatrix::Zero(16, 16)};
  CHECK_FALSE(is_state(zero));
}

TEST_CASE("real-only membership agrees with the complex route") {
  Prng rng(62);
  const SystemDims dims({2, 2});
  for (auto rule : {CombinationRule::Tensor, CombinationRule::Dot}) {
    for (int t = 0; t < 50; ++t) {
      ComplexMatrix h;
      if (t % 3 == 0) {
        h = random_density(4, rng);
      } else if (t % 3 == 1) {
        h = random_indefinite_hermitian(4, rng);
        h += ComplexMatrix::Identity(4, 4) / 4.0;
      } else {
        h = 1.7 * random_density(4, rng);
      }
      const MappedVector v = map_m_lifted(h, dims, rule);
      CHECK(is_state_real_only(v) == is_state(v));
    }
  }
  const MappedVector bell =
      map_m_lifted(testdata::bell_density(), dims, CombinationRule::Tensor);
  CHECK(is_state_real_only(bell));
  const MappedVector indefinite = map_m_lifted(
      random_indefinite_hermitian(4, rng), dims, CombinationRule::Tensor);
  CHECK_FALSE(is_state_real_only(indefinite));
  CHECK_FALSE(is_state(indefinite));
}

TEST_CASE("separable construction") {
  Prng rng(63);
  const SystemDims dims({2, 2});

  // single product term
  const ComplexMatrix r1 = random_density(2, rng);
  const ComplexMatrix r2 = random_density(2, rng);
  const SeparableSpec single{{1.0}, {{r1, r2}}};
  const RealState product = make_separable(single, CombinationRule::Tensor);
  CHECK(max_abs(product.vec.mat - map_m({r1, r2}, CombinationRule::Tensor).mat)
        < 1e-15);
  CHECK(is_state(product.vec));

  for (int t = 0; t < 20; ++t) {
    const SeparableSpec spec =
        random_separable_spec(dims, 1 + static_cast<int>(rng.integer(4)), rng);
    const RealState state = make_separable(spec, CombinationRule::Tensor);
    CHECK(is_psd(eig_sym(state.vec.mat)));
    CHECK(is_state(state.vec));
    // one-to-one correspondence with the complex separable mixture
    ComplexMatrix want = ComplexMatrix::Zero(4, 4);
    for (std::size_t j = 0; j < spec.weights.size(); ++j) {
      want += spec.weights[j] *
              kron(spec.local_states[j][0], spec.local_states[j][1]);
    }
    CHECK(max_abs(map_m_inv(state.vec) - want) < 1e-10);
  }

  SeparableSpec bad{{0.7, 0.7}, {{r1, r2}, {r1, r2}}};
  CHECK_THROWS_AS(make_separable(bad, CombinationRule::Tensor),
                  InvalidWeights);
  SeparableSpec not_state{{1.0}, {{(2.0 * r1).eval(), r2}}};
  CHECK_THROWS_AS(make_separable(not_state, CombinationRule::Tensor),
                  LocalFactorNotState);
}

TEST_CASE("born probabilities") {
  Prng rng(64);
  const SystemDims dims({2, 2});
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const ComplexMatrix p0_id = kron(p0, ComplexMatrix::Identity(2, 2));
  for (auto rule : {CombinationRule::Tensor, CombinationRule::Dot}) {
    const RealState state{
        map_m_lifted(testdata::bell_density(), dims, rule), true};
    const RealEffect identity{
        map_e(ComplexMatrix::Identity(4, 4), dims, rule)};
    CHECK(born(identity, state) == doctest::Approx(1.0).epsilon(1e-12));
    const RealEffect half{map_e(p0_id, dims, rule)};
    CHECK(born(half, state) == doctest::Approx(0.5).epsilon(1e-12));

    // random POVM: probabilities sum to one and match the complex side
    const ComplexMatrix rho = random_density(4, rng);
    const RealState rand_state{map_m_lifted(rho, dims, rule), true};
    const auto povm = random_povm(4, 3, rng);
    CHECK(is_povm(povm));
    double total = 0.0;
    for (const ComplexMatrix& outcome : povm) {
      const double p = born(RealEffect{map_e(outcome, dims, rule)},
                            rand_state);
      CHECK(p == doctest::Approx((outcome * rho).trace().real())
                     .epsilon(1e-10));
      CHECK(p > -1e-10);
      CHECK(p < 1.0 + 1e-10);
      total += p;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
  // mismatched representations are rejected
  const RealState s_tensor{
      map_m_lifted(testdata::bell_density(), dims, CombinationRule::Tensor),
      true};
  const RealEffect e_dot{
      map_e(ComplexMatrix::Identity(4, 4), dims, CombinationRule::Dot)};
  CHECK_THROWS_AS(born(e_dot, s_tensor), RuleMismatch);
}

TEST_CASE("witness fires on the Bell image") {
  const SystemDims dims({2, 2});
  const MappedVector bell =
      map_m_lifted(testdata::bell_density(), dims, CombinationRule::Tensor);
  const WitnessResult result = witness(bell);
  CHECK(result.verdict == Verdict::Entangled);
  // the most negative eigenvalue sits at -a/2 with a = 1/4
  CHECK(result.min_eigenvalue == doctest::Approx(-0.125).epsilon(1e-12));
}

TEST_CASE("witness stays quiet on separable input") {
  Prng rng(65);
  const SystemDims dims({2, 2});
  for (int t = 0; t < 25; ++t) {
    const RealState state = make_separable(
        random_separable_spec(dims, 1 + static_cast<int>(rng.integer(4)), rng),
        CombinationRule::Tensor);
    CHECK(witness(state.vec).verdict == Verdict::Inconclusive);
  }
  // product of two pure qubit states
  Eigen::VectorXcd v1(2), v2(2);
  v1 << Complex(std::sqrt(0.3), 0), Complex(0, std::sqrt(0.7));
  v2 << Complex(0.6, 0), Complex(0.8, 0);
  const RealState pure = make_separable(
      SeparableSpec{{1.0}, {{ket_projector(v1), ket_projector(v2)}}},
      CombinationRule::Tensor);
  CHECK(witness(pure.vec).verdict == Verdict::Inconclusive);

  RealMatrix junk = RealMatrix::Zero(16, 16);
  junk(0, 0) = 1.0;
  CHECK_THROWS_AS(witness(MappedVector{CombinationRule::Tensor, dims, junk}),
                  NotATheoryElement);
  const MappedVector dot_state =
      map_m_lifted(random_density(4, rng), dims, CombinationRule::Dot);
  CHECK_THROWS_AS(witness(dot_state), RuleMismatch);
}

TEST_CASE("unitary images are orthogonal and commute with J") {
  Prng rng(66);
  const DynamicsImage trivial =
      unitary_image(ComplexMatrix::Identity(3, 3));
  CHECK(max_abs(trivial.mat - RealMatrix::Identity(6, 6)) == 0.0);

  const DynamicsImage had = unitary_image(hadamard());
  const RealMatrix j = j_mat(2);
  CHECK(max_abs(had.mat.transpose() * had.mat - RealMatrix::Identity(4, 4)) <
        1e-12);
  CHECK(max_abs(had.mat * j - j * had.mat) < 1e-12);

  // global phase becomes a rotation in the scalar representation
  const double theta = 0.9;
  const DynamicsImage phase = unitary_image(
      (std::exp(Complex(0, theta)) * ComplexMatrix::Identity(3, 3)).eval());
  CHECK(max_abs(phase.mat - (std::cos(theta) * RealMatrix::Identity(6, 6) +
                             std::sin(theta) * j_mat(3))) < 1e-12);

  CHECK_THROWS_AS(unitary_image((2.0 * hadamard()).eval()), NotUnitary);
  for (int t = 0; t < 10; ++t) {
    const DynamicsImage img = unitary_image(random_unitary(4, rng));
    CHECK(img.kind == DynKind::Orthosymplectic);
  }
}

TEST_CASE("antiunitary images anticommute with J") {
  Prng rng(67);
  const Index d = 3;
  const DynamicsImage conj = antiunitary_image(ComplexMatrix::Identity(d, d));
  RealMatrix z = RealMatrix::Identity(2 * d, 2 * d);
  z.bottomRightCorner(d, d) *= -1.0;
  CHECK(max_abs(conj.mat - z) == 0.0);
  CHECK(max_abs(conj.mat * conj.mat - RealMatrix::Identity(2 * d, 2 * d)) ==
        0.0);

  const RealMatrix j = j_mat(d);
  for (int t = 0; t < 10; ++t) {
    const DynamicsImage img = antiunitary_image(random_unitary(d, rng));
    CHECK(max_abs(img.mat.transpose() * img.mat -
                  RealMatrix::Identity(2 * d, 2 * d)) < 1e-12);
    CHECK(max_abs(img.mat * j + j * img.mat) < 1e-12);
  }
}

TEST_CASE("evolution commutes with the complex side") {
  Prng rng(68);
  const SystemDims dims({4});
  const ComplexMatrix rho = random_density(4, rng);
  const RealState state{map_m_lifted(rho, dims, CombinationRule::Dot), true};

  const RealState same = evolve(state, unitary_image(
                                            ComplexMatrix::Identity(4, 4)));
  CHECK(max_abs(same.vec.mat - state.vec.mat) == 0.0);

  const ComplexMatrix u = random_unitary(4, rng);
  const RealState evolved = evolve(state, unitary_image(u));
  CHECK(max_abs(evolved.vec.mat -
                map_m_lifted((u * rho * u.adjoint()).eval(), dims,
                             CombinationRule::Dot)
                    .mat) < 1e-10);
  // orthogonal conjugation preserves the spectrum
  const Spectrum before = eig_sym(state.vec.mat);
  const Spectrum after = eig_sym(evolved.vec.mat);
  for (std::size_t k = 0; k < before.values.size(); ++k) {
    CHECK(after.values[k] == doctest::Approx(before.values[k]).epsilon(1e-10));
  }

  // Hadamard sends |0><0| to |+><+|
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  const SystemDims qubit({2});
  const RealState zero{map_m_lifted(p0, qubit, CombinationRule::Dot), true};
  const RealState plus = evolve(zero, unitary_image(hadamard()));
  ComplexMatrix want = ComplexMatrix::Constant(2, 2, Complex(0.5, 0));
  CHECK(max_abs(plus.vec.mat -
                map_m_lifted(want, qubit, CombinationRule::Dot).mat) < 1e-12);

  const RealState tensor_state{
      map_m_lifted(kron(p0, p0), SystemDims({2, 2}), CombinationRule::Tensor),
      true};
  CHECK_THROWS_AS(evolve(tensor_state, unitary_image(random_unitary(4, rng))),
                  RuleMismatch);
}

TEST_CASE("dynamics images form the expected group structure") {
  Prng rng(69);
  const Index d = 3;
  const RealMatrix eye = RealMatrix::Identity(2 * d, 2 * d);
  const RealMatrix j = j_mat(d);
  for (int t = 0; t < 10; ++t) {
    const RealMatrix u1 = unitary_image(random_unitary(d, rng)).mat;
    const RealMatrix u2 = unitary_image(random_unitary(d, rng)).mat;
    const RealMatrix prod = u1 * u2;
    CHECK(max_abs(prod.transpose() * prod - eye) < 1e-12);
    CHECK(max_abs(prod * j - j * prod) < 1e-12);
    const RealMatrix a1 = antiunitary_image(random_unitary(d, rng)).mat;
    const RealMatrix a2 = antiunitary_image(random_unitary(d, rng)).mat;
    const RealMatrix anti_prod = a1 * a2;
    CHECK(max_abs(anti_prod.transpose() * anti_prod - eye) < 1e-12);
    CHECK(max_abs(anti_prod * j - j * anti_prod) < 1e-12);
  }
}

TEST_CASE("state and effect sets are convex") {
  Prng rng(70);
  const SystemDims dims({2, 2});
  for (auto rule : {CombinationRule::Tensor, CombinationRule::Dot}) {
    for (int t = 0; t < 10; ++t) {
      const double p = rng.uniform();
      MappedVector mix =
          map_m_lifted(random_density(4, rng), dims, rule);
      const MappedVector other =
          map_m_lifted(random_density(4, rng), dims, rule);
      mix.mat = p * mix.mat + (1.0 - p) * other.mat;
      CHECK(is_state(mix));
    }
  }
}
