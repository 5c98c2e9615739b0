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

#include "realqt/cli/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <json.hpp>

#include "realqt/random.hpp"

namespace realqt::cli {

namespace {

constexpr double kTight = 1e-12;
constexpr double kLoose = 1e-9;
constexpr double kBornTol = 1e-10;

Index pick_dim(int t) { return 2 + (t % 5); }  // cycles 2..6

// The main-text misprint of the dot combination: the antisymmetric output
// block doubles the Sy (x) An term instead of adding An (x) Sy.  Kept here
// as a sensitivity probe for the factorization identity.
RealMatrix corrupted_dot(const SpecialSymmetric& s, const SpecialSymmetric& t) {
  const RealMatrix a =
      kron(s.sym_block(), t.sym_block()) -
      kron(s.antisym_block(), t.antisym_block());
  const RealMatrix b = 2.0 * kron(s.sym_block(), t.antisym_block());
  const Index m = a.rows();
  RealMatrix out(2 * m, 2 * m);
  out.topLeftCorner(m, m) = a;
  out.topRightCorner(m, m) = -b;
  out.bottomLeftCorner(m, m) = b;
  out.bottomRightCorner(m, m) = a;
  return out;
}

struct Suite {
  int trials;
  SystemDims dims;
  Prng rng;
  std::vector<PropertyRow> rows;

  Suite(std::uint64_t seed, int trials_in, std::vector<Index> dims_in)
      : trials(trials_in), dims(std::move(dims_in)), rng(seed) {}

  void add(std::string property, std::string anchor, int n, double residual,
           double threshold, bool inverted = false) {
    PropertyRow row;
    row.property = std::move(property);
    row.anchor = std::move(anchor);
    row.trials = n;
    row.max_residual = residual;
    row.threshold = threshold;
    row.inverted = inverted;
    row.pass = inverted ? residual > threshold : residual <= threshold;
    rows.push_back(std::move(row));
  }

  // ---- gamma ----

  void ring_homomorphism() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d = pick_dim(t);
      const ComplexMatrix m = ginibre(d, rng);
      const ComplexMatrix n = ginibre(d, rng);
      res = std::max(res, max_abs(gamma(m + n) - (gamma(m) + gamma(n))));
      res = std::max(res, max_abs(gamma((m * n).eval()) - gamma(m) * gamma(n)));
      res = std::max(res, max_abs(gamma(m.adjoint()) - gamma(m).transpose()));
      res = std::max(
          res, max_abs(gamma(ComplexMatrix::Identity(d, d)) -
                       RealMatrix::Identity(2 * d, 2 * d)));
    }
    add("ring homomorphism (sum, product, unit, adjoint)",
        "gamma.ring_homomorphism", trials, res, kTight);
  }

  void real_linearity() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d = pick_dim(t);
      const ComplexMatrix h = random_hermitian(d, rng);
      const ComplexMatrix l = random_hermitian(d, rng);
      const double x = 2.0 * rng.normal();
      const double y = 2.0 * rng.normal();
      res = std::max(res, max_abs(gamma((x * h + y * l).eval()) -
                                  (x * gamma(h) + y * gamma(l))));
    }
    add("real-linearity on Hermitian inputs", "gamma.real_linearity", trials,
        res, kTight);
  }

  void scalar_action() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d = pick_dim(t);
      const ComplexMatrix m = ginibre(d, rng);
      const double x = rng.normal();
      const double y = rng.normal();
      const Complex c(x, y);
      res = std::max(res, max_abs(gamma((c * m).eval()) -
                                  (x * gamma(m) + y * j_mat(d) * gamma(m))));
    }
    add("scalar action through the J representation", "gamma.scalar_action",
        trials, res, kTight);
  }

  void isometry_factor() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d = pick_dim(t);
      const ComplexMatrix h = random_hermitian(d, rng);
      const ComplexMatrix l = random_hermitian(d, rng);
      res = std::max(res, std::abs((gamma(h) * gamma(l)).trace() -
                                   2.0 * (h * l).trace().real()));
    }
    add("pairing factor 2 on Hermitian inputs", "gamma.isometry_factor",
        trials, res, kTight);
  }

  void mapped_inner_product() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d = pick_dim(t);
      const ComplexMatrix m = ginibre(d, rng);
      const ComplexMatrix n = ginibre(d, rng);
      res = std::max(
          res, std::abs((gamma(n).transpose() * gamma(m)).trace() -
                        2.0 * (n.adjoint() * m).trace().real()));
    }
    add("mapped inner product keeps twice the real part",
        "gamma.mapped_inner_product", trials, res, kTight);
  }

  void positivity_equivalence() {
    int disagreements = 0;
    for (int t = 0; t < trials; ++t) {
      const Index d = pick_dim(t);
      const ComplexMatrix h = (t % 2 == 0)
                                  ? ComplexMatrix(random_density(d, rng))
                                  : random_indefinite_hermitian(d, rng);
      const bool complex_psd = is_psd(eig_herm(h, kLoose));
      const bool real_psd = is_psd(eig_sym(gamma(h), kLoose));
      if (complex_psd != real_psd) ++disagreements;
    }
    add("positivity preserved in both directions",
        "gamma.positivity_equivalence", trials,
        static_cast<double>(disagreements), 0.0);
  }

  void complement_orthogonality() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d = pick_dim(t);
      const RealMatrix m = gamma(random_hermitian(d, rng));
      RealMatrix sym(2 * d, 2 * d);
      for (Index r = 0; r < 2 * d; ++r)
        for (Index c = 0; c < 2 * d; ++c) sym(r, c) = rng.normal();
      sym = ((sym + sym.transpose()) / 2.0).eval();
      const SymmetricSplit split = sy_complement_split(sym);
      res = std::max(res, std::abs((m * split.anticommuting).trace()));
      res = std::max(res, std::abs(split.anticommuting.trace()));
    }
    add("anticommuting complement is trace-orthogonal",
        "gamma.complement_orthogonality", trials, res, kTight);
  }

  // ---- combine ----

  void dot_algebra() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d1 = 2 + (t % 2);
      const Index d2 = 2 + ((t + 1) % 2);
      const auto sy = [&](Index d) {
        return SpecialSymmetric::from_assembled(gamma(random_hermitian(d, rng)));
      };
      const SpecialSymmetric s = sy(d1), s2 = sy(d1);
      const SpecialSymmetric u = sy(d2), u2 = sy(d2);
      const SpecialSymmetric w = sy(2);
      const double x = rng.normal(), y = rng.normal();
      // bilinearity in each slot
      const RealMatrix lin_left =
          dot(SpecialSymmetric(x * s.sym_block() + y * s2.sym_block(),
                               x * s.antisym_block() + y * s2.antisym_block()),
              u)
              .assemble();
      res = std::max(res, max_abs(lin_left - (x * dot(s, u).assemble() +
                                              y * dot(s2, u).assemble())));
      const RealMatrix lin_right =
          dot(s, SpecialSymmetric(x * u.sym_block() + y * u2.sym_block(),
                                  x * u.antisym_block() + y * u2.antisym_block()))
              .assemble();
      res = std::max(res, max_abs(lin_right - (x * dot(s, u).assemble() +
                                               y * dot(s, u2).assemble())));
      // associativity
      res = std::max(res, max_abs(dot(dot(s, u), w).assemble() -
                                  dot(s, dot(u, w)).assemble()));
      // mixed product: the product of two combined elements is the image
      // of the factorwise complex product
      const ComplexMatrix hs = gamma_inv(s), hs2 = gamma_inv(s2);
      const ComplexMatrix hu = gamma_inv(u), hu2 = gamma_inv(u2);
      res = std::max(res,
                     max_abs(dot(s, u).assemble() * dot(s2, u2).assemble() -
                             gamma(kron((hs * hs2).eval(), (hu * hu2).eval()))));
      // trace factor relative to the preimages
      res = std::max(res, std::abs(dot(s, u).assemble().trace() -
                                   2.0 * hs.trace().real() * hu.trace().real()));
    }
    add("dot combination: bilinear, associative, mixed product, trace factor",
        "combine.dot_algebra", trials, res, kTight);
  }

  void dot_basis_gram() {
    // Gram matrix of all pairwise dot-combined basis elements must be
    // (1/2) * identity, which in particular has full rank d1^2 * d2^2.
    const Index d1 = 2, d2 = 2;
    const auto& b1 = dual_bases(d1);
    const auto& b2 = dual_bases(d2);
    std::vector<RealMatrix> combined;
    for (const auto& s : b1.sy)
      for (const auto& t : b2.sy) combined.push_back(dot(s, t).assemble());
    const auto n = static_cast<Index>(combined.size());
    RealMatrix gram(n, n);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < n; ++c)
        gram(r, c) = (combined[static_cast<std::size_t>(r)] *
                      combined[static_cast<std::size_t>(c)])
                         .trace();
    const double res =
        max_abs(2.0 * gram - RealMatrix::Identity(n, n));
    add("dot-combined basis spans the full target space",
        "combine.dot_basis_gram", 1, res, kTight);
  }

  void wedge_absorption() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d1 = 2 + (t % 2), d2 = 2;
      const RealMatrix s = gamma(random_hermitian(d1, rng));
      const RealMatrix u = gamma(random_hermitian(d2, rng));
      const RealMatrix w = wedge(s, u);
      const RealMatrix proj = wedge(RealMatrix::Identity(2 * d1, 2 * d1),
                                    RealMatrix::Identity(2 * d2, 2 * d2));
      res = std::max(res, max_abs(proj * kron(s, u) - w));
      res = std::max(res, max_abs(kron(s, u) * proj - w));
      res = std::max(res, max_abs(proj * proj - proj));
    }
    add("wedge projector absorbs the plain Kronecker product",
        "combine.wedge_absorption", trials, res, kTight);
  }

  void phase_covariance() {
    double res = 0.0;
    const Index d1 = 2, d2 = 3;
    for (int t = 0; t < trials; ++t) {
      const ComplexMatrix m = ginibre(d1, rng);
      const ComplexMatrix n = ginibre(d2, rng);
      for (int k = 0; k < 12; ++k) {
        const double theta = 2.0 * M_PI * k / 12.0;
        const Complex ph = std::exp(Complex(0.0, theta));
        const RealMatrix lhs = wedge(gamma((ph * m).eval()), gamma(n));
        const RealMatrix mid = wedge(gamma(m), gamma((ph * n).eval()));
        const RealMatrix rhs =
            std::cos(theta) * wedge(gamma(m), gamma(n)) +
            std::sin(theta) *
                wedge(gamma((Complex(0, 1) * m).eval()), gamma(n));
        res = std::max(res, max_abs(lhs - mid));
        res = std::max(res, max_abs(lhs - rhs));
        const RealMatrix inv = wedge(gamma((ph * m).eval()),
                                     gamma((std::conj(ph) * n).eval()));
        res = std::max(res, max_abs(inv - wedge(gamma(m), gamma(n))));
      }
    }
    add("wedge phase covariance over a 12-point grid",
        "combine.phase_covariance", trials * 12, res, kTight);
  }

  void tensor_rule_anomaly() {
    // The plain Kronecker rule represents the scalars degenerately: the
    // identity pair and the doubled J pair stay distinct, and complex
    // inner products between a pair and its i-multiplied copy are killed
    // while the complex side keeps them.
    double zero_side = 0.0;
    double min_complex = 1e300;
    const Index d1 = 2, d2 = 2;
    for (int t = 0; t < trials; ++t) {
      const ComplexMatrix ma = random_hermitian(d1, rng);
      const ComplexMatrix mb = random_hermitian(d2, rng);
      const ComplexMatrix n1 = random_hermitian(d1, rng);
      const ComplexMatrix n2 = random_hermitian(d2, rng);
      const Complex i(0, 1);
      const RealMatrix lhs = kron(gamma(ma), gamma(mb)).transpose() *
                             kron(gamma((i * n1).eval()), gamma((i * n2).eval()));
      zero_side = std::max(zero_side, std::abs(lhs.trace()));
      const Complex rhs = (kron(ma, mb).adjoint() * kron((i * n1).eval(),
                                                         (i * n2).eval()))
                              .trace();
      min_complex = std::min(min_complex, std::abs(rhs));
    }
    const RealMatrix degenerate =
        RealMatrix::Identity(4 * d1 * d2, 4 * d1 * d2) +
        kron(j_mat(d1), j_mat(d2));
    const bool distinct = max_abs(degenerate) > 0.5;
    const bool complex_nonzero = min_complex > 1e-8;
    add("Kronecker rule drops complex-pair inner products",
        "combine.tensor_rule_anomaly", trials,
        (distinct && complex_nonzero) ? zero_side : 1.0, kTight);
  }

  void gmap_equivalence() {
    int disagreements = 0;
    const Index cap_d = dims.product();
    for (int t = 0; t < trials; ++t) {
      ComplexMatrix h;
      switch (t % 3) {
        case 0:
          h = random_density(cap_d, rng);
          break;
        case 1:
          h = random_indefinite_hermitian(cap_d, rng);
          break;
        default: {
          // boundary case: inject an exact zero eigenvalue
          const ComplexMatrix u = random_unitary(cap_d, rng);
          Eigen::VectorXd vals(cap_d);
          for (Index k = 0; k < cap_d; ++k) {
            vals(k) = k == 0 ? 0.0 : std::abs(rng.normal());
          }
          h = u * vals.asDiagonal() * u.adjoint();
          h = ((h + h.adjoint()) / 2.0).eval();
          break;
        }
      }
      const MappedVector v = map_m_lifted(h, dims, CombinationRule::Tensor);
      const bool real_psd = is_psd(eig_sym(g_map(v).mat, kLoose));
      const bool complex_psd = is_psd(eig_herm(map_m_inv(v), kLoose));
      if (real_psd != complex_psd) ++disagreements;
    }
    add("basis swap decides positivity of the complex preimage",
        "combine.gmap_equivalence", trials,
        static_cast<double>(disagreements), 0.0);
  }

  void negative_control() {
    double deviation = 1e300;
    for (int t = 0; t < std::max(trials, 10); ++t) {
      const Index d1 = 2, d2 = 2;
      const ComplexMatrix h = random_hermitian(d1, rng);
      const ComplexMatrix l = random_hermitian(d2, rng);
      const RealMatrix bad = corrupted_dot(
          SpecialSymmetric::from_assembled(gamma(h)),
          SpecialSymmetric::from_assembled(gamma(l)));
      deviation = std::min(deviation, max_abs(bad - gamma(kron(h, l))));
    }
    add("corrupted dot variant breaks the factorization identity",
        "combine.negative_control", std::max(trials, 10), deviation, 1e-3,
        /*inverted=*/true);
  }

  // ---- theory ----

  void born_equivalence() {
    double res = 0.0;
    const Index cap_d = dims.product();
    for (int t = 0; t < trials; ++t) {
      for (const auto rule : {CombinationRule::Tensor, CombinationRule::Dot}) {
        const ComplexMatrix rho = random_density(cap_d, rng);
        const ComplexMatrix g = ginibre(cap_d, rng);
        const ComplexMatrix eff = g * g.adjoint() / static_cast<double>(cap_d);
        const RealState state{map_m_lifted(rho, dims, rule), true};
        const RealEffect effect{map_e(eff, dims, rule)};
        const double real_side = born(effect, state);
        const double complex_side =
            (map_e_inv(effect.vec) * map_m_inv(state.vec)).trace().real();
        res = std::max(res, std::abs(real_side - (eff * rho).trace().real()));
        res = std::max(res, std::abs(real_side - complex_side));
      }
    }
    add("Born pairing agrees with the complex side under both rules",
        "theory.born_equivalence", 2 * trials, res, kBornTol);
  }

  void separable_statistics() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      for (const auto rule : {CombinationRule::Tensor, CombinationRule::Dot}) {
        const SeparableSpec spec =
            random_separable_spec(dims, 1 + static_cast<int>(rng.integer(3)),
                                  rng);
        const RealState state = make_separable(spec, rule);
        const ComplexMatrix g = ginibre(dims.product(), rng);
        const ComplexMatrix eff =
            g * g.adjoint() / static_cast<double>(dims.product());
        const RealEffect effect{map_e(eff, dims, rule)};
        const double real_side = born(effect, state);
        const double complex_side =
            (map_e_inv(effect.vec) * map_m_inv(state.vec)).trace().real();
        res = std::max(res, std::abs(real_side - complex_side));
      }
    }
    add("separable-state statistics match the complex side",
        "theory.separable_statistics", 2 * trials, res, kBornTol);
  }

  void separable_psd() {
    int violations = 0;
    for (int t = 0; t < trials; ++t) {
      const SeparableSpec spec = random_separable_spec(
          dims, 1 + static_cast<int>(rng.integer(4)), rng);
      const RealState state = make_separable(spec, CombinationRule::Tensor);
      if (!is_psd(eig_sym(state.vec.mat, kLoose))) ++violations;
    }
    add("Tensor-rule separable states are PSD", "theory.separable_psd",
        trials, static_cast<double>(violations), 0.0);
  }

  void dot_state_characterization() {
    int disagreements = 0;
    const Index cap_d = dims.product();
    for (int t = 0; t < trials; ++t) {
      ComplexMatrix h;
      if (t % 3 == 0) {
        h = random_density(cap_d, rng);
      } else if (t % 3 == 1) {
        h = random_indefinite_hermitian(cap_d, rng);
        h += ComplexMatrix::Identity(cap_d, cap_d) / static_cast<double>(cap_d);
        h /= h.trace().real();  // unit trace but possibly indefinite
      } else {
        h = 2.0 * random_density(cap_d, rng);  // PSD but wrong trace
      }
      const MappedVector v = map_m_lifted(h, dims, CombinationRule::Dot);
      const bool membership = is_state(v, kLoose);
      const bool real_characterization =
          is_psd(eig_sym(v.mat, kLoose)) &&
          std::abs(v.mat.trace() - 1.0) <= kLoose;
      if (membership != real_characterization) ++disagreements;
    }
    add("Dot-rule states are exactly the PSD trace-one matrices",
        "theory.dot_state_characterization", trials,
        static_cast<double>(disagreements), 0.0);
  }

  void witness_soundness() {
    const int n = std::max(trials, 500);
    int fired = 0;
    for (int t = 0; t < n; ++t) {
      const SeparableSpec spec = random_separable_spec(
          dims, 1 + static_cast<int>(rng.integer(4)), rng);
      const RealState state = make_separable(spec, CombinationRule::Tensor);
      if (witness(state.vec).verdict == Verdict::Entangled) ++fired;
    }
    add("witness never fires on separable states",
        "theory.witness_soundness", n, static_cast<double>(fired), 0.0);
  }

  void dynamics_group() {
    double res = 0.0;
    for (int t = 0; t < trials; ++t) {
      const Index d = pick_dim(t);
      const RealMatrix eye = RealMatrix::Identity(2 * d, 2 * d);
      const RealMatrix j = j_mat(d);
      const DynamicsImage u1 = unitary_image(random_unitary(d, rng));
      const DynamicsImage u2 = unitary_image(random_unitary(d, rng));
      const RealMatrix prod = u1.mat * u2.mat;
      res = std::max(res, max_abs(prod.transpose() * prod - eye));
      res = std::max(res, max_abs(prod * j - j * prod));
      const RealMatrix inv = u1.mat.transpose();
      res = std::max(res, max_abs(inv * j - j * inv));
      const DynamicsImage v1 = antiunitary_image(random_unitary(d, rng));
      const DynamicsImage v2 = antiunitary_image(random_unitary(d, rng));
      const RealMatrix anti_prod = v1.mat * v2.mat;
      res = std::max(res, max_abs(anti_prod.transpose() * anti_prod - eye));
      res = std::max(res, max_abs(anti_prod * j - j * anti_prod));
    }
    add("orthosymplectic images close under the group operations",
        "theory.dynamics_group", trials, res, kTight);
  }

  void state_convexity() {
    int violations = 0;
    const Index cap_d = dims.product();
    for (int t = 0; t < trials; ++t) {
      for (const auto rule : {CombinationRule::Tensor, CombinationRule::Dot}) {
        const double p = rng.uniform();
        const MappedVector v1 =
            map_m_lifted(random_density(cap_d, rng), dims, rule);
        const MappedVector v2 =
            map_m_lifted(random_density(cap_d, rng), dims, rule);
        MappedVector mix = v1;
        mix.mat = p * v1.mat + (1.0 - p) * v2.mat;
        if (!is_state(mix, kLoose)) ++violations;
        const ComplexMatrix g1 = ginibre(cap_d, rng);
        const ComplexMatrix g2 = ginibre(cap_d, rng);
        MappedVector emix = map_e((g1 * g1.adjoint()).eval(), dims, rule);
        const MappedVector e2 = map_e((g2 * g2.adjoint()).eval(), dims, rule);
        emix.mat = p * emix.mat + (1.0 - p) * e2.mat;
        if (!is_effect(emix, kLoose)) ++violations;
      }
    }
    add("state and effect sets are convex", "theory.state_convexity",
        2 * trials, static_cast<double>(violations), 0.0);
  }

  void run() {
    ring_homomorphism();
    real_linearity();
    scalar_action();
    isometry_factor();
    mapped_inner_product();
    positivity_equivalence();
    complement_orthogonality();
    dot_algebra();
    dot_basis_gram();
    wedge_absorption();
    phase_covariance();
    tensor_rule_anomaly();
    gmap_equivalence();
    negative_control();
    born_equivalence();
    separable_statistics();
    separable_psd();
    dot_state_characterization();
    witness_soundness();
    dynamics_group();
    state_convexity();
  }
};

}  // namespace

bool VerifyReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const PropertyRow& r) { return r.pass; });
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["trials"] = trials;
  j["dims"] = dims;
  j["tolerances"] = {{"algebraic", kTight},
                     {"spectral", kLoose},
                     {"born", kBornTol}};
  nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
  for (const PropertyRow& r : rows) {
    nlohmann::ordered_json row;
    row["property"] = r.property;
    row["anchor"] = r.anchor;
    row["trials"] = r.trials;
    row["max_residual"] = r.max_residual;
    row["threshold"] = r.threshold;
    if (r.inverted) row["expects_deviation"] = true;
    row["pass"] = r.pass;
    rows_json.push_back(std::move(row));
  }
  j["rows"] = std::move(rows_json);
  j["all_pass"] = all_pass();
  j["wall_time_ms"] = wall_time_ms;
  return j.dump(1);
}

VerifyReport run_verification(std::uint64_t seed, int trials,
                              const std::vector<Index>& dims) {
  const auto start = std::chrono::steady_clock::now();
  Suite suite(seed, trials, dims);
  suite.run();
  VerifyReport report;
  report.seed = seed;
  report.trials = trials;
  report.dims = dims;
  report.rows = std::move(suite.rows);
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace realqt::cli
