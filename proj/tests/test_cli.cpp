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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <doctest.h>

#include "realqt/cli/commands.hpp"
#include "realqt/cli/io.hpp"
#include "realqt/cli/verify.hpp"
#include "realqt/random.hpp"
#include "reference_data.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

using namespace realqt;
namespace cli = realqt::cli;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("realqt_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

std::string strip_wall_time(std::string json) {
  return std::regex_replace(json,
                            std::regex("\"wall_time_ms\": [0-9.eE+-]+"),
                            "\"wall_time_ms\": 0");
}

}  // namespace

TEST_CASE("matrix file round-trip") {
  TempDir dir;
  Prng rng(81);
  const ComplexMatrix m = ginibre(3, rng);
  const auto path = dir.file("m.json");
  cli::write_matrix_file(path,
                         cli::MatrixFile::complex_matrix({3}, m));
  const cli::MatrixFile back = cli::read_matrix_file(path);
  CHECK(back.kind == cli::MatrixFile::Kind::Complex);
  CHECK(back.dims == std::vector<Index>{3});
  CHECK(max_abs(back.as_complex() - m) == 0.0);  // lossless on write + read

  RealMatrix r(2, 2);
  r << 0.1, -2.5e-17, 3.0, 4.0;
  const auto rpath = dir.file("r.json");
  cli::write_matrix_file(rpath, cli::MatrixFile::real_matrix({1}, r));
  CHECK(max_abs(cli::read_matrix_file(rpath).re - r) == 0.0);
}

TEST_CASE("matrix file validation") {
  TempDir dir;
  const auto bad = dir.file("bad.json");
  std::ofstream(bad) << "{\"kind\": \"complex\", \"dims\": [2]}";
  CHECK_THROWS_AS(cli::read_matrix_file(bad), cli::FileFormatError);
  std::ofstream(bad) << "{\"kind\": \"real\", \"dims\": [2], \"re\": [1, 2, 3]}";
  CHECK_THROWS_AS(cli::read_matrix_file(bad), cli::FileFormatError);
  CHECK_THROWS_AS(cli::read_matrix_file(dir.file("missing.json")),
                  cli::FileFormatError);
}

TEST_CASE("convert round-trips through the real representation") {
  TempDir dir;
  Prng rng(82);
  const cli::GlobalOpts opts;
  std::ostringstream err;
  const ComplexMatrix rho = random_density(4, rng);
  const auto in = dir.file("in.json");
  const auto mid = dir.file("mid.json");
  const auto out = dir.file("out.json");
  cli::write_matrix_file(in, cli::MatrixFile::complex_matrix({2, 2}, rho));

  for (const auto rule : {CombinationRule::Tensor, CombinationRule::Dot}) {
    REQUIRE(cli::cmd_convert(in, mid, rule, /*to_real=*/true, {2, 2}, opts,
                             err) == cli::kExitOk);
    REQUIRE(cli::cmd_convert(mid, out, rule, /*to_real=*/false, {2, 2}, opts,
                             err) == cli::kExitOk);
    CHECK(max_abs(cli::read_matrix_file(out).as_complex() - rho) < 1e-10);
  }

  // Dot rule, identity: the written matrix is half the doubled identity
  cli::write_matrix_file(
      in, cli::MatrixFile::complex_matrix({2},
                                          ComplexMatrix::Identity(2, 2)));
  REQUIRE(cli::cmd_convert(in, mid, CombinationRule::Dot, true, {2}, opts,
                           err) == cli::kExitOk);
  CHECK(max_abs(cli::read_matrix_file(mid).re -
                0.5 * RealMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("convert error codes") {
  TempDir dir;
  const cli::GlobalOpts opts;
  std::ostringstream err;
  CHECK(cli::cmd_convert(dir.file("nope.json"), dir.file("o.json"),
                         CombinationRule::Dot, true, {2}, opts,
                         err) == cli::kExitParse);

  // real matrix outside the representable subspace
  RealMatrix junk = RealMatrix::Zero(16, 16);
  junk(0, 0) = 1.0;
  const auto jpath = dir.file("junk.json");
  cli::write_matrix_file(jpath, cli::MatrixFile::real_matrix({2, 2}, junk));
  CHECK(cli::cmd_convert(jpath, dir.file("o.json"), CombinationRule::Tensor,
                         false, {2, 2}, opts, err) ==
        cli::kExitOutOfSubspace);

  // wrong shape for the declared dims
  Prng rng(83);
  const auto small = dir.file("small.json");
  cli::write_matrix_file(
      small, cli::MatrixFile::complex_matrix({2}, random_density(2, rng)));
  CHECK(cli::cmd_convert(small, dir.file("o.json"), CombinationRule::Dot,
                         true, {2, 2}, opts, err) == cli::kExitParse);
}

TEST_CASE("combine folds rules over files") {
  TempDir dir;
  Prng rng(84);
  const cli::GlobalOpts opts;
  std::ostringstream err;
  const ComplexMatrix h = random_hermitian(2, rng);
  const ComplexMatrix l = random_hermitian(2, rng);
  const auto a = dir.file("a.json");
  const auto b = dir.file("b.json");
  const auto out = dir.file("out.json");
  cli::write_matrix_file(a, cli::MatrixFile::real_matrix({2}, gamma(h)));
  cli::write_matrix_file(b, cli::MatrixFile::real_matrix({2}, gamma(l)));

  REQUIRE(cli::cmd_combine({a, b}, out, "dot", opts, err) == cli::kExitOk);
  CHECK(max_abs(cli::read_matrix_file(out).re - gamma(kron(h, l))) < 1e-12);

  REQUIRE(cli::cmd_combine({a, b}, out, "tensor", opts, err) == cli::kExitOk);
  CHECK(max_abs(cli::read_matrix_file(out).re - kron(gamma(h), gamma(l))) <
        1e-12);

  REQUIRE(cli::cmd_combine({a, b}, out, "wedge", opts, err) == cli::kExitOk);
  CHECK(max_abs(cli::read_matrix_file(out).re - wedge(gamma(h), gamma(l))) <
        1e-12);

  // three-factor associativity of the dot fold
  const ComplexMatrix k = random_hermitian(2, rng);
  const auto c = dir.file("c.json");
  cli::write_matrix_file(c, cli::MatrixFile::real_matrix({2}, gamma(k)));
  REQUIRE(cli::cmd_combine({a, b, c}, out, "dot", opts, err) == cli::kExitOk);
  CHECK(max_abs(cli::read_matrix_file(out).re -
                gamma(kron(kron(h, l), k))) < 1e-12);

  // three-factor wedge fold: the binary image still commutes with its own
  // J, so the left fold stays inside the wedge's precondition
  REQUIRE(cli::cmd_combine({a, b, c}, out, "wedge", opts, err) ==
          cli::kExitOk);
  CHECK(max_abs(cli::read_matrix_file(out).re -
                wedge(wedge(gamma(h), gamma(l)), gamma(k))) < 1e-12);

  // J-commutation violation
  RealMatrix z = RealMatrix::Identity(4, 4);
  z.bottomRightCorner(2, 2) *= -1.0;
  const auto zpath = dir.file("z.json");
  cli::write_matrix_file(zpath, cli::MatrixFile::real_matrix({2}, z));
  CHECK(cli::cmd_combine({zpath, b}, out, "wedge", opts, err) ==
        cli::kExitPrecondition);
  CHECK(cli::cmd_combine({zpath, b}, out, "dot", opts, err) ==
        cli::kExitPrecondition);
}

TEST_CASE("REALQT_TOL overrides the decision tolerances") {
  setenv("REALQT_TOL", "1e-3", 1);
  const cli::GlobalOpts loose = cli::global_opts_from_env();
  CHECK(loose.decision_tol == doctest::Approx(1e-3));
  CHECK(loose.witness_tol == doctest::Approx(1e-3));
  setenv("REALQT_TOL", "not a number", 1);
  const cli::GlobalOpts fallback = cli::global_opts_from_env();
  CHECK(fallback.decision_tol == doctest::Approx(kPsdTol));
  unsetenv("REALQT_TOL");
  const cli::GlobalOpts defaults = cli::global_opts_from_env();
  CHECK(defaults.decision_tol == doctest::Approx(kPsdTol));
  CHECK(defaults.witness_tol == doctest::Approx(kWitnessTol));
}

TEST_CASE("witness command") {
  TempDir dir;
  const cli::GlobalOpts opts;
  std::ostringstream out, err;
  const SystemDims dims({2, 2});

  const MappedVector bell =
      map_m_lifted(testdata::bell_density(), dims, CombinationRule::Tensor);
  const auto bell_path = dir.file("bell.json");
  cli::write_matrix_file(bell_path,
                         cli::MatrixFile::real_matrix({2, 2}, bell.mat));
  CHECK(cli::cmd_witness(bell_path, {2, 2}, opts, out, err) ==
        cli::kExitEntangled);
  CHECK(out.str().find("Entangled") != std::string::npos);

  Prng rng(85);
  const MappedVector prod =
      map_m({random_density(2, rng), random_density(2, rng)},
            CombinationRule::Tensor);
  const auto prod_path = dir.file("prod.json");
  cli::write_matrix_file(prod_path,
                         cli::MatrixFile::real_matrix({2, 2}, prod.mat));
  out.str("");
  CHECK(cli::cmd_witness(prod_path, {2, 2}, opts, out, err) == cli::kExitOk);
  CHECK(out.str().find("Inconclusive") != std::string::npos);

  RealMatrix junk = RealMatrix::Zero(16, 16);
  junk(0, 0) = 1.0;
  const auto junk_path = dir.file("junk.json");
  cli::write_matrix_file(junk_path,
                         cli::MatrixFile::real_matrix({2, 2}, junk));
  CHECK(cli::cmd_witness(junk_path, {2, 2}, opts, out, err) ==
        cli::kExitOutOfSubspace);
}

TEST_CASE("verification report is deterministic and complete") {
  const cli::VerifyReport a = cli::run_verification(7, 8, {2, 2});
  const cli::VerifyReport b = cli::run_verification(7, 8, {2, 2});
  CHECK(strip_wall_time(a.to_json()) == strip_wall_time(b.to_json()));
  CHECK(a.all_pass());

  // every invariant appears exactly once
  const std::vector<std::string> anchors = {
      "gamma.ring_homomorphism",      "gamma.real_linearity",
      "gamma.scalar_action",          "gamma.isometry_factor",
      "gamma.mapped_inner_product",   "gamma.positivity_equivalence",
      "gamma.complement_orthogonality",
      "combine.dot_algebra",          "combine.dot_basis_gram",
      "combine.wedge_absorption",     "combine.phase_covariance",
      "combine.tensor_rule_anomaly",  "combine.gmap_equivalence",
      "combine.negative_control",     "theory.born_equivalence",
      "theory.separable_statistics",  "theory.separable_psd",
      "theory.dot_state_characterization", "theory.witness_soundness",
      "theory.dynamics_group",        "theory.state_convexity"};
  REQUIRE(a.rows.size() == anchors.size());
  for (const std::string& anchor : anchors) {
    int count = 0;
    for (const auto& row : a.rows) {
      if (row.anchor == anchor) ++count;
    }
    CHECK_MESSAGE(count == 1, "anchor ", anchor, " appears ", count,
                  " times");
  }
  // a different seed still passes
  CHECK(cli::run_verification(12345, 8, {2, 2}).all_pass());
}

TEST_CASE("bell demo prints the witness verdict") {
  std::ostringstream out;
  CHECK(cli::cmd_bell_demo(out) == cli::kExitOk);
  CHECK(out.str().find("Entangled") != std::string::npos);
  CHECK(out.str().find("spectrum") != std::string::npos);
}

#ifdef REALQT_BIN_PATH
TEST_CASE("command-line binary smoke test") {
  TempDir dir;
  Prng rng(86);
  const auto in = dir.file("in.json");
  const auto out = dir.file("out.json");
  cli::write_matrix_file(
      in, cli::MatrixFile::complex_matrix({2, 2}, random_density(4, rng)));
  const std::string base = std::string("\"") + REALQT_BIN_PATH + "\"";
  const auto run = [](const std::string& cmd) {
    const int status = std::system(cmd.c_str());
#ifdef __unix__
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#else
    return status;
#endif
  };
  CHECK(run(base + " convert --rule dot --to real --dims 2,2 " + in + " " +
            out + " >/dev/null 2>&1") == cli::kExitOk);
  CHECK(run(base + " verify --seed 3 --trials 4 >/dev/null 2>&1") ==
        cli::kExitOk);
  CHECK(run(base + " witness --dims 2,2 " + in + " >/dev/null 2>&1") ==
        cli::kExitParse);  // complex input where a real one is required
  CHECK(run(base + " bell-demo >/dev/null 2>&1") == cli::kExitOk);
  CHECK(run(base + " nonsense >/dev/null 2>&1") == cli::kExitParse);
}
#endif
