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

#include "realqt/cli/commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>

#include "realqt/cli/io.hpp"
#include "realqt/cli/verify.hpp"
#include "realqt/theory.hpp"

namespace realqt::cli {

namespace {

ComplexMatrix bell_density() {
  ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
  rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
  return rho;
}

void print_spectrum(std::ostream& out, const Spectrum& spec) {
  out << "[";
  for (std::size_t k = 0; k < spec.values.size(); ++k) {
    if (k) out << ", ";
    out << std::setprecision(10) << spec.values[k];
  }
  out << "]\n";
}

}  // namespace

GlobalOpts global_opts_from_env() {
  GlobalOpts opts;
  if (const char* env = std::getenv("REALQT_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end != env && tol > 0.0) {
      opts.decision_tol = tol;
      opts.witness_tol = tol;
    }
  }
  return opts;
}

int cmd_convert(const std::string& input, const std::string& output,
                CombinationRule rule, bool to_real,
                const std::vector<Index>& dims, const GlobalOpts& opts,
                std::ostream& err) {
  try {
    const MatrixFile file = read_matrix_file(input);
    const SystemDims sys(dims);
    if (to_real) {
      if (file.kind != MatrixFile::Kind::Complex ||
          file.side() != sys.product()) {
        err << "convert: input must be complex with side "
            << sys.product() << "\n";
        return kExitParse;
      }
      const ComplexMatrix m = file.as_complex();
      if (max_abs(m - m.adjoint()) > opts.decision_tol) {
        err << "convert: input matrix is not Hermitian\n";
        return kExitParse;
      }
      const MappedVector v = map_m_lifted(m, sys, rule);
      write_matrix_file(output, MatrixFile::real_matrix(dims, v.mat));
      return kExitOk;
    }
    if (file.kind != MatrixFile::Kind::Real ||
        file.side() != mapped_dim(rule, sys)) {
      err << "convert: input must be real with side "
          << mapped_dim(rule, sys) << "\n";
      return kExitParse;
    }
    const ComplexMatrix rho =
        map_m_inv(MappedVector{rule, sys, file.re});
    write_matrix_file(output, MatrixFile::complex_matrix(dims, rho));
    return kExitOk;
  } catch (const OutOfSubspace& e) {
    err << "convert: " << e.what() << "\n";
    return kExitOutOfSubspace;
  } catch (const FileFormatError& e) {
    err << "convert: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "convert: " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_combine(const std::vector<std::string>& inputs,
                const std::string& output, const std::string& rule,
                const GlobalOpts& opts, std::ostream& err) {
  try {
    std::vector<RealMatrix> mats;
    std::vector<Index> dims;
    for (const std::string& path : inputs) {
      const MatrixFile file = read_matrix_file(path);
      if (file.kind != MatrixFile::Kind::Real) {
        err << "combine: inputs must be real matrices\n";
        return kExitParse;
      }
      mats.push_back(file.re);
      dims.insert(dims.end(), file.dims.begin(), file.dims.end());
    }
    RealMatrix acc = mats.front();
    for (std::size_t k = 1; k < mats.size(); ++k) {
      if (rule == "tensor") {
        acc = kron(acc, mats[k]);
      } else if (rule == "wedge") {
        acc = wedge(acc, mats[k], opts.decision_tol);
      } else {  // dot
        const auto lhs = SpecialSymmetric::from_assembled(acc,
                                                          opts.decision_tol);
        const auto rhs = SpecialSymmetric::from_assembled(mats[k],
                                                          opts.decision_tol);
        acc = dot(lhs, rhs).assemble();
      }
    }
    write_matrix_file(output, MatrixFile::real_matrix(dims, std::move(acc)));
    return kExitOk;
  } catch (const JCommutationViolated& e) {
    err << "combine: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const NotSpecialSymmetric& e) {
    err << "combine: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const FileFormatError& e) {
    err << "combine: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "combine: " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_witness(const std::string& input, const std::vector<Index>& dims,
                const GlobalOpts& opts, std::ostream& out, std::ostream& err) {
  try {
    const MatrixFile file = read_matrix_file(input);
    const SystemDims sys(dims);
    if (file.kind != MatrixFile::Kind::Real ||
        file.side() != mapped_dim(CombinationRule::Tensor, sys)) {
      err << "witness: input must be a Tensor-rule real matrix of side "
          << mapped_dim(CombinationRule::Tensor, sys) << "\n";
      return kExitParse;
    }
    const MappedVector v{CombinationRule::Tensor, sys, file.re};
    const WitnessResult result = witness(v, opts.witness_tol);
    out << "min_eigenvalue=" << std::setprecision(17) << result.min_eigenvalue
        << " verdict="
        << (result.verdict == Verdict::Entangled ? "Entangled"
                                                 : "Inconclusive")
        << "\n";
    return result.verdict == Verdict::Entangled ? kExitEntangled : kExitOk;
  } catch (const NotATheoryElement& e) {
    err << "witness: " << e.what() << "\n";
    return kExitOutOfSubspace;
  } catch (const OutOfSubspace& e) {
    err << "witness: " << e.what() << "\n";
    return kExitOutOfSubspace;
  } catch (const FileFormatError& e) {
    err << "witness: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "witness: " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_verify(std::uint64_t seed, int trials, const std::vector<Index>& dims,
               std::ostream& out) {
  const VerifyReport report = run_verification(seed, trials, dims);
  out << report.to_json() << "\n";
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_bell_demo(std::ostream& out) {
  const ComplexMatrix bell = bell_density();
  const SystemDims dims({2, 2});
  const MappedVector tensor_image =
      map_m_lifted(bell, dims, CombinationRule::Tensor);
  const MappedVector dot_image = map_m_lifted(bell, dims, CombinationRule::Dot);

  out << "Bell-state image under the Tensor rule (a = 1/4), 16x16:\n";
  for (Index r = 0; r < tensor_image.mat.rows(); ++r) {
    for (Index c = 0; c < tensor_image.mat.cols(); ++c) {
      out << std::setw(9) << std::setprecision(4) << std::fixed
          << tensor_image.mat(r, c);
    }
    out << "\n";
  }
  out.unsetf(std::ios::fixed);
  out << "trace = " << tensor_image.mat.trace() << "\n";
  out << "spectrum: ";
  print_spectrum(out, eig_sym(tensor_image.mat));

  const WitnessResult result = witness(tensor_image);
  out << "witness: min_eigenvalue=" << result.min_eigenvalue << " verdict="
      << (result.verdict == Verdict::Entangled ? "Entangled" : "Inconclusive")
      << "\n";

  out << "\nBell-state image under the Dot rule (a = 1/2), 8x8 spectrum: ";
  print_spectrum(out, eig_sym(dot_image.mat));
  out << "trace = " << dot_image.mat.trace() << "\n";
  return kExitOk;
}

}  // namespace realqt::cli
