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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "realqt/combine.hpp"

namespace realqt::cli {

// Exit codes shared by all subcommands.  Stable contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitOutOfSubspace = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitEntangled = 10;

/// Decision tolerances, optionally overridden by REALQT_TOL.
struct GlobalOpts {
  double decision_tol = kPsdTol;
  double witness_tol = kWitnessTol;
};

/// Reads REALQT_TOL from the environment when present.
GlobalOpts global_opts_from_env();

int cmd_convert(const std::string& input, const std::string& output,
                CombinationRule rule, bool to_real,
                const std::vector<Index>& dims, const GlobalOpts& opts,
                std::ostream& err);

int cmd_combine(const std::vector<std::string>& inputs,
                const std::string& output, const std::string& rule,
                const GlobalOpts& opts, std::ostream& err);

int cmd_witness(const std::string& input, const std::vector<Index>& dims,
                const GlobalOpts& opts, std::ostream& out, std::ostream& err);

int cmd_verify(std::uint64_t seed, int trials, const std::vector<Index>& dims,
               std::ostream& out);

int cmd_bell_demo(std::ostream& out);

}  // namespace realqt::cli
