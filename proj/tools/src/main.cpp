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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "realqt/cli/commands.hpp"

namespace {

realqt::CombinationRule parse_rule(const std::string& rule) {
  return rule == "dot" ? realqt::CombinationRule::Dot
                       : realqt::CombinationRule::Tensor;
}

}  // namespace

int main(int argc, char** argv) {
  using realqt::Index;
  namespace cli = realqt::cli;

  CLI::App app{"Real-matrix representations of finite-dimensional quantum "
               "theory: conversion, combination, witnessing, verification"};
  app.require_subcommand(1);

  const cli::GlobalOpts opts = cli::global_opts_from_env();

  // convert
  std::string conv_in, conv_out, conv_rule = "tensor", conv_to = "real";
  std::vector<Index> conv_dims;
  auto* convert = app.add_subcommand("convert",
                                     "Map a matrix between the complex and "
                                     "real representations");
  convert->add_option("--rule", conv_rule, "Combination rule")
      ->check(CLI::IsMember({"tensor", "dot"}));
  convert->add_option("--to", conv_to, "Target side")
      ->check(CLI::IsMember({"real", "complex"}))
      ->required();
  convert->add_option("--dims", conv_dims, "Subsystem dimensions d1,d2,...")
      ->delimiter(',')
      ->required();
  convert->add_option("input", conv_in, "Input matrix file")->required();
  convert->add_option("output", conv_out, "Output matrix file")->required();

  // combine
  std::string comb_rule = "dot";
  std::vector<std::string> comb_files;
  auto* combine = app.add_subcommand("combine",
                                     "Left-fold a combination rule across "
                                     "real matrix files");
  combine->add_option("--rule", comb_rule, "Combination rule")
      ->check(CLI::IsMember({"tensor", "dot", "wedge"}));
  combine->add_option("files", comb_files,
                      "Input files followed by the output file")
      ->expected(-3);

  // witness
  std::string wit_in;
  std::vector<Index> wit_dims;
  auto* witness = app.add_subcommand("witness",
                                     "Entanglement witness on a Tensor-rule "
                                     "element");
  witness->add_option("--dims", wit_dims, "Subsystem dimensions")
      ->delimiter(',')
      ->required();
  witness->add_option("input", wit_in, "Input real matrix file")->required();

  // verify
  std::uint64_t seed = 0;
  int trials = 50;
  std::vector<Index> ver_dims{2, 2};
  auto* verify = app.add_subcommand("verify",
                                    "Run the full property suite and print "
                                    "a JSON report");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--trials", trials, "Trials per property")
      ->check(CLI::PositiveNumber);
  verify->add_option("--dims", ver_dims, "Subsystem dimensions")
      ->delimiter(',');

  auto* bell = app.add_subcommand("bell-demo",
                                  "Print the Bell-state images, spectra and "
                                  "witness verdict");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitParse;
  }

  if (convert->parsed()) {
    return cli::cmd_convert(conv_in, conv_out, parse_rule(conv_rule),
                            conv_to == "real", conv_dims, opts, std::cerr);
  }
  if (combine->parsed()) {
    std::vector<std::string> inputs(comb_files.begin(),
                                    comb_files.end() - 1);
    return cli::cmd_combine(inputs, comb_files.back(), comb_rule, opts,
                            std::cerr);
  }
  if (witness->parsed()) {
    return cli::cmd_witness(wit_in, wit_dims, opts, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    return cli::cmd_verify(seed, trials, ver_dims, std::cout);
  }
  if (bell->parsed()) {
    return cli::cmd_bell_demo(std::cout);
  }
  return cli::kExitParse;
}
