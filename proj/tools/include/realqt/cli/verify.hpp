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
#include <string>
#include <vector>

#include "realqt/combine.hpp"

namespace realqt::cli {

/// One verified property.  `max_residual` is the worst deviation observed
/// across all trials; for counting rows it is the number of disagreements.
/// `pass` compares the residual against `threshold` (most rows: residual
/// must stay below it; the negative-control row inverts the sense and must
/// exceed it).
struct PropertyRow {
  std::string property;
  std::string anchor;
  int trials = 0;
  double max_residual = 0.0;
  double threshold = 0.0;
  bool inverted = false;
  bool pass = false;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<Index> dims;
  std::vector<PropertyRow> rows;
  double wall_time_ms = 0.0;

  bool all_pass() const;
  /// Deterministic except for the wall_time_ms field.
  std::string to_json() const;
};

/// Runs the whole property suite.  Identical seeds give identical reports.
VerifyReport run_verification(std::uint64_t seed, int trials,
                              const std::vector<Index>& dims);

}  // namespace realqt::cli
