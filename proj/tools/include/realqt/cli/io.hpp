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

#include <string>
#include <vector>

#include "realqt/matcore.hpp"

namespace realqt::cli {

/// Raised for unreadable, malformed, or non-finite matrix files.
struct FileFormatError : Error {
  using Error::Error;
};

/// On-disk matrix container.  JSON object with fields "kind"
/// ("complex" | "real"), "dims" (subsystem dimensions), "re" and, for
/// complex matrices, "im"; both arrays row-major.
struct MatrixFile {
  enum class Kind { Complex, Real };

  Kind kind = Kind::Real;
  std::vector<Index> dims;
  RealMatrix re;
  RealMatrix im;  // empty for real files

  Index side() const { return re.rows(); }
  ComplexMatrix as_complex() const;

  static MatrixFile complex_matrix(std::vector<Index> dims,
                                   const ComplexMatrix& m);
  static MatrixFile real_matrix(std::vector<Index> dims, RealMatrix m);
};

MatrixFile read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const MatrixFile& file);

}  // namespace realqt::cli
