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

#include "realqt/cli/io.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace realqt::cli {

namespace {

RealMatrix array_to_matrix(const nlohmann::json& arr, const char* field) {
  if (!arr.is_array()) {
    throw FileFormatError(std::string("matrix file: '") + field +
                          "' must be an array");
  }
  const std::size_t len = arr.size();
  const auto side = static_cast<Index>(std::llround(std::sqrt(
      static_cast<double>(len))));
  if (side < 1 || static_cast<std::size_t>(side) * side != len) {
    throw FileFormatError(std::string("matrix file: '") + field +
                          "' length is not a perfect square");
  }
  RealMatrix m(side, side);
  for (Index r = 0; r < side; ++r) {
    for (Index c = 0; c < side; ++c) {
      const nlohmann::json& v = arr[static_cast<std::size_t>(r * side + c)];
      if (!v.is_number()) {
        throw FileFormatError(std::string("matrix file: '") + field +
                              "' holds a non-numeric entry");
      }
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        throw FileFormatError(std::string("matrix file: '") + field +
                              "' holds a non-finite entry");
      }
      m(r, c) = x;
    }
  }
  return m;
}

nlohmann::json matrix_to_array(const RealMatrix& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) arr.push_back(m(r, c));
  }
  return arr;
}

}  // namespace

ComplexMatrix MatrixFile::as_complex() const {
  if (kind != Kind::Complex) {
    throw FileFormatError("matrix file: expected a complex matrix");
  }
  return re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
}

MatrixFile MatrixFile::complex_matrix(std::vector<Index> dims,
                                      const ComplexMatrix& m) {
  MatrixFile f;
  f.kind = Kind::Complex;
  f.dims = std::move(dims);
  f.re = m.real();
  f.im = m.imag();
  return f;
}

MatrixFile MatrixFile::real_matrix(std::vector<Index> dims, RealMatrix m) {
  MatrixFile f;
  f.kind = Kind::Real;
  f.dims = std::move(dims);
  f.re = std::move(m);
  return f;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FileFormatError("cannot parse '" + path + "': " + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("dims") ||
      !j.contains("re")) {
    throw FileFormatError("matrix file: missing required field");
  }
  MatrixFile f;
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "complex") {
    f.kind = MatrixFile::Kind::Complex;
  } else if (kind == "real") {
    f.kind = MatrixFile::Kind::Real;
  } else {
    throw FileFormatError("matrix file: unknown kind '" + kind + "'");
  }
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<Index>() < 1) {
      throw FileFormatError("matrix file: dims must be positive integers");
    }
    f.dims.push_back(d.get<Index>());
  }
  if (f.dims.empty()) throw FileFormatError("matrix file: dims is empty");
  f.re = array_to_matrix(j["re"], "re");
  if (f.kind == MatrixFile::Kind::Complex) {
    if (!j.contains("im")) {
      throw FileFormatError("matrix file: complex matrix lacks 'im'");
    }
    f.im = array_to_matrix(j["im"], "im");
    if (f.im.rows() != f.re.rows()) {
      throw FileFormatError("matrix file: 're' and 'im' sizes disagree");
    }
    Index product = 1;
    for (Index d : f.dims) product *= d;
    if (f.re.rows() != product) {
      throw FileFormatError(
          "matrix file: complex side does not match dims product");
    }
  } else if (j.contains("im")) {
    throw FileFormatError("matrix file: real matrix carries an 'im' field");
  }
  return f;
}

void write_matrix_file(const std::string& path, const MatrixFile& file) {
  nlohmann::ordered_json j;
  j["kind"] = file.kind == MatrixFile::Kind::Complex ? "complex" : "real";
  j["dims"] = file.dims;
  j["re"] = matrix_to_array(file.re);
  if (file.kind == MatrixFile::Kind::Complex) {
    j["im"] = matrix_to_array(file.im);
  }
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot write '" + path + "'");
  out << j.dump(1) << "\n";
}

}  // namespace realqt::cli
