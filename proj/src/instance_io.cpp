// Copyright 2026 The mdregion Authors
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

#include "mdr/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mdr/error.hpp"

namespace mdr {
namespace {

using nlohmann::json;

constexpr double kSymmetryTol = 1e-12;

[[noreturn]] void fail(const std::string& what) {
  throw Error(ErrorKind::kInvalidInstance, what);
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(where + " must be finite");
  return x;
}

SpdMatrix read_matrix(const json& v, const std::string& name) {
  if (v.is_number()) return SpdMatrix::scalar(number(v, name));
  if (!v.is_array() || v.empty()) fail(name + " must be a non-empty matrix");
  const size_t n = v.size();
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != n) {
      fail(name + " must be square (row " + std::to_string(i) + ")");
    }
    for (size_t j = 0; j < n; ++j) {
      m(i, j) = number(row[j], name + "[" + std::to_string(i) + "][" +
                                   std::to_string(j) + "]");
    }
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
    fail("invariant violated: " + name + " must be symmetric");
  }
  return SpdMatrix(m);
}

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing key: ") + key);
  return *it;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("instance must be a JSON object");

  InstanceFile file;
  file.instance.Kx = read_matrix(require(doc, "Kx"), "Kx");
  file.instance.D0 = read_matrix(require(doc, "D0"), "D0");
  const json& d = require(doc, "D");
  if (!d.is_array()) fail("D must be an array of matrices");
  for (size_t l = 0; l < d.size(); ++l) {
    file.instance.D.push_back(read_matrix(d[l], "D[" + std::to_string(l) + "]"));
  }
  validate(file.instance);

  if (auto it = doc.find("beta"); it != doc.end()) {
    if (!it->is_array()) fail("beta must be an array");
    std::vector<double> beta;
    for (size_t l = 0; l < it->size(); ++l) {
      beta.push_back(number((*it)[l], "beta[" + std::to_string(l) + "]"));
    }
    if (static_cast<int>(beta.size()) != file.instance.L()) {
      fail("invariant violated: beta has one entry per description");
    }
    for (size_t l = 0; l < beta.size(); ++l) {
      if (!(beta[l] > 0.0)) {
        fail("invariant violated: beta[" + std::to_string(l) + "] > 0");
      }
    }
    file.beta = std::move(beta);
  }
  return file;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read instance file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json instance_to_json(const InstanceFile& file) {
  json doc;
  doc["Kx"] = matrix_to_json(file.instance.Kx.mat());
  doc["D0"] = matrix_to_json(file.instance.D0.mat());
  json d = json::array();
  for (const auto& m : file.instance.D) d.push_back(matrix_to_json(m.mat()));
  doc["D"] = std::move(d);
  if (file.beta) doc["beta"] = *file.beta;
  return doc;
}

}  // namespace mdr
