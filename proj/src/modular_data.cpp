// Copyright 2026 The tubealg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tubealg/modular_data.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tubealg::mtc {

namespace {

Complex scalar_ratio(const Matrix& num, const Matrix& den, double tol) {
  Eigen::FullPivLU<Matrix> lu(den);
  if (!lu.isInvertible()) throw ModularDataError("S matrix is singular (non-modular input)");
  Matrix q = num * lu.inverse();
  Complex lambda = q(0, 0);
  Matrix expect = lambda * Matrix::Identity(q.rows(), q.cols());
  if (normalized_residual(q, expect) > std::max(tol, 1e-8)) {
    throw ModularDataError("(ST)^3 (S^2)^-1 is not scalar (corrupt input data)");
  }
  return lambda;
}

void finish(ModularData& md) {
  const int n = md.rank();
  Eigen::FullPivLU<Matrix> lu(md.s_matrix);
  if (!lu.isInvertible()) throw ModularDataError("S matrix is singular (non-modular input)");
  Matrix st = md.s_matrix * md.t_matrix;
  md.lambda = scalar_ratio(st * st * st, md.s_matrix * md.s_matrix, md.tolerance);
  if (md.charge_conj.size() == 0) {
    Matrix s2 = md.s_matrix * md.s_matrix;
    md.global_dim = s2(0, 0);
    if (std::abs(md.global_dim) < md.tolerance) throw ModularDataError("S^2 has vanishing (1,1) entry");
    md.charge_conj = IntMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Complex v = s2(i, j) / md.global_dim;
        long r = std::lround(v.real());
        if (std::abs(v - Complex(static_cast<double>(r))) > 1e-6 || (r != 0 && r != 1)) {
          throw ModularDataError("S^2 is not a multiple of a permutation matrix");
        }
        md.charge_conj(i, j) = static_cast<int>(r);
      }
  }
}

}  // namespace

ModularData compute_modular_data(const MTCData& cat) {
  const int n = cat.rank();
  const auto& ring = cat.ring();
  ModularData md;
  md.labels = ring.names();
  md.tolerance = cat.tolerance();
  md.global_dim = cat.global_dim();
  md.s_matrix = Matrix::Zero(n, n);
  md.t_matrix = Matrix::Zero(n, n);
  md.charge_conj = IntMatrix::Zero(n, n);
  for (Label i = 0; i < n; ++i) {
    md.t_matrix(i, i) = cat.twist(i);
    md.charge_conj(i, ring.dual(i)) = 1;
    for (Label j = 0; j < n; ++j) {
      Complex sum = 0.0;
      for (Label c : ring.channels(ring.dual(i), j)) sum += cat.twist(c) * cat.qdim(c);
      md.s_matrix(i, j) = sum / (cat.twist(i) * cat.twist(j));
    }
  }
  finish(md);
  return md;
}

ConsistencyReport verify_modular_relations(const ModularData& md) {
  ConsistencyReport report("modular_relations", md.tolerance);
  const Matrix& S = md.s_matrix;
  const Matrix& T = md.t_matrix;
  Matrix C = md.charge_conj.cast<Complex>();
  Matrix st = S * T;
  Matrix s2 = S * S;
  report.record("(ST)^3 = lambda S^2", normalized_residual(st * st * st, md.lambda * s2));
  report.record("S^2 = d(C) C", normalized_residual(s2, md.global_dim * C));
  report.record("TC = CT", normalized_residual(T * C, C * T));
  return report;
}

ConsistencyReport verify_modular_relations(const ModularData& md, const MTCData& cat) {
  ConsistencyReport report = verify_modular_relations(md);
  report.record("d(C) = sum d(I)^2", scalar_residual(md.global_dim, cat.global_dim()));
  return report;
}

namespace {

Matrix read_matrix(const nlohmann::json& j, const char* key) {
  if (!j.is_array() || j.empty()) throw LoadError(std::string("schema violation: ") + key + " must be a matrix");
  const std::size_t n = j.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) {
      throw LoadError(std::string("schema violation: ") + key + " must be square");
    }
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = j[r][c];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw LoadError("schema violation: scalar must be [re, im]");
      }
      m(r, c) = Complex(v[0].get<double>(), v[1].get<double>());
    }
  }
  return m;
}

}  // namespace

ModularData load_modular_data_string(const std::string& text, double tolerance) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LoadError(std::string("schema violation: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw LoadError("schema violation: top level must be an object");
  static const std::set<std::string> known{"S", "T", "labels"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw LoadError("schema violation: unknown key '" + key + "'");
  }
  if (!doc.contains("S") || !doc.contains("T")) throw LoadError("schema violation: S and T are required");
  ModularData md;
  md.tolerance = tolerance;
  md.s_matrix = read_matrix(doc["S"], "S");
  md.t_matrix = read_matrix(doc["T"], "T");
  const int n = md.rank();
  if (md.t_matrix.rows() != n) throw LoadError("schema violation: S and T differ in size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j && std::abs(md.t_matrix(i, j)) > tolerance) throw ModularDataError("T is not diagonal");
    }
  if (doc.contains("labels")) {
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw LoadError("schema violation: labels must be strings");
      md.labels.push_back(l.get<std::string>());
    }
    if (static_cast<int>(md.labels.size()) != n) throw LoadError("schema violation: labels has wrong length");
  } else {
    for (int i = 0; i < n; ++i) md.labels.push_back(std::to_string(i));
  }
  finish(md);
  return md;
}

ModularData load_modular_data_file(const std::filesystem::path& path, double tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open modular data file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_modular_data_string(buf.str(), tolerance);
}

}  // namespace tubealg::mtc
