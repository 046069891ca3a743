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

#include "tubealg/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace tubealg {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a matrix");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) throw Error("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

json real_matrix_to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

RealMatrix real_matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected a matrix");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows ? static_cast<Eigen::Index>(j[0].size()) : 0;
  RealMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols) throw Error("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

json int_matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array()) throw Error("expected an integer matrix");
  const Eigen::Index n = static_cast<Eigen::Index>(j.size());
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != n) throw Error("matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!j[i][k].is_number_integer()) throw Error("matrix entries must be integers");
      m(i, k) = j[i][k].get<int>();
    }
  }
  return m;
}

void to_json(json& j, const ResidualEntry& e) { j = json{{"instance", e.instance}, {"residual", e.residual}}; }

void from_json(const json& j, ResidualEntry& e) {
  j.at("instance").get_to(e.instance);
  j.at("residual").get_to(e.residual);
}

void to_json(json& j, const ConsistencyReport& r) {
  j = json{{"check", r.check},           {"tolerance", r.tolerance}, {"passed", r.passed},
           {"max_residual", r.max_residual}, {"instances", r.instances}, {"failures", r.failures}};
}

void from_json(const json& j, ConsistencyReport& r) {
  j.at("check").get_to(r.check);
  j.at("tolerance").get_to(r.tolerance);
  j.at("passed").get_to(r.passed);
  j.at("max_residual").get_to(r.max_residual);
  j.at("instances").get_to(r.instances);
  j.at("failures").get_to(r.failures);
}

namespace mtc {

void to_json(json& j, const ModularData& md) {
  j = json{{"labels", md.labels},
           {"S", matrix_to_json(md.s_matrix)},
           {"T", matrix_to_json(md.t_matrix)},
           {"C", int_matrix_to_json(md.charge_conj)},
           {"lambda", complex_to_json(md.lambda)},
           {"global_dim", complex_to_json(md.global_dim)},
           {"tolerance", md.tolerance}};
}

void from_json(const json& j, ModularData& md) {
  j.at("labels").get_to(md.labels);
  md.s_matrix = matrix_from_json(j.at("S"));
  md.t_matrix = matrix_from_json(j.at("T"));
  md.charge_conj = int_matrix_from_json(j.at("C"));
  md.lambda = complex_from_json(j.at("lambda"));
  md.global_dim = complex_from_json(j.at("global_dim"));
  j.at("tolerance").get_to(md.tolerance);
}

}  // namespace mtc

namespace reps {

void to_json(json& j, const InvarianceReport& r) {
  j = json{{"check", r.check},
           {"commutator", r.commutator},
           {"generator", r.generator},
           {"traces", r.traces},
           {"consistent", r.consistent},
           {"commutator_residual", r.commutator_residual},
           {"generator_residual", r.generator_residual},
           {"trace_residual", r.trace_residual},
           {"pair_residuals", real_matrix_to_json(r.pair_residuals)},
           {"formula", r.formula},
           {"formula_residual", r.formula_residual},
           {"worst_residual", r.worst_residual}};
}

void from_json(const json& j, InvarianceReport& r) {
  j.at("check").get_to(r.check);
  j.at("commutator").get_to(r.commutator);
  j.at("generator").get_to(r.generator);
  j.at("traces").get_to(r.traces);
  j.at("consistent").get_to(r.consistent);
  j.at("commutator_residual").get_to(r.commutator_residual);
  j.at("generator_residual").get_to(r.generator_residual);
  j.at("trace_residual").get_to(r.trace_residual);
  r.pair_residuals = real_matrix_from_json(j.at("pair_residuals"));
  j.at("formula").get_to(r.formula);
  j.at("formula_residual").get_to(r.formula_residual);
  j.at("worst_residual").get_to(r.worst_residual);
}

void to_json(json& j, const ModularInvarianceReport& r) {
  j = json{{"t_invariance", r.t},
           {"s_invariance", r.s},
           {"unit_entry", r.unit_entry},
           {"modular_invariant", r.modular_invariant},
           {"trace_triple", r.trace_triple},
           {"consistent", r.consistent},
           {"recovered_z", int_matrix_to_json(r.recovered_z)}};
}

void from_json(const json& j, ModularInvarianceReport& r) {
  j.at("t_invariance").get_to(r.t);
  j.at("s_invariance").get_to(r.s);
  j.at("unit_entry").get_to(r.unit_entry);
  j.at("modular_invariant").get_to(r.modular_invariant);
  j.at("trace_triple").get_to(r.trace_triple);
  j.at("consistent").get_to(r.consistent);
  r.recovered_z = int_matrix_from_json(j.at("recovered_z"));
}

}  // namespace reps

std::string format_complex(Complex z, int precision) {
  const double eps = 0.5 * std::pow(10.0, -precision);
  double re = std::abs(z.real()) < eps ? 0.0 : z.real();
  double im = std::abs(z.imag()) < eps ? 0.0 : z.imag();
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision);
  if (im == 0.0) {
    os << re;
  } else if (re == 0.0) {
    os << im << "i";
  } else {
    os << re << (im < 0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

std::string format_matrix(const Matrix& m, int precision) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      cells.push_back(format_complex(m(i, k), precision));
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      os << (k ? "  " : "") << std::setw(static_cast<int>(width)) << cells[i * m.cols() + k];
    }
    os << "]\n";
  }
  return os.str();
}

std::string format_int_matrix(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (Eigen::Index k = 0; k < m.cols(); ++k) os << (k ? " " : "") << m(i, k);
    os << "]\n";
  }
  return os.str();
}

}  // namespace tubealg
