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

#include "tubealg/mtc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tubealg::mtc {

namespace {

using json = nlohmann::json;

std::string tuple_str(std::initializer_list<Label> labels) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (Label l : labels) {
    if (!first) os << ",";
    os << l;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

FusionRing::FusionRing(std::vector<std::string> names, std::vector<Label> dual,
                       const std::vector<std::array<Label, 3>>& triples)
    : names_(std::move(names)), dual_(std::move(dual)) {
  const int n = rank();
  if (n == 0) throw LoadError("schema violation: empty label set");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw LoadError("schema violation: duplicate label names");
  if (static_cast<int>(dual_.size()) != n) throw LoadError("schema violation: dual has wrong length");
  for (Label a = 0; a < n; ++a) {
    if (dual_[a] < 0 || dual_[a] >= n) throw LoadError("schema violation: dual index out of range");
  }
  for (Label a = 0; a < n; ++a) {
    if (dual_[dual_[a]] != a) throw LoadError("non-involutive dual map at label " + names_[a]);
  }
  if (dual_[0] != 0) throw LoadError("non-involutive dual map: unit is not self-dual");

  fusion_.assign(static_cast<std::size_t>(n) * n * n, 0);
  for (const auto& t : triples) {
    for (Label x : t) {
      if (x < 0 || x >= n) throw LoadError("schema violation: fusion label out of range");
    }
    int& slot = fusion_[index(t[0], t[1], t[2])];
    if (slot != 0) {
      throw LoadError("fusion multiplicity >= 2 is unsupported at " + tuple_str({t[0], t[1], t[2]}));
    }
    slot = 1;
  }
  for (Label a = 0; a < n; ++a) {
    for (Label c = 0; c < n; ++c) {
      if (N(0, a, c) != (a == c ? 1 : 0) || N(a, 0, c) != (a == c ? 1 : 0)) {
        throw LoadError("unit axiom violated: N_{1" + names_[a] + "}^" + names_[c]);
      }
      if (N(a, c, 0) != (c == dual_[a] ? 1 : 0)) {
        throw LoadError("duality mismatch: N_{" + names_[a] + " " + names_[c] + "}^1 disagrees with dual map");
      }
    }
  }
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) {
        for (Label d = 0; d < n; ++d) {
          int lhs = 0, rhs = 0;
          for (Label e = 0; e < n; ++e) {
            lhs += N(a, b, e) * N(e, c, d);
            rhs += N(b, c, e) * N(a, e, d);
          }
          if (lhs != rhs) throw LoadError("fusion rules are not associative at " + tuple_str({a, b, c, d}));
        }
      }
    }
  }
  channels_.resize(static_cast<std::size_t>(n) * n);
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) {
        if (N(a, b, c)) channels_[a * n + b].push_back(c);
      }
    }
  }
}

std::optional<Label> FusionRing::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Label>(it - names_.begin());
}

std::vector<double> FusionRing::frobenius_perron_dims() const {
  const int n = rank();
  std::vector<double> dims(n);
  for (Label a = 0; a < n; ++a) {
    RealMatrix m(n, n);
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) m(c, b) = N(a, b, c);
    }
    Eigen::EigenSolver<RealMatrix> es(m, false);
    double best = 0.0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      best = std::max(best, std::abs(es.eigenvalues()(i)));
    }
    dims[a] = best;
  }
  return dims;
}

int FMatrix::row_of(Label e) const {
  auto it = std::find(rows.begin(), rows.end(), e);
  return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
}

int FMatrix::col_of(Label f) const {
  auto it = std::find(cols.begin(), cols.end(), f);
  return it == cols.end() ? -1 : static_cast<int>(it - cols.begin());
}

MTCData::MTCData(FusionRing ring, std::map<std::array<Label, 6>, Complex> f_symbols,
                 std::map<std::array<Label, 3>, Complex> r_symbols, std::optional<std::vector<Complex>> qdim,
                 std::optional<std::vector<Complex>> twist, double tolerance)
    : ring_(std::move(ring)), f_(std::move(f_symbols)), r_(std::move(r_symbols)), tolerance_(tolerance) {
  if (!(tolerance_ > 0.0)) throw LoadError("tolerance must be positive");
  const int n = rank();
  const auto& N = ring_;

  for (const auto& [key, value] : f_) {
    auto [a, b, c, d, e, f] = key;
    if (!(N.N(a, b, e) && N.N(e, c, d) && N.N(b, c, f) && N.N(a, f, d))) {
      throw LoadError("schema violation: F-symbol given for non-admissible labels " + tuple_str({a, b, c, d, e, f}));
    }
  }
  for (const auto& [key, value] : r_) {
    auto [a, b, c] = key;
    if (!N.N(a, b, c)) {
      throw LoadError("schema violation: R-symbol given for non-admissible labels " + tuple_str({a, b, c}));
    }
    if (std::abs(value) < tolerance_) throw LoadError("R-symbol vanishes at " + tuple_str({a, b, c}));
  }

  // Missing symbols with a unit leg default to 1; every other admissible entry is required.
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c = 0; c < n; ++c) {
        for (Label d = 0; d < n; ++d) {
          FMatrix fm;
          for (Label e = 0; e < n; ++e) {
            if (N.N(a, b, e) && N.N(e, c, d)) fm.rows.push_back(e);
          }
          for (Label f = 0; f < n; ++f) {
            if (N.N(b, c, f) && N.N(a, f, d)) fm.cols.push_back(f);
          }
          if (fm.rows.empty() && fm.cols.empty()) continue;
          if (fm.rows.size() != fm.cols.size()) throw LoadError("fusion rules give a non-square F-matrix");
          fm.value = Matrix::Zero(fm.rows.size(), fm.cols.size());
          for (std::size_t i = 0; i < fm.rows.size(); ++i) {
            for (std::size_t j = 0; j < fm.cols.size(); ++j) {
              std::array<Label, 6> key{a, b, c, d, fm.rows[i], fm.cols[j]};
              auto it = f_.find(key);
              if (it == f_.end()) {
                if (a == 0 || b == 0 || c == 0) {
                  f_[key] = 1.0;
                  fm.value(i, j) = 1.0;
                } else {
                  throw LoadError("schema violation: missing F-symbol " +
                                  tuple_str({a, b, c, d, fm.rows[i], fm.cols[j]}));
                }
              } else {
                fm.value(i, j) = it->second;
              }
            }
          }
          Eigen::FullPivLU<Matrix> lu(fm.value);
          if (!lu.isInvertible()) throw LoadError("singular F-matrix at " + tuple_str({a, b, c, d}));
          fm.inverse = lu.inverse();
          f_matrices_.emplace(std::array<Label, 4>{a, b, c, d}, std::move(fm));
        }
      }
    }
  }
  for (Label a = 0; a < n; ++a) {
    for (Label b = 0; b < n; ++b) {
      for (Label c : N.channels(a, b)) {
        std::array<Label, 3> key{a, b, c};
        if (r_.count(key)) continue;
        if (a == 0 || b == 0) {
          r_[key] = 1.0;
        } else {
          throw LoadError("schema violation: missing R-symbol " + tuple_str({a, b, c}));
        }
      }
    }
  }

  auto fp = ring_.frobenius_perron_dims();
  if (qdim) {
    if (static_cast<int>(qdim->size()) != n) throw LoadError("schema violation: qdim has wrong length");
    for (Label a = 0; a < n; ++a) {
      if (scalar_residual((*qdim)[a], fp[a]) > 1e3 * tolerance_) {
        throw LoadError("inconsistent dimensions: qdim of " + ring_.name(a) + " contradicts the fusion rules");
      }
    }
    qdim_ = *qdim;
  } else {
    qdim_.assign(fp.begin(), fp.end());
  }
  if (scalar_residual(qdim_[0], 1.0) > tolerance_) throw LoadError("inconsistent dimensions: d(1) != 1");
  for (Label a = 0; a < n; ++a) {
    if (scalar_residual(qdim_[a], qdim_[ring_.dual(a)]) > tolerance_) {
      throw LoadError("inconsistent dimensions: d(I) != d(I^v) for " + ring_.name(a));
    }
    for (Label b = 0; b < n; ++b) {
      Complex sum = 0.0;
      for (Label c : ring_.channels(a, b)) sum += qdim_[c];
      if (scalar_residual(qdim_[a] * qdim_[b], sum) > 1e3 * tolerance_) {
        throw LoadError("inconsistent dimensions: d(a)d(b) != sum_c N d(c)");
      }
    }
  }

  global_dim_ = 0.0;
  for (Label a = 0; a < n; ++a) global_dim_ += qdim_[a] * qdim_[a];
  if (std::abs(global_dim_) < tolerance_) throw LoadError("global dimension vanishes");

  // theta_a = sum_c (d_c / d_a) R^{aa}_c
  std::vector<Complex> computed(n);
  for (Label a = 0; a < n; ++a) {
    Complex sum = 0.0;
    for (Label c : ring_.channels(a, a)) sum += qdim_[c] * r_.at({a, a, c});
    computed[a] = sum / qdim_[a];
  }
  if (twist) {
    if (static_cast<int>(twist->size()) != n) throw LoadError("schema violation: twist has wrong length");
    for (Label a = 0; a < n; ++a) {
      if (scalar_residual((*twist)[a], computed[a]) > 1e3 * tolerance_) {
        throw LoadError("inconsistent twists: file twist of " + ring_.name(a) + " contradicts the R-symbols");
      }
    }
    twist_ = *twist;
  } else {
    twist_ = computed;
  }
  if (scalar_residual(twist_[0], 1.0) > tolerance_) throw LoadError("inconsistent twists: theta_1 != 1");
}

Complex MTCData::F(Label a, Label b, Label c, Label d, Label e, Label f) const {
  auto it = f_.find({a, b, c, d, e, f});
  return it == f_.end() ? Complex(0.0) : it->second;
}

Complex MTCData::R(Label a, Label b, Label c) const {
  auto it = r_.find({a, b, c});
  return it == r_.end() ? Complex(0.0) : it->second;
}

const FMatrix* MTCData::f_matrix(Label a, Label b, Label c, Label d) const {
  auto it = f_matrices_.find({a, b, c, d});
  return it == f_matrices_.end() ? nullptr : &it->second;
}

namespace {

Label label_ref(const json& j, const std::vector<std::string>& names) {
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0 || v >= static_cast<long long>(names.size())) {
      throw LoadError("schema violation: label index out of range");
    }
    return static_cast<Label>(v);
  }
  if (j.is_string()) {
    auto s = j.get<std::string>();
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw LoadError("schema violation: unknown label '" + s + "'");
    return static_cast<Label>(it - names.begin());
  }
  throw LoadError("schema violation: label must be a name or an index");
}

Complex complex_value(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw LoadError("schema violation: scalar must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> complex_array(const json& j, const char* key) {
  if (!j.is_array()) throw LoadError(std::string("schema violation: ") + key + " must be an array");
  std::vector<Complex> out;
  for (const auto& v : j) out.push_back(complex_value(v));
  return out;
}

template <std::size_t K>
std::array<Label, K> label_tuple(const json& rec, const std::vector<std::string>& names, const char* what) {
  if (!rec.is_array() || rec.size() != K) {
    throw LoadError(std::string("schema violation: ") + what + " labels must have " + std::to_string(K) +
                    " entries");
  }
  std::array<Label, K> out{};
  for (std::size_t i = 0; i < K; ++i) out[i] = label_ref(rec[i], names);
  return out;
}

}  // namespace

MTCData load_category_string(const std::string& text, double tolerance) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("schema violation: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw LoadError("schema violation: top level must be an object");
  static const std::set<std::string> known{"labels", "dual", "fusion", "F", "R", "qdim", "twist"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw LoadError("schema violation: unknown key '" + key + "'");
  }
  for (const char* key : {"labels", "dual", "fusion", "F", "R"}) {
    if (!doc.contains(key)) throw LoadError(std::string("schema violation: missing key '") + key + "'");
  }

  std::vector<std::string> names;
  if (!doc["labels"].is_array()) throw LoadError("schema violation: labels must be an array");
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw LoadError("schema violation: labels must be strings");
    names.push_back(l.get<std::string>());
  }
  std::vector<Label> dual;
  if (!doc["dual"].is_array()) throw LoadError("schema violation: dual must be an array");
  for (const auto& d : doc["dual"]) dual.push_back(label_ref(d, names));

  std::vector<std::array<Label, 3>> triples;
  if (!doc["fusion"].is_array()) throw LoadError("schema violation: fusion must be an array");
  for (const auto& t : doc["fusion"]) triples.push_back(label_tuple<3>(t, names, "fusion"));

  FusionRing ring(names, dual, triples);

  auto record = [&](const json& rec, const char* what) {
    if (!rec.is_object() || rec.size() != 2 || !rec.contains("labels") || !rec.contains("value")) {
      throw LoadError(std::string("schema violation: ") + what + " records need exactly 'labels' and 'value'");
    }
    return complex_value(rec["value"]);
  };
  std::map<std::array<Label, 6>, Complex> f;
  if (!doc["F"].is_array()) throw LoadError("schema violation: F must be an array");
  for (const auto& rec : doc["F"]) {
    Complex v = record(rec, "F");
    auto key = label_tuple<6>(rec["labels"], names, "F");
    if (!f.emplace(key, v).second) throw LoadError("schema violation: duplicate F record");
  }
  std::map<std::array<Label, 3>, Complex> r;
  if (!doc["R"].is_array()) throw LoadError("schema violation: R must be an array");
  for (const auto& rec : doc["R"]) {
    Complex v = record(rec, "R");
    auto key = label_tuple<3>(rec["labels"], names, "R");
    if (!r.emplace(key, v).second) throw LoadError("schema violation: duplicate R record");
  }
  std::optional<std::vector<Complex>> qdim, twist;
  if (doc.contains("qdim")) qdim = complex_array(doc["qdim"], "qdim");
  if (doc.contains("twist")) twist = complex_array(doc["twist"], "twist");

  return MTCData(std::move(ring), std::move(f), std::move(r), std::move(qdim), std::move(twist), tolerance);
}

MTCData load_category(std::istream& source, double tolerance) {
  std::ostringstream buf;
  buf << source.rdbuf();
  return load_category_string(buf.str(), tolerance);
}

MTCData load_category_file(const std::filesystem::path& path, double tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open category file " + path.string());
  return load_category(in, tolerance);
}

ConsistencyReport verify_pentagon(const MTCData& cat) {
  ConsistencyReport report("pentagon", cat.tolerance());
  const int n = cat.rank();
  const auto& ring = cat.ring();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d)
          for (Label e = 0; e < n; ++e)
            for (Label f : ring.channels(a, b))
              for (Label g : ring.channels(f, c)) {
                if (!ring.N(g, d, e)) continue;
                for (Label l : ring.channels(c, d)) {
                  if (!ring.N(f, l, e)) continue;
                  for (Label k : ring.channels(b, l)) {
                    if (!ring.N(a, k, e)) continue;
                    Complex lhs = cat.F(f, c, d, e, g, l) * cat.F(a, b, l, e, f, k);
                    Complex rhs = 0.0;
                    for (Label h : ring.channels(b, c)) {
                      rhs += cat.F(a, b, c, g, f, h) * cat.F(a, h, d, e, g, k) * cat.F(b, c, d, k, h, l);
                    }
                    report.record("F " + tuple_str({a, b, c, d, e, f, g, k, l}), std::abs(lhs - rhs));
                  }
                }
              }
  return report;
}

ConsistencyReport verify_hexagon(const MTCData& cat) {
  ConsistencyReport report("hexagon", cat.tolerance());
  const int n = cat.rank();
  const auto& ring = cat.ring();
  auto r_inv = [&](Label x, Label y, Label z) {
    Complex v = cat.R(y, x, z);
    return v == Complex(0.0) ? Complex(0.0) : 1.0 / v;
  };
  auto r_fwd = [&](Label x, Label y, Label z) { return cat.R(x, y, z); };
  for (int orientation = 0; orientation < 2; ++orientation) {
    for (Label a = 0; a < n; ++a)
      for (Label b = 0; b < n; ++b)
        for (Label c = 0; c < n; ++c)
          for (Label d = 0; d < n; ++d)
            for (Label e : ring.channels(a, c))
              for (Label g : ring.channels(c, b)) {
                if (!ring.N(e, b, d) || !ring.N(a, g, d)) continue;
                auto rr = [&](Label x, Label y, Label z) { return orientation == 0 ? r_fwd(x, y, z) : r_inv(x, y, z); };
                Complex lhs = rr(c, a, e) * cat.F(a, c, b, d, e, g) * rr(c, b, g);
                Complex rhs = 0.0;
                for (Label f : ring.channels(a, b)) {
                  rhs += cat.F(c, a, b, d, e, f) * rr(c, f, d) * cat.F(a, b, c, d, f, g);
                }
                report.record(std::string(orientation == 0 ? "H+ " : "H- ") + tuple_str({a, b, c, d, e, g}),
                              std::abs(lhs - rhs));
              }
  }
  return report;
}

}  // namespace tubealg::mtc
