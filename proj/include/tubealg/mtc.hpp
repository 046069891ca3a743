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

#ifndef TUBEALG_MTC_HPP
#define TUBEALG_MTC_HPP

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tubealg/consistency.hpp"
#include "tubealg/linalg.hpp"

namespace tubealg::mtc {

/// Index of a simple object. Label 0 is always the tensor unit.
using Label = int;

/// Raised when a category-data file cannot be turned into an MTCData.
class LoadError : public Error {
 public:
  using Error::Error;
};

/// Labels, duality and multiplicity-free fusion rules N_ab^c in {0, 1}.
class FusionRing {
 public:
  FusionRing() = default;
  /// Validates the unit, duality and associativity axioms; throws LoadError.
  FusionRing(std::vector<std::string> names, std::vector<Label> dual,
             const std::vector<std::array<Label, 3>>& triples);

  int rank() const { return static_cast<int>(names_.size()); }
  static constexpr Label unit() { return 0; }
  Label dual(Label a) const { return dual_[a]; }
  int N(Label a, Label b, Label c) const { return fusion_[index(a, b, c)]; }
  /// Labels c with N_ab^c = 1, ascending.
  const std::vector<Label>& channels(Label a, Label b) const { return channels_[a * rank() + b]; }

  const std::string& name(Label a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Label> find(const std::string& name) const;

  /// Perron-Frobenius eigenvalue of each fusion matrix N_a.
  std::vector<double> frobenius_perron_dims() const;

 private:
  std::size_t index(Label a, Label b, Label c) const {
    return (static_cast<std::size_t>(a) * rank() + b) * rank() + c;
  }

  std::vector<std::string> names_;
  std::vector<Label> dual_;
  std::vector<int> fusion_;
  std::vector<std::vector<Label>> channels_;
};

/// The F-move for fixed outer labels (a, b, c; d): rows are the intermediate
/// e in (ab)e c, columns the intermediate f in a (bc)f.
struct FMatrix {
  std::vector<Label> rows;
  std::vector<Label> cols;
  Matrix value;
  Matrix inverse;  // indexed [f][e]

  int row_of(Label e) const;
  int col_of(Label f) const;
};

/// Defining data of a multiplicity-free modular tensor category.
///
/// F follows the splitting-tree convention |(ab)e c; d> = sum_f F_ef |a (bc)f; d>,
/// R is defined by c_{a,b} o iota^{ab}_c = R^{ab}_c iota^{ba}_c.
/// Immutable after construction.
class MTCData {
 public:
  MTCData(FusionRing ring, std::map<std::array<Label, 6>, Complex> f_symbols,
          std::map<std::array<Label, 3>, Complex> r_symbols, std::optional<std::vector<Complex>> qdim,
          std::optional<std::vector<Complex>> twist, double tolerance = 1e-9);

  const FusionRing& ring() const { return ring_; }
  int rank() const { return ring_.rank(); }

  /// [F^{abc}_d]_{ef}; zero when the tuple is not admissible.
  Complex F(Label a, Label b, Label c, Label d, Label e, Label f) const;
  /// R^{ab}_c; zero when N_ab^c = 0.
  Complex R(Label a, Label b, Label c) const;
  /// Null when no admissible tree exists for (a, b, c; d).
  const FMatrix* f_matrix(Label a, Label b, Label c, Label d) const;

  Complex qdim(Label a) const { return qdim_[a]; }
  const std::vector<Complex>& qdims() const { return qdim_; }
  Complex twist(Label a) const { return twist_[a]; }
  const std::vector<Complex>& twists() const { return twist_; }
  Complex global_dim() const { return global_dim_; }
  double tolerance() const { return tolerance_; }

  const std::map<std::array<Label, 6>, Complex>& f_symbols() const { return f_; }
  const std::map<std::array<Label, 3>, Complex>& r_symbols() const { return r_; }

 private:
  FusionRing ring_;
  std::map<std::array<Label, 6>, Complex> f_;
  std::map<std::array<Label, 3>, Complex> r_;
  std::map<std::array<Label, 4>, FMatrix> f_matrices_;
  std::vector<Complex> qdim_;
  std::vector<Complex> twist_;
  Complex global_dim_;
  double tolerance_;
};

/// Parses the JSON category-data format. Throws LoadError.
MTCData load_category(std::istream& source, double tolerance = 1e-9);
MTCData load_category_string(const std::string& text, double tolerance = 1e-9);
MTCData load_category_file(const std::filesystem::path& path, double tolerance = 1e-9);

/// Every pentagon instance [F^{fcd}_e]_{gl}[F^{abl}_e]_{fk} = sum_h ... .
ConsistencyReport verify_pentagon(const MTCData& cat);
/// Both hexagons; the second uses the inverse braiding R^{xy}_z -> 1/R^{yx}_z.
ConsistencyReport verify_hexagon(const MTCData& cat);

}  // namespace tubealg::mtc

#endif  // TUBEALG_MTC_HPP
