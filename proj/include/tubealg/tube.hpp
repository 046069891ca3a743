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

#ifndef TUBEALG_TUBE_HPP
#define TUBEALG_TUBE_HPP

#include <map>
#include <mutex>
#include <vector>

#include "tubealg/calculus.hpp"
#include "tubealg/consistency.hpp"
#include "tubealg/modular_data.hpp"

namespace tubealg::tube {

using mtc::Label;
using mtc::Morphism;
using mtc::Word;

/// A tensor word of simple labels; the empty word is the unit.
using TubeObject = Word;

/// Coordinate (circle S, charge c, row, col) of a block entry in Hom_C(S X, Y S).
struct BasisElement {
  Label circle;
  Label charge;
  int row;
  int col;

  bool operator==(const BasisElement&) const = default;
};

struct HomBasis {
  TubeObject source;
  TubeObject target;
  std::vector<BasisElement> elements;
  /// The pairing b (x) b* -> tr(b* o b) is diagonal on this basis with entries d(c).
  Vector pairing;

  int size() const { return static_cast<int>(elements.size()); }
  Matrix pairing_matrix() const { return pairing.asDiagonal(); }
};

/// Element of Hom_TC(X, Y) = (+)_S Hom_C(S X, Y S); one component per circle label.
struct TubeMorphism {
  TubeObject source;
  TubeObject target;
  std::map<Label, Morphism> components;

  TubeMorphism& operator+=(const TubeMorphism& other);
  TubeMorphism& operator*=(Complex s);
};

TubeMorphism operator+(TubeMorphism a, const TubeMorphism& b);
TubeMorphism operator-(TubeMorphism a, const TubeMorphism& b);
TubeMorphism operator*(Complex s, TubeMorphism a);

double residual(const TubeMorphism& a, const TubeMorphism& b);
double max_abs(const TubeMorphism& m);

struct DirectSumObject {
  std::vector<TubeObject> summands;
};

/// Block matrix of tube morphisms; blocks[i][j] maps summand j to summand i.
struct DirectSumMorphism {
  DirectSumObject object;
  std::vector<std::vector<TubeMorphism>> blocks;
};

/// Which way the circle strand passes the two strands in the idempotent diagrams.
enum class Chirality { kStandard, kMirror };

class TubeCategory {
 public:
  explicit TubeCategory(const mtc::Calculus& calc, Chirality chirality = Chirality::kStandard);
  TubeCategory(const TubeCategory&) = delete;
  TubeCategory& operator=(const TubeCategory&) = delete;

  const mtc::Calculus& calculus() const { return calc_; }
  const mtc::MTCData& category() const { return calc_.category(); }
  Chirality chirality() const { return chirality_; }
  int rank() const { return calc_.rank(); }

  const HomBasis& hom_basis(const TubeObject& x, const TubeObject& y) const;
  int hom_dim(const TubeObject& x, const TubeObject& y) const { return hom_basis(x, y).size(); }

  Vector coordinates(const TubeMorphism& f) const;
  TubeMorphism from_coordinates(const TubeObject& x, const TubeObject& y, const Vector& v) const;
  TubeMorphism basis_morphism(const TubeObject& x, const TubeObject& y, int index) const;

  TubeMorphism zero(const TubeObject& x, const TubeObject& y) const;
  TubeMorphism identity(const TubeObject& x) const;
  TubeMorphism compose(const TubeMorphism& g, const TubeMorphism& f) const;

  /// Closes the circle word w of f: w x -> y w into simple circle components.
  TubeMorphism reduce_circle(const Word& w, const Morphism& f) const;

  /// S x y -> x y S; in the standard chirality S passes x by the inverse braiding and y by the braiding.
  Morphism crossing(Label s, const Word& x, const Word& y) const;

  TubeMorphism epsilon(const Word& x, const Word& y) const;
  TubeMorphism epsilon(Label i, Label j) const { return epsilon(Word{i}, Word{j}); }

  TubeMorphism twist(const TubeObject& x) const;
  TubeMorphism twist_inverse(const TubeObject& x) const;

  /// For f: g x -> x g, the rotated morphism x^v g -> g x^v.
  Morphism rotate_component(const Word& g, const Word& x, const Morphism& f) const;
  /// The rotated diagram as an element of End_TC(g).
  TubeMorphism rotate(const Word& g, const Word& x, const Morphism& f) const;

  /// Rotation of crossing(s, i, j^v), so the circle carries the strands (j, i^v).
  TubeMorphism gamma(Label i, Label j, Label s) const;
  TubeMorphism isotypic_idempotent(Label s, Label a, Label b) const;
  ConsistencyReport verify_handle_slide(Label i, Label j, Label s, const mtc::ModularData& md) const;

  /// Block-diagonal endomorphism of T = (+)_S S with blocks (d(S)/d(C)) gamma_{i j^v}^S,
  /// the rotation of the epsilon_i^j diagram.
  DirectSumMorphism nu(Label i, Label j) const;
  DirectSumObject circle_sum() const;

  /// dim of e o End_TC(x) o e.
  int pairing_rank(const TubeMorphism& e) const;
  /// dim of epsilon_a^b o Hom_TC(s, ab) o epsilon(s, a, b).
  int isotypic_multiplicity(Label s, Label a, Label b) const;

 private:
  const mtc::Calculus& calc_;
  Chirality chirality_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<Word, Word>, HomBasis> bases_;
};

}  // namespace tubealg::tube

#endif  // TUBEALG_TUBE_HPP
