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

#ifndef TUBEALG_CALCULUS_HPP
#define TUBEALG_CALCULUS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "tubealg/mtc.hpp"

namespace tubealg::mtc {

/// A tensor word of simple labels; the empty word is the unit object.
using Word = std::vector<Label>;

/// Left-parenthesized fusion tree, stored as its running charges r_1..r_n.
using Tree = std::vector<Label>;

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

/// A morphism between tensor words, stored blockwise over total charge c as the
/// matrix of coefficients of iota_T o pi_S, T a tree of the target and S of the source.
struct Morphism {
  Word source;
  Word target;
  std::map<Label, Matrix> blocks;

  Morphism& operator+=(const Morphism& other);
  Morphism& operator*=(Complex s);
};

Morphism operator+(Morphism a, const Morphism& b);
Morphism operator-(Morphism a, const Morphism& b);
Morphism operator*(Complex s, Morphism a);

/// Largest coefficient of the difference, divided by max(1, largest coefficient).
double residual(const Morphism& a, const Morphism& b);
double max_abs(const Morphism& m);

/// Strict evaluation engine for string diagrams over a multiplicity-free category.
class Calculus {
 public:
  explicit Calculus(const MTCData& cat);
  Calculus(const Calculus&) = delete;
  Calculus& operator=(const Calculus&) = delete;

  const MTCData& category() const { return cat_; }
  int rank() const { return cat_.rank(); }
  Complex qdim(Label a) const { return cat_.qdim(a); }

  const std::vector<Tree>& trees(const Word& w, Label c) const;
  int tree_index(const Word& w, Label c, const Tree& t) const;
  int dim(const Word& w, Label c) const { return static_cast<int>(trees(w, c).size()); }
  /// dim Hom(source, target).
  int hom_dim(const Word& source, const Word& target) const;

  Morphism zero(const Word& source, const Word& target) const;
  Morphism identity(const Word& w) const;
  Morphism compose(const Morphism& g, const Morphism& f) const;
  Morphism compose(std::initializer_list<const Morphism*> chain) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  /// id_left (x) f (x) id_right.
  Morphism whisker(const Word& left, const Morphism& f, const Word& right) const;

  /// Trivalent vertices iota: (c) -> (a,b) and pi: (a,b) -> (c), with pi o iota = id.
  Morphism splitting(Label a, Label b, Label c) const;
  Morphism fusion(Label a, Label b, Label c) const;
  /// iota_T: (c) -> w for the tree T = trees(w, c)[index].
  Morphism splitting_tree(const Word& w, Label c, int index) const;
  Morphism fusion_tree(const Word& w, Label c, int index) const;

  /// Braiding c_{u,v}: u v -> v u, or the inverse braiding c_{v,u}^{-1} when inverse.
  Morphism braid(const Word& u, const Word& v, bool inverse = false) const;

  Word dual(const Word& w) const;
  /// ev_w: w^v w -> (), coev_w: () -> w w^v.
  Morphism ev(const Word& w) const;
  Morphism coev(const Word& w) const;
  /// ev~_w: w w^v -> (), coev~_w: () -> w^v w.
  Morphism ev_right(const Word& w) const;
  Morphism coev_right(const Word& w) const;

  /// Quantum trace sum_c d(c) tr M_c.
  Complex trace(const Morphism& f) const;
  Complex left_trace(const Morphism& f) const;
  Complex right_trace(const Morphism& f) const;

  /// Ribbon twist on a word, evaluated as a kink.
  Morphism twist(const Word& w) const;

  /// Normalization of ev_a: the scalar it carries on its only block.
  Complex ev_scale(Label a) const { return ev_scale_[a]; }

 private:
  struct ProductBasis {
    std::vector<std::tuple<Label, int, Label, int>> entries;
    std::map<std::pair<Label, Label>, int> offset;
  };
  const ProductBasis& product_basis(const Word& u, const Word& v, Label c) const;
  const Matrix& change_of_basis(const Word& u, const Word& v, Label c) const;
  const Matrix& change_of_basis_inverse(const Word& u, const Word& v, Label c) const;
  Matrix build_change_of_basis(const Word& u, const Word& v, Label c) const;
  Morphism elementary_braid(Label x, Label y, bool inverse) const;

  const MTCData& cat_;
  std::vector<Complex> ev_scale_;
  std::vector<Complex> pivot_;

  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<Word, Label>, std::vector<Tree>> trees_;
  mutable std::map<std::pair<Word, Label>, std::map<Tree, int>> tree_index_;
  mutable std::map<std::tuple<Word, Word, Label>, ProductBasis> product_;
  mutable std::map<std::tuple<Word, Word, Label>, Matrix> change_;
  mutable std::map<std::tuple<Word, Word, Label>, Matrix> change_inverse_;
};

}  // namespace tubealg::mtc

#endif  // TUBEALG_CALCULUS_HPP
