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

#include "tubealg/calculus.hpp"

#include <cmath>

namespace tubealg::mtc {

Word concat(const Word& a, const Word& b) {
  Word out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

Morphism& Morphism::operator+=(const Morphism& other) {
  if (source != other.source || target != other.target) throw Error("morphism sum: object mismatch");
  for (const auto& [c, m] : other.blocks) {
    auto it = blocks.find(c);
    if (it == blocks.end()) {
      blocks.emplace(c, m);
    } else {
      it->second += m;
    }
  }
  return *this;
}

Morphism& Morphism::operator*=(Complex s) {
  for (auto& [c, m] : blocks) m *= s;
  return *this;
}

Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
Morphism operator-(Morphism a, const Morphism& b) { return a += Complex(-1.0) * b; }
Morphism operator*(Complex s, Morphism a) { return a *= s; }

double max_abs(const Morphism& m) {
  double best = 0.0;
  for (const auto& [c, b] : m.blocks) best = std::max(best, tubealg::max_abs(b));
  return best;
}

double residual(const Morphism& a, const Morphism& b) {
  if (a.source != b.source || a.target != b.target) throw Error("residual: object mismatch");
  double diff = 0.0;
  for (const auto& [c, m] : a.blocks) {
    auto it = b.blocks.find(c);
    diff = std::max(diff, it == b.blocks.end() ? tubealg::max_abs(m) : tubealg::max_abs(m - it->second));
  }
  for (const auto& [c, m] : b.blocks) {
    if (!a.blocks.count(c)) diff = std::max(diff, tubealg::max_abs(m));
  }
  return diff / std::max({1.0, max_abs(a), max_abs(b)});
}

Calculus::Calculus(const MTCData& cat) : cat_(cat) {
  const int n = rank();
  const auto& ring = cat_.ring();
  ev_scale_.assign(n, 1.0);
  pivot_.assign(n, 1.0);
  for (Label a = 0; a < n; ++a) {
    Word wa{a};
    Morphism zig = compose(whisker(wa, ev({a}), {}), whisker({}, coev({a}), wa));
    Complex z = zig.blocks.at(a)(0, 0);
    if (std::abs(z) < cat_.tolerance()) throw Error("degenerate duality at label " + ring.name(a));
    ev_scale_[a] = 1.0 / z;
  }
  for (Label a = 0; a < n; ++a) {
    Word wd{ring.dual(a)};
    Morphism zag = compose(whisker({}, ev({a}), wd), whisker(wd, coev({a}), {}));
    if (residual(zag, identity(wd)) > 1e-8) throw Error("zigzag identity fails at label " + ring.name(a));
  }
  for (Label a = 0; a < n; ++a) pivot_[a] = cat_.qdim(a) / ev_scale_[ring.dual(a)];
  for (Label a = 0; a < n; ++a) {
    Complex lhs = ev_scale_[a] * ev_scale_[ring.dual(a)];
    if (scalar_residual(lhs, cat_.qdim(a) * cat_.qdim(a)) > 1e-8) {
      throw Error("pivotal structure is not spherical at label " + ring.name(a));
    }
  }
}

const std::vector<Tree>& Calculus::trees(const Word& w, Label c) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(w, c);
  auto it = trees_.find(key);
  if (it != trees_.end()) return it->second;

  const auto& ring = cat_.ring();
  std::vector<std::vector<Tree>> by_charge(rank());
  std::vector<Tree> frontier{Tree{}};
  for (Label x : w) {
    std::vector<Tree> next;
    for (const Tree& t : frontier) {
      Label prev = t.empty() ? ring.unit() : t.back();
      for (Label r : ring.channels(prev, x)) {
        Tree u(t);
        u.push_back(r);
        next.push_back(std::move(u));
      }
    }
    frontier = std::move(next);
  }
  for (Tree& t : frontier) {
    Label charge = t.empty() ? ring.unit() : t.back();
    by_charge[charge].push_back(std::move(t));
  }
  for (Label q = 0; q < rank(); ++q) {
    std::map<Tree, int> index;
    for (std::size_t i = 0; i < by_charge[q].size(); ++i) index.emplace(by_charge[q][i], static_cast<int>(i));
    tree_index_.emplace(std::make_pair(w, q), std::move(index));
    trees_.emplace(std::make_pair(w, q), std::move(by_charge[q]));
  }
  return trees_.at(key);
}

int Calculus::tree_index(const Word& w, Label c, const Tree& t) const {
  trees(w, c);
  std::lock_guard lock(mutex_);
  const auto& index = tree_index_.at({w, c});
  auto it = index.find(t);
  if (it == index.end()) throw Error("tree_index: tree does not belong to word");
  return it->second;
}

int Calculus::hom_dim(const Word& source, const Word& target) const {
  int total = 0;
  for (Label c = 0; c < rank(); ++c) total += dim(source, c) * dim(target, c);
  return total;
}

Morphism Calculus::zero(const Word& source, const Word& target) const {
  Morphism m{source, target, {}};
  for (Label c = 0; c < rank(); ++c) {
    int rows = dim(target, c), cols = dim(source, c);
    if (rows > 0 && cols > 0) m.blocks.emplace(c, Matrix::Zero(rows, cols));
  }
  return m;
}

Morphism Calculus::identity(const Word& w) const {
  Morphism m = zero(w, w);
  for (auto& [c, b] : m.blocks) b.setIdentity();
  return m;
}

Morphism Calculus::compose(const Morphism& g, const Morphism& f) const {
  if (f.target != g.source) throw Error("compose: object mismatch");
  Morphism h = zero(f.source, g.target);
  for (auto& [c, b] : h.blocks) {
    auto gi = g.blocks.find(c);
    auto fi = f.blocks.find(c);
    if (gi != g.blocks.end() && fi != f.blocks.end()) b.noalias() = gi->second * fi->second;
  }
  return h;
}

Morphism Calculus::compose(std::initializer_list<const Morphism*> chain) const {
  if (chain.size() == 0) throw Error("compose: empty chain");
  auto it = std::rbegin(chain);
  Morphism acc = **it;
  for (++it; it != std::rend(chain); ++it) acc = compose(**it, acc);
  return acc;
}

const Calculus::ProductBasis& Calculus::product_basis(const Word& u, const Word& v, Label c) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(u, v, c);
  auto it = product_.find(key);
  if (it != product_.end()) return it->second;
  ProductBasis pb;
  const auto& ring = cat_.ring();
  for (Label a = 0; a < rank(); ++a) {
    int na = dim(u, a);
    if (na == 0) continue;
    for (Label b = 0; b < rank(); ++b) {
      int nb = dim(v, b);
      if (nb == 0 || !ring.N(a, b, c)) continue;
      pb.offset.emplace(std::make_pair(a, b), static_cast<int>(pb.entries.size()));
      for (int i = 0; i < na; ++i)
        for (int k = 0; k < nb; ++k) pb.entries.emplace_back(a, i, b, k);
    }
  }
  return product_.emplace(key, std::move(pb)).first->second;
}

Matrix Calculus::build_change_of_basis(const Word& u, const Word& v, Label c) const {
  const Word uv = concat(u, v);
  const auto& pb = product_basis(u, v, c);
  const int rows = dim(uv, c);
  const int cols = static_cast<int>(pb.entries.size());
  if (rows != cols) throw Error("change of basis is not square");
  Matrix m = Matrix::Zero(rows, cols);
  if (v.empty()) {
    for (int j = 0; j < cols; ++j) m(std::get<1>(pb.entries[j]), j) = 1.0;
    return m;
  }
  if (v.size() == 1) {
    for (int j = 0; j < cols; ++j) {
      auto [a, i, b, k] = pb.entries[j];
      Tree t = trees(u, a)[i];
      t.push_back(c);
      m(tree_index(uv, c, t), j) = 1.0;
    }
    return m;
  }
  const Word vp(v.begin(), v.end() - 1);
  const Label x = v.back();
  const Word uvp = concat(u, vp);
  const auto& ring = cat_.ring();
  for (int j = 0; j < cols; ++j) {
    auto [a, i, b, k] = pb.entries[j];
    const Tree& lv = trees(v, b)[k];
    Tree prefix(lv.begin(), lv.end() - 1);
    Label bp = prefix.back();
    int kp = tree_index(vp, bp, prefix);
    const FMatrix* fm = cat_.f_matrix(a, bp, x, c);
    if (fm == nullptr) throw Error("missing F-matrix in change of basis");
    int fcol = fm->col_of(b);
    for (Label e : ring.channels(a, bp)) {
      if (!ring.N(e, x, c)) continue;
      int erow = fm->row_of(e);
      Complex coeff = fm->inverse(fcol, erow);
      if (coeff == Complex(0.0)) continue;
      const Matrix& inner = change_of_basis(u, vp, e);
      const auto& inner_pb = product_basis(u, vp, e);
      int col = inner_pb.offset.at({a, bp}) + i * dim(vp, bp) + kp;
      const auto& inner_trees = trees(uvp, e);
      for (int r = 0; r < inner.rows(); ++r) {
        Complex val = inner(r, col);
        if (val == Complex(0.0)) continue;
        Tree t = inner_trees[r];
        t.push_back(c);
        m(tree_index(uv, c, t), j) += coeff * val;
      }
    }
  }
  return m;
}

const Matrix& Calculus::change_of_basis(const Word& u, const Word& v, Label c) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(u, v, c);
  auto it = change_.find(key);
  if (it != change_.end()) return it->second;
  Matrix m = build_change_of_basis(u, v, c);
  return change_.emplace(key, std::move(m)).first->second;
}

const Matrix& Calculus::change_of_basis_inverse(const Word& u, const Word& v, Label c) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(u, v, c);
  auto it = change_inverse_.find(key);
  if (it != change_inverse_.end()) return it->second;
  Eigen::FullPivLU<Matrix> lu(change_of_basis(u, v, c));
  if (!lu.isInvertible()) throw Error("singular change of basis");
  return change_inverse_.emplace(key, lu.inverse()).first->second;
}

Morphism Calculus::tensor(const Morphism& f, const Morphism& g) const {
  const Word s = concat(f.source, g.source);
  const Word t = concat(f.target, g.target);
  Morphism h = zero(s, t);
  for (auto& [c, block] : h.blocks) {
    const auto& pt = product_basis(f.target, g.target, c);
    const auto& ps = product_basis(f.source, g.source, c);
    Matrix p = Matrix::Zero(pt.entries.size(), ps.entries.size());
    bool any = false;
    for (const auto& [ab, row0] : pt.offset) {
      auto sit = ps.offset.find(ab);
      if (sit == ps.offset.end()) continue;
      auto fi = f.blocks.find(ab.first);
      auto gi = g.blocks.find(ab.second);
      if (fi == f.blocks.end() || gi == g.blocks.end()) continue;
      const Matrix& A = fi->second;
      const Matrix& B = gi->second;
      for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j) {
          if (A(i, j) == Complex(0.0)) continue;
          p.block(row0 + i * B.rows(), sit->second + j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
          any = true;
        }
    }
    if (!any) continue;
    block = change_of_basis(f.target, g.target, c) * p * change_of_basis_inverse(f.source, g.source, c);
  }
  return h;
}

Morphism Calculus::whisker(const Word& left, const Morphism& f, const Word& right) const {
  Morphism m = f;
  if (!left.empty()) m = tensor(identity(left), m);
  if (!right.empty()) m = tensor(m, identity(right));
  return m;
}

Morphism Calculus::splitting(Label a, Label b, Label c) const {
  Morphism m = zero({c}, {a, b});
  auto it = m.blocks.find(c);
  if (it == m.blocks.end()) throw Error("splitting: inadmissible vertex");
  it->second(0, 0) = 1.0;
  return m;
}

Morphism Calculus::fusion(Label a, Label b, Label c) const {
  Morphism m = zero({a, b}, {c});
  auto it = m.blocks.find(c);
  if (it == m.blocks.end()) throw Error("fusion: inadmissible vertex");
  it->second(0, 0) = 1.0;
  return m;
}

Morphism Calculus::splitting_tree(const Word& w, Label c, int index) const {
  Morphism m = zero({c}, w);
  m.blocks.at(c)(index, 0) = 1.0;
  return m;
}

Morphism Calculus::fusion_tree(const Word& w, Label c, int index) const {
  Morphism m = zero(w, {c});
  m.blocks.at(c)(0, index) = 1.0;
  return m;
}

Morphism Calculus::elementary_braid(Label x, Label y, bool inverse) const {
  Morphism m = zero({x, y}, {y, x});
  for (auto& [c, b] : m.blocks) b(0, 0) = inverse ? 1.0 / cat_.R(y, x, c) : cat_.R(x, y, c);
  return m;
}

Morphism Calculus::braid(const Word& u, const Word& v, bool inverse) const {
  if (u.empty() || v.empty()) return identity(concat(u, v));
  if (u.size() == 1 && v.size() == 1) return elementary_braid(u[0], v[0], inverse);
  if (u.size() > 1) {
    Word a{u[0]};
    Word rest(u.begin() + 1, u.end());
    Morphism inner = whisker(a, braid(rest, v, inverse), {});
    Morphism outer = whisker({}, braid(a, v, inverse), rest);
    return compose(outer, inner);
  }
  Word b{v[0]};
  Word rest(v.begin() + 1, v.end());
  Morphism first = whisker({}, braid(u, b, inverse), rest);
  Morphism second = whisker(b, braid(u, rest, inverse), {});
  return compose(second, first);
}

Word Calculus::dual(const Word& w) const {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(cat_.ring().dual(*it));
  return out;
}

Morphism Calculus::ev(const Word& w) const {
  if (w.empty()) return identity({});
  if (w.size() == 1) {
    Label a = w[0];
    Morphism m = zero({cat_.ring().dual(a), a}, {});
    m.blocks.at(cat_.ring().unit())(0, 0) = ev_scale_[a];
    return m;
  }
  Word head{w[0]};
  Word rest(w.begin() + 1, w.end());
  return compose(ev(rest), whisker(dual(rest), ev(head), rest));
}

Morphism Calculus::coev(const Word& w) const {
  if (w.empty()) return identity({});
  if (w.size() == 1) {
    Label a = w[0];
    Morphism m = zero({}, {a, cat_.ring().dual(a)});
    m.blocks.at(cat_.ring().unit())(0, 0) = 1.0;
    return m;
  }
  Word head{w[0]};
  Word rest(w.begin() + 1, w.end());
  return compose(whisker(head, coev(rest), dual(head)), coev(head));
}

Morphism Calculus::ev_right(const Word& w) const {
  if (w.empty()) return identity({});
  if (w.size() == 1) {
    Label a = w[0];
    Label ad = cat_.ring().dual(a);
    return pivot_[a] * ev({ad});
  }
  Word head{w[0]};
  Word rest(w.begin() + 1, w.end());
  return compose(ev_right(head), whisker(head, ev_right(rest), dual(head)));
}

Morphism Calculus::coev_right(const Word& w) const {
  if (w.empty()) return identity({});
  if (w.size() == 1) {
    Label a = w[0];
    Label ad = cat_.ring().dual(a);
    return (1.0 / pivot_[a]) * coev({ad});
  }
  Word head{w[0]};
  Word rest(w.begin() + 1, w.end());
  return compose(whisker(dual(rest), coev_right(head), rest), coev_right(rest));
}

Complex Calculus::trace(const Morphism& f) const {
  if (f.source != f.target) throw Error("trace: not an endomorphism");
  Complex sum = 0.0;
  for (const auto& [c, b] : f.blocks) sum += cat_.qdim(c) * b.trace();
  return sum;
}

Complex Calculus::left_trace(const Morphism& f) const {
  if (f.source != f.target) throw Error("left_trace: not an endomorphism");
  const Word& w = f.source;
  Morphism m = compose(ev(w), compose(whisker(dual(w), f, {}), coev_right(w)));
  return m.blocks.at(cat_.ring().unit())(0, 0);
}

Complex Calculus::right_trace(const Morphism& f) const {
  if (f.source != f.target) throw Error("right_trace: not an endomorphism");
  const Word& w = f.source;
  Morphism m = compose(ev_right(w), compose(whisker({}, f, dual(w)), coev(w)));
  return m.blocks.at(cat_.ring().unit())(0, 0);
}

Morphism Calculus::twist(const Word& w) const {
  Word wd = dual(w);
  Morphism open = whisker(w, coev(w), {});
  Morphism cross = whisker({}, braid(w, w), wd);
  Morphism close = whisker(w, ev_right(w), {});
  return compose(close, compose(cross, open));
}

}  // namespace tubealg::mtc
