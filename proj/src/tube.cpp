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

#include "tubealg/tube.hpp"

#include <algorithm>

namespace tubealg::tube {

using mtc::concat;

TubeMorphism& TubeMorphism::operator+=(const TubeMorphism& other) {
  if (source != other.source || target != other.target) throw Error("tube morphism sum: object mismatch");
  for (const auto& [s, m] : other.components) {
    auto it = components.find(s);
    if (it == components.end()) {
      components.emplace(s, m);
    } else {
      it->second += m;
    }
  }
  return *this;
}

TubeMorphism& TubeMorphism::operator*=(Complex s) {
  for (auto& [label, m] : components) m *= s;
  return *this;
}

TubeMorphism operator+(TubeMorphism a, const TubeMorphism& b) { return a += b; }
TubeMorphism operator-(TubeMorphism a, const TubeMorphism& b) { return a += Complex(-1.0) * b; }
TubeMorphism operator*(Complex s, TubeMorphism a) { return a *= s; }

double max_abs(const TubeMorphism& m) {
  double best = 0.0;
  for (const auto& [s, c] : m.components) best = std::max(best, mtc::max_abs(c));
  return best;
}

double residual(const TubeMorphism& a, const TubeMorphism& b) {
  if (a.source != b.source || a.target != b.target) throw Error("residual: object mismatch");
  double diff = 0.0;
  for (const auto& [s, m] : a.components) {
    auto it = b.components.find(s);
    diff = std::max(diff, it == b.components.end() ? mtc::max_abs(m) : mtc::max_abs(m - it->second));
  }
  for (const auto& [s, m] : b.components) {
    if (!a.components.count(s)) diff = std::max(diff, mtc::max_abs(m));
  }
  return diff / std::max({1.0, max_abs(a), max_abs(b)});
}

TubeCategory::TubeCategory(const mtc::Calculus& calc, Chirality chirality)
    : calc_(calc), chirality_(chirality) {}

const HomBasis& TubeCategory::hom_basis(const TubeObject& x, const TubeObject& y) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_pair(x, y);
  auto it = bases_.find(key);
  if (it != bases_.end()) return it->second;
  for (Label l : concat(x, y)) {
    if (l < 0 || l >= rank()) throw Error("hom_basis: label out of range");
  }
  HomBasis basis{x, y, {}, {}};
  std::vector<Complex> pairing;
  for (Label s = 0; s < rank(); ++s) {
    Word src = concat({s}, x);
    Word tgt = concat(y, {s});
    for (Label c = 0; c < rank(); ++c) {
      int rows = calc_.dim(tgt, c), cols = calc_.dim(src, c);
      for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
          basis.elements.push_back({s, c, r, k});
          pairing.push_back(calc_.qdim(c));
        }
    }
  }
  basis.pairing = Eigen::Map<Vector>(pairing.data(), static_cast<Eigen::Index>(pairing.size()));
  return bases_.emplace(key, std::move(basis)).first->second;
}

TubeMorphism TubeCategory::zero(const TubeObject& x, const TubeObject& y) const {
  TubeMorphism m{x, y, {}};
  for (Label s = 0; s < rank(); ++s) m.components.emplace(s, calc_.zero(concat({s}, x), concat(y, {s})));
  return m;
}

TubeMorphism TubeCategory::identity(const TubeObject& x) const {
  TubeMorphism m = zero(x, x);
  m.components.at(0) = calc_.braid({0}, x);
  return m;
}

Vector TubeCategory::coordinates(const TubeMorphism& f) const {
  const HomBasis& basis = hom_basis(f.source, f.target);
  Vector v = Vector::Zero(basis.size());
  for (int i = 0; i < basis.size(); ++i) {
    const auto& e = basis.elements[i];
    auto ci = f.components.find(e.circle);
    if (ci == f.components.end()) continue;
    auto bi = ci->second.blocks.find(e.charge);
    if (bi == ci->second.blocks.end()) continue;
    v(i) = bi->second(e.row, e.col);
  }
  return v;
}

TubeMorphism TubeCategory::from_coordinates(const TubeObject& x, const TubeObject& y, const Vector& v) const {
  const HomBasis& basis = hom_basis(x, y);
  if (v.size() != basis.size()) throw Error("from_coordinates: dimension mismatch");
  TubeMorphism m = zero(x, y);
  for (int i = 0; i < basis.size(); ++i) {
    const auto& e = basis.elements[i];
    m.components.at(e.circle).blocks.at(e.charge)(e.row, e.col) = v(i);
  }
  return m;
}

TubeMorphism TubeCategory::basis_morphism(const TubeObject& x, const TubeObject& y, int index) const {
  Vector v = Vector::Zero(hom_dim(x, y));
  v(index) = 1.0;
  return from_coordinates(x, y, v);
}

TubeMorphism TubeCategory::reduce_circle(const Word& w, const Morphism& f) const {
  const std::size_t n = w.size();
  if (f.source.size() < n || f.target.size() < n || !std::equal(w.begin(), w.end(), f.source.begin()) ||
      !std::equal(w.rbegin(), w.rend(), f.target.rbegin())) {
    throw Error("reduce_circle: morphism does not carry the circle word");
  }
  Word x(f.source.begin() + n, f.source.end());
  Word y(f.target.begin(), f.target.end() - n);
  TubeMorphism out = zero(x, y);
  for (Label u = 0; u < rank(); ++u) {
    const int count = calc_.dim(w, u);
    for (int t = 0; t < count; ++t) {
      Morphism in = calc_.whisker({}, calc_.splitting_tree(w, u, t), x);
      Morphism back = calc_.whisker(y, calc_.fusion_tree(w, u, t), {});
      out.components.at(u) += calc_.compose(back, calc_.compose(f, in));
    }
  }
  return out;
}

TubeMorphism TubeCategory::compose(const TubeMorphism& g, const TubeMorphism& f) const {
  if (f.target != g.source) throw Error("tube compose: object mismatch");
  TubeMorphism out = zero(f.source, g.target);
  for (const auto& [s, fs] : f.components) {
    if (fs.blocks.empty() || mtc::max_abs(fs) == 0.0) continue;
    for (const auto& [sp, gs] : g.components) {
      if (gs.blocks.empty() || mtc::max_abs(gs) == 0.0) continue;
      Morphism lower = calc_.whisker({sp}, fs, {});
      Morphism upper = calc_.whisker({}, gs, {s});
      out += reduce_circle({sp, s}, calc_.compose(upper, lower));
    }
  }
  return out;
}

Morphism TubeCategory::crossing(Label s, const Word& x, const Word& y) const {
  const bool standard = chirality_ == Chirality::kStandard;
  Morphism first = calc_.whisker({}, calc_.braid({s}, x, standard), y);
  Morphism second = calc_.whisker(x, calc_.braid({s}, y, !standard), {});
  return calc_.compose(second, first);
}

TubeMorphism TubeCategory::epsilon(const Word& x, const Word& y) const {
  const Word xy = concat(x, y);
  TubeMorphism m = zero(xy, xy);
  const Complex dim = category().global_dim();
  for (Label s = 0; s < rank(); ++s) {
    m.components.at(s) = (calc_.qdim(s) / dim) * crossing(s, x, y);
  }
  return m;
}

TubeMorphism TubeCategory::twist(const TubeObject& x) const {
  return reduce_circle(x, calc_.identity(concat(x, x)));
}

TubeMorphism TubeCategory::twist_inverse(const TubeObject& x) const {
  return reduce_circle(calc_.dual(x), calc_.compose(calc_.coev(x), calc_.ev(x)));
}

Morphism TubeCategory::rotate_component(const Word& g, const Word& x, const Morphism& f) const {
  if (f.source != concat(g, x) || f.target != concat(x, g)) throw Error("rotate: morphism has wrong type");
  const Word xd = calc_.dual(x);
  Morphism open = calc_.whisker(concat(xd, g), calc_.coev(x), {});
  Morphism body = calc_.whisker(xd, f, xd);
  Morphism close = calc_.whisker({}, calc_.ev(x), concat(g, xd));
  return calc_.compose(close, calc_.compose(body, open));
}

TubeMorphism TubeCategory::rotate(const Word& g, const Word& x, const Morphism& f) const {
  return reduce_circle(calc_.dual(x), rotate_component(g, x, f));
}

TubeMorphism TubeCategory::gamma(Label i, Label j, Label s) const {
  const Label jd = category().ring().dual(j);
  return rotate({s}, {i, jd}, crossing(s, {i}, {jd}));
}

TubeMorphism TubeCategory::isotypic_idempotent(Label s, Label a, Label b) const {
  TubeMorphism m = zero({s}, {s});
  if (!category().ring().N(a, b, s)) return m;
  const Complex dim = category().global_dim();
  Morphism split = calc_.splitting(a, b, s);
  Morphism fuse = (1.0 / calc_.qdim(s)) * calc_.fusion(a, b, s);
  const Complex scale = calc_.qdim(a) * calc_.qdim(b) / dim;
  for (Label t = 0; t < rank(); ++t) {
    Morphism in = calc_.whisker({t}, split, {});
    Morphism out = calc_.whisker({}, fuse, {t});
    m.components.at(t) = (scale * calc_.qdim(t)) * calc_.compose(out, calc_.compose(crossing(t, {a}, {b}), in));
  }
  return m;
}

ConsistencyReport TubeCategory::verify_handle_slide(Label i, Label j, Label s, const mtc::ModularData& md) const {
  ConsistencyReport report("handle_slide", 1e-8);
  TubeMorphism lhs = gamma(i, j, s);
  TubeMorphism rhs = zero({s}, {s});
  for (Label a = 0; a < rank(); ++a)
    for (Label b = 0; b < rank(); ++b) {
      if (!category().ring().N(a, b, s)) continue;
      Complex coeff = md.s_matrix(i, a) * md.s_matrix(b, j) / (calc_.qdim(a) * calc_.qdim(b));
      rhs += coeff * isotypic_idempotent(s, a, b);
    }
  const auto& names = category().ring().names();
  report.record("(" + names[i] + "," + names[j] + "," + names[s] + ")", residual(lhs, rhs));
  return report;
}

DirectSumObject TubeCategory::circle_sum() const {
  DirectSumObject obj;
  for (Label s = 0; s < rank(); ++s) obj.summands.push_back({s});
  return obj;
}

DirectSumMorphism TubeCategory::nu(Label i, Label j) const {
  DirectSumMorphism m{circle_sum(), {}};
  const Complex dim = category().global_dim();
  const Label jd = category().ring().dual(j);
  for (Label r = 0; r < rank(); ++r) {
    std::vector<TubeMorphism> row;
    for (Label c = 0; c < rank(); ++c) {
      row.push_back(r == c ? (calc_.qdim(r) / dim) * gamma(i, jd, r) : zero({c}, {r}));
    }
    m.blocks.push_back(std::move(row));
  }
  return m;
}

int TubeCategory::pairing_rank(const TubeMorphism& e) const {
  if (e.source != e.target) throw Error("pairing_rank: not an endomorphism");
  const int n = hom_dim(e.source, e.source);
  Matrix span(n, n);
  for (int k = 0; k < n; ++k) {
    span.col(k) = coordinates(compose(e, compose(basis_morphism(e.source, e.source, k), e)));
  }
  return numerical_rank(span);
}

int TubeCategory::isotypic_multiplicity(Label s, Label a, Label b) const {
  TubeMorphism proj = isotypic_idempotent(s, a, b);
  TubeMorphism eps = epsilon(a, b);
  const int n = hom_dim({s}, {a, b});
  if (n == 0) return 0;
  Matrix span(hom_dim({s}, {a, b}), n);
  for (int k = 0; k < n; ++k) {
    span.col(k) = coordinates(compose(eps, compose(basis_morphism({s}, {a, b}, k), proj)));
  }
  return numerical_rank(span);
}

}  // namespace tubealg::tube
