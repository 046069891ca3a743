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

#include "tubealg/reps.hpp"

#include <algorithm>
#include <cmath>

namespace tubealg::reps {

namespace {

constexpr double kStructTol = 1e-8;
constexpr double kTraceTol = 1e-7;
constexpr double kIntegerTol = 1e-6;

double trace_gap(Complex a, Complex b) { return scalar_residual(a, b); }

}  // namespace

void validate_multiplicity(const MultiplicityMatrix& z, int rank) {
  if (z.rows() != rank || z.cols() != rank) throw RepError("multiplicity matrix must be square over the labels");
  if (z.size() > 0 && z.minCoeff() < 0) throw RepError("multiplicity matrix has a negative entry");
}

std::vector<TubeObject> standard_family(int rank) {
  std::vector<TubeObject> family{{}};
  for (Label a = 0; a < rank; ++a) family.push_back({a});
  for (Label a = 0; a < rank; ++a)
    for (Label b = 0; b < rank; ++b) family.push_back({a, b});
  return family;
}

RepContext::RepContext(const tube::TubeCategory& tc) : tc_(tc) {}

const TubeMorphism& RepContext::epsilon(Label a, Label b) const {
  std::lock_guard lock(mutex_);
  auto it = epsilon_.find({a, b});
  if (it != epsilon_.end()) return it->second;
  return epsilon_.emplace(std::make_pair(a, b), tc_.epsilon(a, b)).first->second;
}

const TubeMorphism& RepContext::twist(const TubeObject& x) const {
  std::lock_guard lock(mutex_);
  auto it = twist_.find(x);
  if (it != twist_.end()) return it->second;
  return twist_.emplace(x, tc_.twist(x)).first->second;
}

const Matrix& RepContext::irrep_basis(const TubeObject& x, Label a, Label b) const {
  std::lock_guard lock(mutex_);
  auto key = std::make_tuple(x, a, b);
  auto it = basis_.find(key);
  if (it != basis_.end()) return it->second;
  const Word ab{a, b};
  const int n = tc_.hom_dim(x, ab);
  Matrix span(n, n);
  const TubeMorphism& eps = epsilon(a, b);
  for (int k = 0; k < n; ++k) span.col(k) = tc_.coordinates(tc_.compose(eps, tc_.basis_morphism(x, ab, k)));
  return basis_.emplace(key, column_space(span, kStructTol)).first->second;
}

Matrix RepContext::irrep_action(const TubeMorphism& alpha, Label a, Label b) const {
  const Word ab{a, b};
  const Matrix& q_in = irrep_basis(alpha.target, a, b);
  const Matrix& q_out = irrep_basis(alpha.source, a, b);
  Matrix image(q_out.rows(), q_in.cols());
  for (Eigen::Index m = 0; m < q_in.cols(); ++m) {
    TubeMorphism v = tc_.from_coordinates(alpha.target, ab, q_in.col(m));
    image.col(m) = tc_.coordinates(tc_.compose(v, alpha));
  }
  return q_out.adjoint() * image;
}

const Matrix& RepContext::trace_table(const TubeObject& x) const {
  std::lock_guard lock(mutex_);
  auto it = traces_.find(x);
  if (it != traces_.end()) return it->second;
  const int n = tc_.hom_dim(x, x);
  const int r = rank();
  Matrix table = Matrix::Zero(n, r * r);
  for (Label a = 0; a < r; ++a)
    for (Label b = 0; b < r; ++b) {
      const Matrix& q = irrep_basis(x, a, b);
      if (q.cols() == 0) continue;
      const Word ab{a, b};
      std::vector<TubeMorphism> vs;
      for (Eigen::Index m = 0; m < q.cols(); ++m) vs.push_back(tc_.from_coordinates(x, ab, q.col(m)));
      for (int k = 0; k < n; ++k) {
        TubeMorphism beta = tc_.basis_morphism(x, x, k);
        Complex tr = 0.0;
        for (Eigen::Index m = 0; m < q.cols(); ++m) {
          tr += q.col(m).dot(tc_.coordinates(tc_.compose(vs[m], beta)));
        }
        table(k, a * r + b) = tr;
      }
    }
  return traces_.emplace(x, std::move(table)).first->second;
}

TubeRep::TubeRep(const RepContext& ctx, MultiplicityMatrix z, std::vector<TubeObject> family)
    : ctx_(ctx), z_(std::move(z)), family_(std::move(family)) {
  validate_multiplicity(z_, ctx_.rank());
  for (const auto& x : family_) {
    for (Label l : x) {
      if (l < 0 || l >= ctx_.rank()) throw RepError("family word has a label out of range");
    }
  }
}

bool TubeRep::in_family(const TubeObject& x) const {
  return std::find(family_.begin(), family_.end(), x) != family_.end();
}

void TubeRep::require(const TubeObject& x) const {
  if (!in_family(x)) throw RepError("object outside the representation's family");
}

int TubeRep::dimension(const TubeObject& x) const {
  require(x);
  int total = 0;
  for (Label a = 0; a < ctx_.rank(); ++a)
    for (Label b = 0; b < ctx_.rank(); ++b) {
      if (z_(a, b) > 0) total += z_(a, b) * ctx_.irrep_dim(x, a, b);
    }
  return total;
}

Matrix TubeRep::action(const TubeMorphism& alpha) const {
  Matrix out = Matrix::Zero(dimension(alpha.source), dimension(alpha.target));
  Eigen::Index row = 0, col = 0;
  for (Label a = 0; a < ctx_.rank(); ++a)
    for (Label b = 0; b < ctx_.rank(); ++b) {
      if (z_(a, b) == 0) continue;
      Matrix block = ctx_.irrep_action(alpha, a, b);
      for (int copy = 0; copy < z_(a, b); ++copy) {
        out.block(row, col, block.rows(), block.cols()) = block;
        row += block.rows();
        col += block.cols();
      }
    }
  return out;
}

Complex TubeRep::trace(const TubeMorphism& alpha) const {
  if (alpha.source != alpha.target) throw RepError("trace of a non-endomorphism");
  require(alpha.source);
  const Matrix& table = ctx_.trace_table(alpha.source);
  Vector per_irrep = table.transpose() * ctx_.tube().coordinates(alpha);
  const int r = ctx_.rank();
  Complex sum = 0.0;
  for (Label a = 0; a < r; ++a)
    for (Label b = 0; b < r; ++b) sum += static_cast<double>(z_(a, b)) * per_irrep(a * r + b);
  return sum;
}

Complex TubeRep::trace_t_twisted(const TubeMorphism& alpha) const {
  return trace(ctx_.tube().compose(alpha, ctx_.twist(alpha.source)));
}

Complex TubeRep::trace_t_twisted_left(const TubeMorphism& alpha) const {
  return trace(ctx_.tube().compose(ctx_.twist(alpha.target), alpha));
}

Complex TubeRep::trace_s_twisted(const TubeMorphism& alpha) const {
  if (alpha.source != alpha.target) throw RepError("trace of a non-endomorphism");
  require(alpha.source);
  Complex sum = 0.0;
  for (const auto& [s, component] : alpha.components) {
    if (component.blocks.empty()) continue;
    sum += trace(ctx_.tube().rotate({s}, alpha.source, component));
  }
  return sum;
}

Complex TubeRep::trace_s_twisted_rotated(const Word& g, const Word& x, const mtc::Morphism& f) const {
  return trace(ctx_.tube().rotate(g, x, f));
}

Complex TubeRep::trace_nu(Label i, Label j) const {
  tube::DirectSumMorphism nu = ctx_.tube().nu(i, j);
  Complex sum = 0.0;
  for (std::size_t k = 0; k < nu.blocks.size(); ++k) sum += trace(nu.blocks[k][k]);
  return sum;
}

TubeRep build_rep(const RepContext& ctx, const MultiplicityMatrix& z, std::vector<TubeObject> family) {
  return TubeRep(ctx, z, std::move(family));
}

TubeRep build_rep(const RepContext& ctx, const MultiplicityMatrix& z) {
  return TubeRep(ctx, z, standard_family(ctx.rank()));
}

MultiplicityMatrix multiplicity_matrix(const TubeRep& rep) {
  const int r = rep.context().rank();
  MultiplicityMatrix z(r, r);
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j) {
      Complex tr = rep.trace(rep.context().epsilon(i, j));
      double rounded = std::round(tr.real());
      if (std::abs(tr - Complex(rounded)) > kIntegerTol) {
        throw RepError("non-integral trace of an idempotent: the representation is broken");
      }
      z(i, j) = static_cast<int>(rounded);
    }
  return z;
}

namespace {

template <typename M>
bool same_matrix(const M& a, const M& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

}  // namespace

bool InvarianceReport::operator==(const InvarianceReport& o) const {
  return check == o.check && commutator == o.commutator && generator == o.generator && traces == o.traces &&
         consistent == o.consistent && commutator_residual == o.commutator_residual &&
         generator_residual == o.generator_residual && trace_residual == o.trace_residual &&
         same_matrix(pair_residuals, o.pair_residuals) && formula_residual == o.formula_residual &&
         formula == o.formula && worst_residual == o.worst_residual;
}

bool ModularInvarianceReport::operator==(const ModularInvarianceReport& o) const {
  return t == o.t && s == o.s && unit_entry == o.unit_entry && modular_invariant == o.modular_invariant &&
         trace_triple == o.trace_triple && consistent == o.consistent && same_matrix(recovered_z, o.recovered_z);
}

namespace {

void finish(InvarianceReport& report) {
  report.consistent = report.commutator == report.generator && report.generator == report.traces;
  report.worst_residual = std::max({report.commutator_residual, report.generator_residual, report.trace_residual,
                                    report.formula_residual});
}

double trace_family_residual(const TubeRep& rep, bool s_twisted) {
  const auto& tc = rep.context().tube();
  double worst = 0.0;
  for (const auto& x : rep.family()) {
    const int n = tc.hom_dim(x, x);
    for (int k = 0; k < n; ++k) {
      TubeMorphism beta = tc.basis_morphism(x, x, k);
      Complex plain = rep.trace(beta);
      Complex twisted = s_twisted ? rep.trace_s_twisted(beta) : rep.trace_t_twisted(beta);
      worst = std::max(worst, trace_gap(plain, twisted));
    }
  }
  return worst;
}

}  // namespace

InvarianceReport check_t_invariance(const TubeRep& rep, const mtc::ModularData& md) {
  const auto& ctx = rep.context();
  const int r = ctx.rank();
  InvarianceReport report;
  report.check = "t_invariance";
  Matrix z = rep.z().cast<Complex>();
  report.commutator_residual = normalized_residual(z * md.t_matrix, md.t_matrix * z);
  report.commutator = report.commutator_residual <= kStructTol;

  for (const auto& x : rep.family()) {
    Matrix f = rep.action(ctx.twist(x));
    if (f.size() == 0) continue;
    report.generator_residual =
        std::max(report.generator_residual, normalized_residual(f, Matrix::Identity(f.rows(), f.cols())));
  }
  report.generator = report.generator_residual <= kStructTol;

  report.trace_residual = trace_family_residual(rep, false);
  report.traces = report.trace_residual <= kTraceTol;

  report.pair_residuals = RealMatrix::Zero(r, r);
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j) {
      const TubeMorphism& eps = ctx.epsilon(i, j);
      report.pair_residuals(i, j) = std::abs(rep.trace_t_twisted(eps) - rep.trace(eps));
    }
  finish(report);
  return report;
}

InvarianceReport check_s_invariance(const TubeRep& rep, const mtc::ModularData& md) {
  const auto& ctx = rep.context();
  const int r = ctx.rank();
  InvarianceReport report;
  report.check = "s_invariance";
  Matrix z = rep.z().cast<Complex>();
  report.commutator_residual = normalized_residual(z * md.s_matrix, md.s_matrix * z);
  report.commutator = report.commutator_residual <= kStructTol;

  Matrix predicted = md.s_matrix * z * md.s_matrix.inverse();
  report.pair_residuals = RealMatrix::Zero(r, r);
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j) {
      Complex nu = rep.trace_nu(i, j);
      Complex eps = rep.trace(ctx.epsilon(i, j));
      report.pair_residuals(i, j) = std::abs(nu - eps);
      report.generator_residual = std::max(report.generator_residual, trace_gap(nu, eps));
      report.formula_residual = std::max(report.formula_residual, trace_gap(nu, predicted(i, j)));
    }
  report.generator = report.generator_residual <= kTraceTol;
  report.formula = report.formula_residual <= kTraceTol;

  report.trace_residual = trace_family_residual(rep, true);
  report.traces = report.trace_residual <= kTraceTol;
  finish(report);
  return report;
}

ModularInvarianceReport check_modular_invariance(const TubeRep& rep, const mtc::ModularData& md) {
  ModularInvarianceReport report;
  report.t = check_t_invariance(rep, md);
  report.s = check_s_invariance(rep, md);
  report.unit_entry = rep.z()(0, 0) == 1;
  report.modular_invariant = report.t.commutator && report.s.commutator && report.unit_entry;
  report.trace_triple = report.t.traces && report.s.traces;
  report.consistent = report.t.consistent && report.s.consistent && report.s.formula;
  report.recovered_z = multiplicity_matrix(rep);
  return report;
}

}  // namespace tubealg::reps
