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

#ifndef TUBEALG_REPS_HPP
#define TUBEALG_REPS_HPP

#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "tubealg/modular_data.hpp"
#include "tubealg/tube.hpp"

namespace tubealg::reps {

using mtc::Label;
using mtc::Word;
using tube::TubeMorphism;
using tube::TubeObject;

class RepError : public Error {
 public:
  using Error::Error;
};

/// Square non-negative integer matrix indexed by labels.
using MultiplicityMatrix = IntMatrix;

void validate_multiplicity(const MultiplicityMatrix& z, int rank);

/// Words of length 0, 1 and 2 over all labels, unit included.
std::vector<TubeObject> standard_family(int rank);

/// Irreducible representations e_A^B# realized on epsilon_A^B o Hom_TC(X, AB), shared by all reps.
class RepContext {
 public:
  explicit RepContext(const tube::TubeCategory& tc);

  const tube::TubeCategory& tube() const { return tc_; }
  const mtc::Calculus& calculus() const { return tc_.calculus(); }
  int rank() const { return tc_.rank(); }

  const TubeMorphism& epsilon(Label a, Label b) const;
  const TubeMorphism& twist(const TubeObject& x) const;

  /// Orthonormal coordinates (columns) of epsilon_A^B o Hom_TC(x, AB) inside Hom_TC(x, AB).
  const Matrix& irrep_basis(const TubeObject& x, Label a, Label b) const;
  int irrep_dim(const TubeObject& x, Label a, Label b) const {
    return static_cast<int>(irrep_basis(x, a, b).cols());
  }

  /// Matrix of v -> v o alpha from the (A,B) irrep at alpha.target to the one at alpha.source.
  Matrix irrep_action(const TubeMorphism& alpha, Label a, Label b) const;

  /// Row k holds tr of the (A,B) irrep on the k-th basis element of End_TC(x); columns run over A*rank+B.
  const Matrix& trace_table(const TubeObject& x) const;

 private:
  const tube::TubeCategory& tc_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<std::pair<Label, Label>, TubeMorphism> epsilon_;
  mutable std::map<Word, TubeMorphism> twist_;
  mutable std::map<std::tuple<Word, Label, Label>, Matrix> basis_;
  mutable std::map<Word, Matrix> traces_;
};

/// F = (+)_{A,B} Z_{AB} e_A^B#, acting contravariantly by precomposition.
class TubeRep {
 public:
  TubeRep(const RepContext& ctx, MultiplicityMatrix z, std::vector<TubeObject> family);

  const RepContext& context() const { return ctx_; }
  const MultiplicityMatrix& z() const { return z_; }
  const std::vector<TubeObject>& family() const { return family_; }
  bool in_family(const TubeObject& x) const;

  int dimension(const TubeObject& x) const;
  /// F(alpha): F(alpha.target) -> F(alpha.source).
  Matrix action(const TubeMorphism& alpha) const;

  Complex trace(const TubeMorphism& alpha) const;
  Complex trace_t_twisted(const TubeMorphism& alpha) const;
  /// tr F(t_X o alpha), the other placement of the twist.
  Complex trace_t_twisted_left(const TubeMorphism& alpha) const;
  /// Sum over S of tr F of the rotated S-component of alpha.
  Complex trace_s_twisted(const TubeMorphism& alpha) const;
  /// tr F of the rotation of f: g x -> x g, an endomorphism of g.
  Complex trace_s_twisted_rotated(const Word& g, const Word& x, const mtc::Morphism& f) const;
  Complex trace_nu(Label i, Label j) const;

 private:
  void require(const TubeObject& x) const;

  const RepContext& ctx_;
  MultiplicityMatrix z_;
  std::vector<TubeObject> family_;
};

TubeRep build_rep(const RepContext& ctx, const MultiplicityMatrix& z, std::vector<TubeObject> family);
TubeRep build_rep(const RepContext& ctx, const MultiplicityMatrix& z);

MultiplicityMatrix multiplicity_matrix(const TubeRep& rep);

/// Outcome of one invariance check: (a) the commutator with T or S, (b) the generator
/// condition (F(t_X) = id, resp. tr F(nu_I^J) = tr F(epsilon_I^J)), (c) equality of traces.
struct InvarianceReport {
  std::string check;
  bool commutator = false;
  bool generator = false;
  bool traces = false;
  bool consistent = false;
  double commutator_residual = 0.0;
  double generator_residual = 0.0;
  double trace_residual = 0.0;
  /// Per (I,J): |tr F(e_I^J o t) - Z_IJ| for T, |tr F(nu_I^J) - Z_IJ| for S.
  RealMatrix pair_residuals;
  /// Largest |tr F(nu_I^J) - (S Z S^-1)_IJ|; zero for the T check.
  double formula_residual = 0.0;
  bool formula = true;
  double worst_residual = 0.0;

  bool operator==(const InvarianceReport& other) const;
};

struct ModularInvarianceReport {
  InvarianceReport t;
  InvarianceReport s;
  bool unit_entry = false;
  bool modular_invariant = false;
  /// Tr = Tr^T = Tr^S on the whole family.
  bool trace_triple = false;
  bool consistent = false;
  MultiplicityMatrix recovered_z;

  bool operator==(const ModularInvarianceReport& other) const;
};

InvarianceReport check_t_invariance(const TubeRep& rep, const mtc::ModularData& md);
InvarianceReport check_s_invariance(const TubeRep& rep, const mtc::ModularData& md);
ModularInvarianceReport check_modular_invariance(const TubeRep& rep, const mtc::ModularData& md);

}  // namespace tubealg::reps

#endif  // TUBEALG_REPS_HPP
