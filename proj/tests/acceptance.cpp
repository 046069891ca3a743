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

// Acceptance suite: one pass/fail line per acceptance criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tubealg/modinv.hpp"

namespace {

using namespace tubealg;
using testing::bundled_names;
using testing::fixture;
using testing::random_morphism;
using testing::random_z;

struct Outcome {
  bool passed = true;
  double worst = 0.0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) detail = what;
    passed = passed && ok;
  }
  void bound(double residual, double tol, const std::string& what) {
    worst = std::max(worst, residual);
    expect(residual <= tol, what);
  }
};

double sandwich(const tube::TubeCategory& tc, const tube::TubeMorphism& e, const tube::TubeMorphism& f) {
  double worst = 0.0;
  for (int k = 0; k < tc.hom_dim(f.source, e.source); ++k)
    worst = std::max(worst, tube::max_abs(tc.compose(e, tc.compose(tc.basis_morphism(f.source, e.source, k), f))));
  return worst;
}

Outcome consistency_suite() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& name : bundled_names()) {
    auto cat = mtc::load_category_file(testing::data_path(name));
    auto md = mtc::compute_modular_data(cat);
    for (const auto& r : {mtc::verify_pentagon(cat), mtc::verify_hexagon(cat), mtc::verify_modular_relations(md, cat)})
      out.bound(r.max_residual, 1e-9, name + " " + r.check);
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.expect(seconds <= 60.0, "runtime above 60 s");
  return out;
}

Outcome idempotent_suite() {
  Outcome out;
  for (const auto& name : bundled_names()) {
    const auto& f = fixture(name);
    const int n = f.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& e = f.ctx.epsilon(i, j);
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const auto& g = f.ctx.epsilon(k, l);
            if (i == k && j == l) {
              out.bound(tube::residual(f.tc.compose(e, g), e), 1e-8, name + " idempotency");
            } else {
              out.bound(sandwich(f.tc, e, g), 1e-8, name + " orthogonality");
            }
          }
        out.expect(f.tc.pairing_rank(e) == 1, name + " pairing rank");
      }
    for (int s = 0; s < n; ++s) {
      tube::TubeMorphism sum = f.tc.zero({s}, {s});
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) sum += f.tc.isotypic_idempotent(s, a, b);
      out.bound(tube::residual(sum, f.tc.identity({s})), 1e-8, name + " completeness");
    }
  }
  return out;
}

Outcome handle_slide() {
  Outcome out;
  for (const auto& name : bundled_names()) {
    const auto& f = fixture(name);
    for (int i = 0; i < f.rank(); ++i)
      for (int j = 0; j < f.rank(); ++j)
        for (int s = 0; s < f.rank(); ++s)
          out.bound(f.tc.verify_handle_slide(i, j, s, f.md).max_residual, 1e-8, name + " handle slide");
  }
  return out;
}

Outcome trace_formula() {
  Outcome out;
  std::mt19937_64 rng(4242);
  for (const auto& name : bundled_names()) {
    const auto& f = fixture(name);
    for (int k = 0; k < 20; ++k) {
      IntMatrix z = random_z(rng, f.rank());
      auto rep = reps::build_rep(f.ctx, z);
      Matrix expected = f.md.s_matrix * z.cast<Complex>() * f.md.s_matrix.inverse();
      for (int i = 0; i < f.rank(); ++i)
        for (int j = 0; j < f.rank(); ++j)
          out.bound(std::abs(rep.trace_nu(i, j) - expected(i, j)), 1e-7, name + " tr F(nu)");
    }
  }
  return out;
}

std::vector<IntMatrix> non_invariant_samples(int n) {
  if (n == 1) return {IntMatrix::Zero(1, 1), IntMatrix::Constant(1, 1, 2), IntMatrix::Constant(1, 1, 3)};
  IntMatrix unit_only = IntMatrix::Zero(n, n);
  unit_only(0, 0) = 1;
  IntMatrix upper = IntMatrix::Identity(n, n);
  upper(0, n - 1) += 1;
  IntMatrix ones = IntMatrix::Ones(n, n);
  IntMatrix doubled = 2 * IntMatrix::Identity(n, n);
  return {unit_only, upper, ones, doubled};
}

Outcome biconditionals() {
  Outcome out;
  std::mt19937_64 rng(5151);
  int positives = 0, negatives = 0, commutator_failures = 0;
  for (const auto& name : bundled_names()) {
    const auto& f = fixture(name);
    const int n = f.rank();
    std::vector<IntMatrix> samples{IntMatrix::Identity(n, n)};
    auto negative = non_invariant_samples(n);
    samples.insert(samples.end(), negative.begin(), negative.end());
    for (int k = 0; k < 10; ++k) samples.push_back(random_z(rng, n));
    for (const auto& z : samples) {
      auto r = reps::check_modular_invariance(reps::build_rep(f.ctx, z), f.md);
      out.expect(r.t.commutator == r.t.traces, name + " [Z,T] vs Tr^T");
      out.expect(r.s.commutator == r.s.traces, name + " [Z,S] vs Tr^S");
      out.expect(r.t.commutator == r.t.generator, name + " [Z,T] vs F(t)");
      out.expect(r.s.commutator == r.s.generator, name + " [Z,S] vs tr F(nu)");
      out.expect(r.consistent, name + " report consistency");
      out.expect(r.modular_invariant == modinv::is_modular_invariant(z, f.md).invariant, name + " cross-module verdict");
      out.worst = std::max(out.worst, r.s.formula_residual);
      (r.modular_invariant ? positives : negatives) += 1;
      if (!r.t.commutator || !r.s.commutator) ++commutator_failures;
    }
    out.expect(reps::check_modular_invariance(reps::build_rep(f.ctx, samples[0]), f.md).modular_invariant,
               name + " identity rejected");
    for (std::size_t k = 1; k <= negative.size(); ++k)
      out.expect(!modinv::is_modular_invariant(samples[k], f.md).invariant, name + " negative sample accepted");
  }
  out.expect(positives > 0 && negatives > 0 && commutator_failures > 0, "instances not exercised");
  return out;
}

Outcome rotated_trace() {
  Outcome out;
  std::mt19937_64 rng(6161);
  for (const auto& name : bundled_names()) {
    const auto& f = fixture(name);
    const int n = f.rank();
    auto rep = reps::build_rep(f.ctx, random_z(rng, n));
    std::uniform_int_distribution<int> label(0, n - 1);
    for (int k = 0; k < 24; ++k) {
      mtc::Word g = k % 2 ? mtc::Word{label(rng), label(rng)} : mtc::Word{label(rng)};
      mtc::Word x = k % 3 ? mtc::Word{label(rng)} : mtc::Word{label(rng), label(rng)};
      auto fm = random_morphism(f.calc, mtc::concat(g, x), mtc::concat(x, g), rng);
      Complex direct = rep.trace_s_twisted(f.tc.reduce_circle(g, fm));
      Complex rotated = rep.trace_s_twisted_rotated(g, x, fm);
      out.bound(std::abs(direct - rotated) / std::max(1.0, std::abs(direct)), 1e-7, name + " rotated trace");
    }
  }
  return out;
}

Outcome enumeration() {
  Outcome out;
  for (const char* name : {"semion", "fibonacci"}) {
    const auto& md = fixture(name).md;
    auto found = modinv::enumerate_modular_invariants(md, modinv::default_entry_bound(md));
    out.expect(found.size() == 1 && found.front() == IntMatrix::Identity(2, 2), std::string(name) + " not {identity}");
  }
  for (const auto& name : bundled_names()) {
    const auto& f = fixture(name);
    if (f.rank() > 4) continue;
    for (int bound = 1; bound <= 3; ++bound) {
      auto lattice = modinv::enumerate_modular_invariants(f.md, bound);
      out.expect(lattice == modinv::enumerate_brute_force(f.md, bound),
                 name + " bound " + std::to_string(bound) + " lattice != brute force");
      for (const auto& z : lattice) {
        auto r = reps::check_modular_invariance(reps::build_rep(f.ctx, z), f.md);
        out.expect(r.modular_invariant && r.trace_triple && r.consistent, name + " enumerated Z rejected");
      }
    }
  }
  return out;
}

Outcome round_trip() {
  Outcome out;
  std::mt19937_64 rng(7171);
  for (const auto& name : bundled_names()) {
    const auto& f = fixture(name);
    for (int k = 0; k < 20; ++k) {
      IntMatrix z = random_z(rng, f.rank());
      out.expect(reps::multiplicity_matrix(reps::build_rep(f.ctx, z)) == z, name + " round trip");
    }
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "consistency suite (pentagon, hexagon, modular relations)", consistency_suite},
      {2, "tube idempotents (orthogonality, primitivity, completeness)", idempotent_suite},
      {3, "handle slide decomposition of gamma", handle_slide},
      {4, "trace of nu equals S Z S^-1 on random Z", trace_formula},
      {5, "commutator and trace verdicts agree", biconditionals},
      {6, "direct and rotated s-twisted traces agree", rotated_trace},
      {7, "modular invariant enumeration", enumeration},
      {8, "multiplicity matrix round trip", round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d %s  %s  worst residual %.2e  %.2fs%s%s\n", c.id, o.passed ? "PASS" : "FAIL", c.title,
                o.worst, seconds, o.detail.empty() ? "" : "  first failure: ", o.detail.c_str());
    failed += o.passed ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
