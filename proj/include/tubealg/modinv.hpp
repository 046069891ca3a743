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

#ifndef TUBEALG_MODINV_HPP
#define TUBEALG_MODINV_HPP

#include <cstdint>
#include <vector>

#include "tubealg/modular_data.hpp"

namespace tubealg::modinv {

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Basis of {M real : MS = SM, MT = TM} in reduced row-echelon form: basis[k] has entry 1 at
/// pivots[k] and 0 at every other pivot, so pivot entries are coordinates.
struct CommutantBasis {
  std::vector<RealMatrix> basis;
  std::vector<std::pair<int, int>> pivots;

  int dimension() const { return static_cast<int>(basis.size()); }
};

CommutantBasis commutant(const mtc::ModularData& md);

struct InvariantCheck {
  bool invariant = false;
  bool nonnegative = false;
  bool unit_entry = false;
  double s_residual = 0.0;
  double t_residual = 0.0;
};

InvariantCheck is_modular_invariant(const IntMatrix& z, const mtc::ModularData& md);

/// ceil(max d(I) d(J)) read off the first row of S, clamped to [1, cap].
int default_entry_bound(const mtc::ModularData& md, int cap = 3);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t candidates = 0;
};

/// Lattice search over pivot coordinates of the commutant. Throws SearchBudgetExceeded when
/// more than node_budget search nodes would be needed.
std::vector<IntMatrix> enumerate_modular_invariants(const mtc::ModularData& md, int entry_bound,
                                                    std::uint64_t node_budget = 50'000'000,
                                                    SearchStats* stats = nullptr);

/// Every matrix with entries in [0, entry_bound] and Z_11 = 1, tested one by one.
std::vector<IntMatrix> enumerate_brute_force(const mtc::ModularData& md, int entry_bound,
                                             SearchStats* stats = nullptr);

/// Lexicographic order on the row-major entries.
bool lexicographic_less(const IntMatrix& a, const IntMatrix& b);

}  // namespace tubealg::modinv

#endif  // TUBEALG_MODINV_HPP
