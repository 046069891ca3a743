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

#include "tubealg/modinv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tubealg::modinv {

namespace {

constexpr double kSnapTol = 1e-9;
constexpr int kMaxDenominator = 64;
constexpr double kCommuteTol = 1e-8;
constexpr double kIntegerTol = 1e-6;

double snap_rational(double x) {
  for (int q = 1; q <= kMaxDenominator; ++q) {
    double p = std::round(x * q);
    if (std::abs(x - p / q) <= kSnapTol) return p / q;
  }
  return x;
}

RealMatrix constraint_system(const mtc::ModularData& md) {
  const int n = md.rank();
  const int vars = n * n;
  RealMatrix a = RealMatrix::Zero(4 * vars, vars);
  // Row block for X in {S, T}: (M X - X M)_{ij} = sum_k M_ik X_kj - X_ik M_kj.
  const Matrix* gens[2] = {&md.s_matrix, &md.t_matrix};
  for (int g = 0; g < 2; ++g) {
    const Matrix& x = *gens[g];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int row = 2 * g * vars + i * n + j;
        for (int k = 0; k < n; ++k) {
          a(row, i * n + k) += x(k, j).real();
          a(row, k * n + j) -= x(i, k).real();
          a(row + vars, i * n + k) += x(k, j).imag();
          a(row + vars, k * n + j) -= x(i, k).imag();
        }
      }
  }
  return a;
}

}  // namespace

bool lexicographic_less(const IntMatrix& a, const IntMatrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  return false;
}

CommutantBasis commutant(const mtc::ModularData& md) {
  const int n = md.rank();
  const int vars = n * n;
  RealMatrix a = constraint_system(md);
  Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = 1e-8 * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  const int k = vars - rank;
  // Rows of r span the null space; bring them to reduced row-echelon form.
  RealMatrix r = svd.matrixV().rightCols(k).transpose();
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < vars && row < k; ++col) {
    int best = row;
    for (int i = row + 1; i < k; ++i) {
      if (std::abs(r(i, col)) > std::abs(r(best, col))) best = i;
    }
    if (std::abs(r(best, col)) < 1e-9) continue;
    r.row(row).swap(r.row(best));
    r.row(row) /= r(row, col);
    for (int i = 0; i < k; ++i) {
      if (i != row) r.row(i) -= r(i, col) * r.row(row);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  CommutantBasis out;
  for (int b = 0; b < row; ++b) {
    RealMatrix m(n, n);
    for (int v = 0; v < vars; ++v) m(v / n, v % n) = snap_rational(r(b, v));
    out.basis.push_back(std::move(m));
    out.pivots.emplace_back(pivot_cols[b] / n, pivot_cols[b] % n);
  }
  return out;
}

InvariantCheck is_modular_invariant(const IntMatrix& z, const mtc::ModularData& md) {
  InvariantCheck check;
  if (z.rows() != md.rank() || z.cols() != md.rank()) return check;
  Matrix zc = z.cast<Complex>();
  check.nonnegative = z.minCoeff() >= 0;
  check.unit_entry = z(0, 0) == 1;
  check.s_residual = normalized_residual(zc * md.s_matrix, md.s_matrix * zc);
  check.t_residual = normalized_residual(zc * md.t_matrix, md.t_matrix * zc);
  check.invariant = check.nonnegative && check.unit_entry && check.s_residual <= kCommuteTol &&
                    check.t_residual <= kCommuteTol;
  return check;
}

int default_entry_bound(const mtc::ModularData& md, int cap) {
  double best = 1.0;
  for (int i = 0; i < md.rank(); ++i)
    for (int j = 0; j < md.rank(); ++j) best = std::max(best, std::abs(md.s_matrix(0, i) * md.s_matrix(0, j)));
  int bound = static_cast<int>(std::ceil(best - 1e-9));
  return std::clamp(bound, 1, std::max(1, cap));
}

std::vector<IntMatrix> enumerate_modular_invariants(const mtc::ModularData& md, int entry_bound,
                                                    std::uint64_t node_budget, SearchStats* stats) {
  if (entry_bound < 1) throw Error("entry bound must be at least 1");
  const int n = md.rank();
  const int cells = n * n;
  CommutantBasis cb = commutant(md);
  const int k = cb.dimension();

  // coeff[p][e]: contribution of coordinate p to entry e.
  std::vector<std::vector<double>> coeff(k, std::vector<double>(cells));
  for (int p = 0; p < k; ++p)
    for (int e = 0; e < cells; ++e) coeff[p][e] = cb.basis[p](e / n, e % n);
  // Remaining range each entry can still move, once coordinates p.. are free in [0, bound].
  std::vector<std::vector<double>> rest_lo(k + 1, std::vector<double>(cells, 0.0));
  std::vector<std::vector<double>> rest_hi(k + 1, std::vector<double>(cells, 0.0));
  for (int p = k - 1; p >= 0; --p)
    for (int e = 0; e < cells; ++e) {
      double c = coeff[p][e] * entry_bound;
      rest_lo[p][e] = rest_lo[p + 1][e] + std::min(0.0, c);
      rest_hi[p][e] = rest_hi[p + 1][e] + std::max(0.0, c);
    }

  std::vector<IntMatrix> found;
  std::vector<double> partial(cells, 0.0);
  std::vector<int> coords(k, 0);
  SearchStats local;
  const double slack = 1e-7;

  auto feasible = [&](int depth) {
    for (int e = 0; e < cells; ++e) {
      double lo = partial[e] + rest_lo[depth][e];
      double hi = partial[e] + rest_hi[depth][e];
      if (hi < -slack || lo > entry_bound + slack) return false;
      if (e == 0 && (hi < 1.0 - slack || lo > 1.0 + slack)) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, int depth) -> void {
    if (++local.nodes > node_budget) {
      throw SearchBudgetExceeded("modular invariant search exceeded its node budget of " +
                                 std::to_string(node_budget));
    }
    if (!feasible(depth)) return;
    if (depth == k) {
      ++local.candidates;
      IntMatrix z(n, n);
      for (int e = 0; e < cells; ++e) {
        double v = partial[e];
        double r = std::round(v);
        if (std::abs(v - r) > kIntegerTol) return;
        z(e / n, e % n) = static_cast<int>(r);
      }
      if (z.minCoeff() < 0 || z.maxCoeff() > entry_bound) return;
      if (is_modular_invariant(z, md).invariant) found.push_back(std::move(z));
      return;
    }
    for (int v = 0; v <= entry_bound; ++v) {
      coords[depth] = v;
      for (int e = 0; e < cells; ++e) partial[e] += v * coeff[depth][e];
      self(self, depth + 1);
      for (int e = 0; e < cells; ++e) partial[e] -= v * coeff[depth][e];
    }
  };
  recurse(recurse, 0);

  std::sort(found.begin(), found.end(), lexicographic_less);
  if (stats) *stats = local;
  return found;
}

std::vector<IntMatrix> enumerate_brute_force(const mtc::ModularData& md, int entry_bound, SearchStats* stats) {
  if (entry_bound < 1) throw Error("entry bound must be at least 1");
  const int n = md.rank();
  const int cells = n * n;
  // forbidden[e]: a nonzero entry there breaks ZT = TZ, since T is diagonal.
  std::vector<char> forbidden(cells, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      forbidden[i * n + j] = std::abs(md.t_matrix(i, i) - md.t_matrix(j, j)) > kCommuteTol;
    }
  std::vector<int> digits(cells, 0);
  digits[0] = 1;
  int bad = forbidden[0] ? 1 : 0;
  std::vector<IntMatrix> found;
  SearchStats local;
  IntMatrix z(n, n);
  while (true) {
    ++local.nodes;
    if (bad == 0) {
      ++local.candidates;
      for (int e = 0; e < cells; ++e) z(e / n, e % n) = digits[e];
      if (is_modular_invariant(z, md).invariant) found.push_back(z);
    }
    int pos = cells - 1;
    while (pos >= 1) {
      if (digits[pos] < entry_bound) {
        if (digits[pos] == 0 && forbidden[pos]) ++bad;
        ++digits[pos];
        break;
      }
      if (forbidden[pos]) --bad;
      digits[pos] = 0;
      --pos;
    }
    if (pos < 1) break;
  }
  std::sort(found.begin(), found.end(), lexicographic_less);
  if (stats) *stats = local;
  return found;
}

}  // namespace tubealg::modinv
