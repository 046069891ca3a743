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

#ifndef TUBEALG_CONSISTENCY_HPP
#define TUBEALG_CONSISTENCY_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace tubealg {

struct ResidualEntry {
  std::string instance;
  double residual = 0.0;

  bool operator==(const ResidualEntry&) const = default;
};

/// Outcome of a residual-based verification. Failures are recorded, never thrown.
struct ConsistencyReport {
  std::string check;
  double tolerance = 0.0;
  bool passed = true;
  double max_residual = 0.0;
  std::size_t instances = 0;
  // Instances whose residual exceeded the tolerance, capped at kMaxFailures.
  std::vector<ResidualEntry> failures;

  static constexpr std::size_t kMaxFailures = 32;

  ConsistencyReport() = default;
  ConsistencyReport(std::string name, double tol) : check(std::move(name)), tolerance(tol) {}

  void record(const std::string& instance, double residual) {
    ++instances;
    if (residual > max_residual) max_residual = residual;
    if (!(residual <= tolerance)) {
      passed = false;
      if (failures.size() < kMaxFailures) failures.push_back({instance, residual});
    }
  }

  void merge(const ConsistencyReport& other) {
    instances += other.instances;
    max_residual = std::max(max_residual, other.max_residual);
    passed = passed && other.passed;
    for (const auto& f : other.failures) {
      if (failures.size() < kMaxFailures) failures.push_back(f);
    }
  }

  bool operator==(const ConsistencyReport&) const = default;
};

}  // namespace tubealg

#endif  // TUBEALG_CONSISTENCY_HPP
