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

#ifndef TUBEALG_REPORT_HPP
#define TUBEALG_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "tubealg/consistency.hpp"
#include "tubealg/modular_data.hpp"
#include "tubealg/reps.hpp"

namespace tubealg {

using json = nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json real_matrix_to_json(const RealMatrix& m);
RealMatrix real_matrix_from_json(const json& j);
json int_matrix_to_json(const IntMatrix& m);
/// Square integer matrix; throws Error on malformed input.
IntMatrix int_matrix_from_json(const json& j);

void to_json(json& j, const ResidualEntry& e);
void from_json(const json& j, ResidualEntry& e);
void to_json(json& j, const ConsistencyReport& r);
void from_json(const json& j, ConsistencyReport& r);

namespace mtc {
void to_json(json& j, const ModularData& md);
void from_json(const json& j, ModularData& md);
}  // namespace mtc

namespace reps {
void to_json(json& j, const InvarianceReport& r);
void from_json(const json& j, InvarianceReport& r);
void to_json(json& j, const ModularInvarianceReport& r);
void from_json(const json& j, ModularInvarianceReport& r);
}  // namespace reps

std::string format_complex(Complex z, int precision = 6);
std::string format_matrix(const Matrix& m, int precision = 6);
std::string format_int_matrix(const IntMatrix& m);

}  // namespace tubealg

#endif  // TUBEALG_REPORT_HPP
