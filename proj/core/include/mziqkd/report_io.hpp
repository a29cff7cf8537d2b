// Copyright 2026 The mzi-qkd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "mziqkd/protocol.hpp"

namespace mziqkd {

/// Locale-independent decimal rendering with 17 significant digits, enough
/// for bit-exact double round trips.
std::string format_real(double value);

std::string verdict_name(Verdict verdict);
std::string source_name(SourceKind kind);
std::string attack_kind_name(AttackModel::Kind kind);

/// Session report as a single JSON object with stable key order:
/// config, counts{vv,vu,uv,uu,lost}, linear_test{tested,mismatches,qber},
/// circular_test{...}, key{length,agreement_rate},
/// eve{present,knowledge_rate}, verdict. Undefined rates serialize as null.
/// Key bits themselves are deliberately not exported.
std::string to_json(const SessionReport& report);

/// One header line plus one data row; '.' decimal separator and LF line
/// endings regardless of locale.
std::string to_csv(const SessionReport& report);

std::string to_human(const SessionReport& report);

/// JSON array of {measurement, pauli_analog} rows.
std::string to_json(const std::vector<BasisMapping>& mapping);

}  // namespace mziqkd
