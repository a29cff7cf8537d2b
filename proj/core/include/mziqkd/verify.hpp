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

#include <optional>
#include <string>
#include <vector>

namespace mziqkd {

struct CheckResult {
  std::string name;      // starts with the equation tag(s) it certifies
  bool passed = false;
  double max_error = 0.0;
  std::string detail;    // populated on failure
};

/// Test-only perturbation of one stored matrix entry, applied to the
/// suite's view of the transcriptions before the checks run. Valid
/// equation tags: Eq9, Eq10, Eq11, Eq12, Eq13 (row/col are 0-based; for
/// the phase-dependent matrices the delta is added at every phase).
struct FaultInjection {
  std::string equation;
  int row = 0;
  int col = 0;
  double delta = 0.0;
};

/// Runs every algebraic identity the simulator is built on, each compared
/// entrywise within kAlgebraTol: the 2x2 interferometer identities, the
/// four component transcriptions against independent references, the
/// composition against the stored closed form, the adjoint output
/// formulas, the linear basis, the entangled-pair forms, the coincidence
/// law on a 30x30 phase grid, and the two-basis mapping. A check that
/// throws is reported as failed rather than aborting the suite.
std::vector<CheckResult> run_identity_suite(
    const std::optional<FaultInjection>& fault = std::nullopt);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mziqkd
