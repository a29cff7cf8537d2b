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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mziqkd/adversary.hpp"
#include "mziqkd/measurement.hpp"

namespace mziqkd {

struct SessionConfig {
  std::uint64_t n_pairs = 100000;
  AttackModel attack = AttackModel::none();
  std::uint64_t seed = 0;
  /// Fraction of both-circular rounds consumed by the public circular
  /// test; the remainder becomes key material. Strictly in (0, 1).
  double sacrifice_fraction = 0.25;
  /// Either test QBER strictly above this aborts key use. The ideal
  /// channel has QBER exactly 0, so any positive threshold separates a
  /// clean run from an attacked one by a wide margin.
  double abort_qber_threshold = 0.05;
  SourceKind source = SourceKind::PsiPlus;

  bool operator==(const SessionConfig&) const = default;
};

struct PairRecord {
  std::uint64_t index = 0;
  Apparatus alice_basis = Apparatus::interferometer(Phase());
  Apparatus bob_basis = Apparatus::interferometer(Phase());
  std::optional<PortPolarization> alice_outcome;
  std::optional<PortPolarization> bob_outcome;
  bool lost = false;
  std::optional<EveRecord> eve_bits;
};

struct TestStats {
  std::uint64_t tested = 0;
  std::uint64_t mismatches = 0;
  /// Empty when tested == 0 (the QBER is then undefined).
  std::optional<double> qber;

  bool operator==(const TestStats&) const = default;
};

enum class Verdict : std::uint8_t { Clean, EavesdropperDetected, Aborted };

struct SessionReport {
  SessionConfig config;
  // Counts of the four apparatus configurations: v = interferometer,
  // u = circular analyzer, Alice's choice first. Lost pairs are counted
  // separately, so vv + vu + uv + uu + lost == n_pairs.
  std::uint64_t count_vv = 0;
  std::uint64_t count_vu = 0;
  std::uint64_t count_uv = 0;
  std::uint64_t count_uu = 0;
  std::uint64_t loss_count = 0;
  TestStats linear_test;
  TestStats circular_test;
  std::vector<std::uint8_t> sifted_key_alice;
  std::vector<std::uint8_t> sifted_key_bob;
  double key_agreement_rate = 0.0;  // 0 when the key is empty
  /// Fraction of final key rounds Eve holds a measurement record for;
  /// present only for attacks in which she measures.
  std::optional<double> eve_knowledge_rate;
  Verdict verdict = Verdict::Aborted;

  bool operator==(const SessionReport&) const = default;
};

/// Runs one protocol session: per pair, both parties pick V_0 or U_+-
/// uniformly at random, the attack channel acts, and joint outcomes are
/// sampled. Mixed-basis rounds are discarded; both-linear rounds feed the
/// linear test (mismatch = different exit ports); a sacrificed subset of
/// both-circular rounds feeds the circular test (mismatch = equal
/// handedness); the rest become key bits with Alice mapping right->0,
/// left->1 and Bob flipped so clean keys agree.
///
/// Pair k draws only from stream k of the seed, and the sacrifice lottery
/// from stream n_pairs + 1, so the report is bit-identical for any worker
/// count. Throws std::invalid_argument for n_pairs == 0 or out-of-range
/// fractions.
SessionReport run_session(const SessionConfig& config, unsigned n_workers = 1);

/// Cumulative probability 1 - (1-p)^n that n tested pairs reveal the
/// attack, where p is the larger of the two per-test mismatch
/// probabilities. All-zero for undetectable channels.
std::vector<std::pair<std::uint64_t, double>> detection_curve(
    const AttackModel& model, std::uint64_t test_pairs_max);

/// Correspondence between this scheme's measurements and the standard
/// two-basis prepare-and-measure description.
struct BasisMapping {
  std::string measurement;
  std::string pauli_analog;
  bool operator==(const BasisMapping&) const = default;
};

/// Exactly two rows: circular <-> sigma_z, linear <-> sigma_x.
std::vector<BasisMapping> bbm92_mapping();

}  // namespace mziqkd
