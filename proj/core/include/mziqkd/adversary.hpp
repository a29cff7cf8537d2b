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

#include "mziqkd/measurement.hpp"
#include "mziqkd/rng.hpp"
#include "mziqkd/source.hpp"

namespace mziqkd {

enum class BlockSide : std::uint8_t { Alice, Bob };
enum class BlockPath : std::uint8_t { Upper, Lower };

/// Eve's channel, applied to each pair in transit.
///
///  - NoAttack: identity channel.
///  - InterceptResendCircular: Eve measures both photons' circular
///    polarizations and forwards freshly prepared photons in the measured
///    basis states.
///  - NastySendLinear: Eve measures circular polarizations (recording the
///    would-be key) but forwards two identical linearly polarized photons
///    along the configured plane, regardless of her outcomes.
///  - PathBlock: an obstacle in one interferometer arm; blocking the upper
///    path absorbs the right-handed component, the lower path the
///    left-handed one.
class AttackModel {
 public:
  enum class Kind : std::uint8_t {
    NoAttack,
    InterceptResendCircular,
    NastySendLinear,
    PathBlock,
  };

  static AttackModel none() { return AttackModel(Kind::NoAttack); }
  static AttackModel intercept_resend_circular() {
    return AttackModel(Kind::InterceptResendCircular);
  }
  /// resend_axis is the polarization *plane* angle; the interferometer
  /// phase analyzing it is twice the angle (see
  /// phase_for_polarization_plane). Default 0 is x-polarized light.
  static AttackModel nasty_send_linear(Phase resend_axis = Phase()) {
    AttackModel m(Kind::NastySendLinear);
    m.resend_axis_ = resend_axis;
    return m;
  }
  static AttackModel path_block(BlockSide side, BlockPath path) {
    AttackModel m(Kind::PathBlock);
    m.block_side_ = side;
    m.block_path_ = path;
    return m;
  }

  Kind kind() const { return kind_; }
  Phase resend_axis() const { return resend_axis_; }
  BlockSide block_side() const { return block_side_; }
  BlockPath block_path() const { return block_path_; }

  /// True for attacks in which Eve measures (and therefore records bits).
  bool eve_measures() const {
    return kind_ == Kind::InterceptResendCircular ||
           kind_ == Kind::NastySendLinear;
  }

  bool operator==(const AttackModel&) const = default;

 private:
  explicit AttackModel(Kind kind) : kind_(kind) {}

  Kind kind_;
  Phase resend_axis_{};
  BlockSide block_side_ = BlockSide::Alice;
  BlockPath block_path_ = BlockPath::Upper;
};

/// Eve's record for one pair: the circular outcomes she measured.
struct EveRecord {
  Handedness alice;
  Handedness bob;
  bool operator==(const EveRecord&) const = default;
};

struct AttackResult {
  std::optional<PairState> delivered;  // empty iff the photon was absorbed
  std::optional<EveRecord> eve_bits;   // present iff Eve measured
  bool lost = false;
};

/// Applies the attack channel to one pair, drawing any randomness from the
/// given stream. Non-lost deliveries are normalized.
AttackResult apply_attack(const AttackModel& model, const PairState& state,
                          RngStream& rng);

enum class EavesdropTest : std::uint8_t { Linear, Circular };

/// Per-tested-pair mismatch probability for the Psi+ source: the chance
/// that one pair, run through the given public test, violates the expected
/// correlation (agreement of linear outcomes for the Linear test,
/// anti-correlated handedness for the Circular test). Computed exactly from
/// the Born rule on the attack's delivered ensemble, conditioned on
/// delivery.
double detection_probability(const AttackModel& model, EavesdropTest test);

}  // namespace mziqkd
