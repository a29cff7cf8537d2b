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

#include "mziqkd/adversary.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mziqkd {

namespace {

// Joint circular-basis Born weights of a pair state: just the squared
// moduli of the 16 amplitudes.
std::vector<double> circular_weights(const PairState& state) {
  std::vector<double> w(16);
  for (Eigen::Index i = 0; i < 16; ++i) {
    w[static_cast<std::size_t>(i)] = std::norm(state.amplitudes()(i));
  }
  return w;
}

int sample_weighted_index(const std::vector<double>& weights, RngStream& rng) {
  const double u = rng.next_double();
  double cumulative = 0.0;
  int last_positive = -1;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    cumulative += weights[i];
    last_positive = static_cast<int>(i);
    if (u < cumulative) return last_positive;
  }
  return last_positive;
}

EveRecord record_from_joint_index(int idx) {
  return {handedness_of(port_polarization_from_index(idx / 4)),
          handedness_of(port_polarization_from_index(idx % 4))};
}

PairState nasty_delivery(Phase resend_axis) {
  const Phase analyzing_phase =
      phase_for_polarization_plane(resend_axis.radians());
  const CVec photon = linear_basis(analyzing_phase).first;
  return PairState(tensor(photon, photon), PairLabel::Product);
}

Handedness removed_handedness(BlockPath path) {
  // The analyzer reflects right-handed light into the upper arm and
  // transmits left-handed light into the lower one.
  return path == BlockPath::Upper ? Handedness::Right : Handedness::Left;
}

// Weight of the blocked side's removed circular component.
double removed_weight(const PairState& state, BlockSide side,
                      Handedness removed) {
  double w = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto pa = port_polarization_from_index(a);
      const auto pb = port_polarization_from_index(b);
      const Handedness h =
          side == BlockSide::Alice ? handedness_of(pa) : handedness_of(pb);
      if (h == removed) w += std::norm(state.amplitude(pa, pb));
    }
  }
  return w;
}

PairState project_out(const PairState& state, BlockSide side,
                      Handedness removed, double surviving_weight) {
  CVec amp = state.amplitudes();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto pa = port_polarization_from_index(a);
      const auto pb = port_polarization_from_index(b);
      const Handedness h =
          side == BlockSide::Alice ? handedness_of(pa) : handedness_of(pb);
      if (h == removed) amp(joint_index(pa, pb)) = Complex(0.0, 0.0);
    }
  }
  amp /= std::sqrt(surviving_weight);
  return PairState(std::move(amp), PairLabel::Custom);
}

}  // namespace

AttackResult apply_attack(const AttackModel& model, const PairState& state,
                          RngStream& rng) {
  switch (model.kind()) {
    case AttackModel::Kind::NoAttack:
      return {state, std::nullopt, false};

    case AttackModel::Kind::InterceptResendCircular: {
      const int idx = sample_weighted_index(circular_weights(state), rng);
      CVec amp = CVec::Zero(16);
      amp(idx) = Complex(1.0, 0.0);
      return {PairState(std::move(amp), PairLabel::Product),
              record_from_joint_index(idx), false};
    }

    case AttackModel::Kind::NastySendLinear: {
      const int idx = sample_weighted_index(circular_weights(state), rng);
      return {nasty_delivery(model.resend_axis()), record_from_joint_index(idx),
              false};
    }

    case AttackModel::Kind::PathBlock: {
      const Handedness removed = removed_handedness(model.block_path());
      const double loss = removed_weight(state, model.block_side(), removed);
      if (rng.next_double() < loss) {
        return {std::nullopt, std::nullopt, true};
      }
      return {project_out(state, model.block_side(), removed, 1.0 - loss),
              std::nullopt, false};
    }
  }
  throw std::logic_error("apply_attack: invalid attack kind");
}

namespace {

// Delivered states and their weights for the Psi+ source, conditioned on
// delivery. Small by construction: every attack here delivers one of at
// most 16 distinct states.
std::vector<std::pair<double, PairState>> delivered_ensemble(
    const AttackModel& model) {
  switch (model.kind()) {
    case AttackModel::Kind::NoAttack:
      return {{1.0, psi_plus()}};

    case AttackModel::Kind::InterceptResendCircular: {
      std::vector<std::pair<double, PairState>> out;
      const auto weights = circular_weights(psi_plus());
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        CVec amp = CVec::Zero(16);
        amp(static_cast<Eigen::Index>(i)) = Complex(1.0, 0.0);
        out.emplace_back(weights[i],
                         PairState(std::move(amp), PairLabel::Product));
      }
      return out;
    }

    case AttackModel::Kind::NastySendLinear:
      return {{1.0, nasty_delivery(model.resend_axis())}};

    case AttackModel::Kind::PathBlock: {
      const PairState src = psi_plus();
      const Handedness removed = removed_handedness(model.block_path());
      const double loss = removed_weight(src, model.block_side(), removed);
      if (loss >= 1.0) return {};
      return {{1.0, project_out(src, model.block_side(), removed, 1.0 - loss)}};
    }
  }
  throw std::logic_error("delivered_ensemble: invalid attack kind");
}

double mismatch_probability(const PairState& state, EavesdropTest test) {
  const Apparatus app = test == EavesdropTest::Linear
                            ? Apparatus::interferometer(Phase())
                            : Apparatus::circular_analyzer();
  const auto dist = pair_distribution(state, app, app);
  double mismatch = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto pa = port_polarization_from_index(a);
      const auto pb = port_polarization_from_index(b);
      const bool violates =
          test == EavesdropTest::Linear
              // Psi+ predicts identical linear polarizations: same exit port.
              ? port_of(pa) != port_of(pb)
              // Psi+ predicts anti-correlated handedness.
              : handedness_of(pa) == handedness_of(pb);
      if (violates) mismatch += dist.prob(pa, pb);
    }
  }
  return mismatch;
}

}  // namespace

double detection_probability(const AttackModel& model, EavesdropTest test) {
  double p = 0.0;
  for (const auto& [weight, state] : delivered_ensemble(model)) {
    p += weight * mismatch_probability(state, test);
  }
  return p;
}

}  // namespace mziqkd
