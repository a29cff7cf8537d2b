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
#include <string_view>
#include <utility>

#include "mziqkd/hilbert.hpp"

namespace mziqkd {

/// Interferometer phase in radians, stored canonically in [0, 2*pi).
/// Note the half-angle convention: a phase of alpha analyzes the linear
/// polarization plane at angle alpha/2.
class Phase {
 public:
  Phase() = default;
  explicit Phase(double radians);

  double radians() const { return radians_; }

  friend Phase operator+(Phase a, Phase b) {
    return Phase(a.radians_ + b.radians_);
  }
  bool operator==(const Phase&) const = default;

 private:
  double radians_ = 0.0;
};

/// Converts a linear-polarization plane angle to the interferometer phase
/// that analyzes it (factor of two lives here and nowhere else).
Phase phase_for_polarization_plane(double plane_radians);

enum class Handedness : std::uint8_t { Right, Left };

// Single-photon basis labels in the fixed global ordering (1+, 1-, 2+, 2-).
// Every matrix and amplitude vector in this library uses this ordering.
enum class PortPolarization : std::uint8_t {
  Port1Right = 0,
  Port1Left = 1,
  Port2Right = 2,
  Port2Left = 3,
};

constexpr int index_of(PortPolarization p) { return static_cast<int>(p); }
PortPolarization port_polarization_from_index(int index);
constexpr int port_of(PortPolarization p) {
  return index_of(p) < 2 ? 1 : 2;
}
constexpr Handedness handedness_of(PortPolarization p) {
  return (index_of(p) % 2 == 0) ? Handedness::Right : Handedness::Left;
}
std::string_view label(PortPolarization p);

/// Index of a joint two-photon component; Alice's slot varies slowest.
constexpr int joint_index(PortPolarization alice, PortPolarization bob) {
  return 4 * index_of(alice) + index_of(bob);
}

// -- Component unitaries, transcribed in the (1+, 1-, 2+, 2-) ordering. ---

/// Circular-polarization analyzer U_+-: reflects right-handed port-1 light
/// (with a factor i), transmits left-handed light to port 2.
CMat polarizing_beam_splitter();

/// Half-wave plate on the lower path: swaps 2+ and 2-, identity on port 1.
CMat half_wave_plate();

/// Multiplies both port-1 amplitudes by e^{i*alpha}.
CMat phase_shifter(Phase alpha);

/// Polarization-preserving symmetric 50/50 mirror; acts as the ordinary
/// beam splitter independently on each handedness subspace.
CMat symmetric_mirror();

/// Full polarizing interferometer V_alpha, computed by composing
/// mirror * phase * half-wave * analyzer. The result is checked against an
/// independently stored closed form; a mismatch beyond kAlgebraTol means
/// one of the transcriptions is wrong and throws std::logic_error.
CMat interferometer(Phase alpha);

/// The stored closed-form matrix for V_alpha (second transcription, kept
/// independent of the composition on purpose).
CMat interferometer_closed_form(Phase alpha);

/// 2x2 beam splitter of the ordinary (non-polarizing) interferometer;
/// two passes give i*sigma_x.
CMat ev_interferometer();

/// The linear-polarization basis analyzed by V_alpha:
/// first = |alpha> (routed to i|2+>), second = |alpha_perp> (routed to
/// -|1+>). Both are unit vectors supported on port 1 only; at alpha = 0
/// they reduce to |1x> and -|1y>.
std::pair<CVec, CVec> linear_basis(Phase alpha);

}  // namespace mziqkd
