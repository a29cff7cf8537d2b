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

#include "mziqkd/hilbert.hpp"
#include "mziqkd/optics.hpp"

namespace mziqkd {

enum class PairLabel : std::uint8_t { PsiPlus, PsiMinus, Product, Custom };

enum class SourceKind : std::uint8_t { PsiPlus, PsiMinus };

/// Two-photon state over (Alice port x pol) (x) (Bob port x pol); 16 complex
/// amplitudes with Alice's slot varying slowest. Construction enforces
/// normalization within kAlgebraTol.
class PairState {
 public:
  PairState(CVec amplitudes, PairLabel label);

  const CVec& amplitudes() const { return amplitudes_; }
  PairLabel label() const { return label_; }

  Complex amplitude(PortPolarization alice, PortPolarization bob) const {
    return amplitudes_(joint_index(alice, bob));
  }

 private:
  CVec amplitudes_;
  PairLabel label_;
};

/// (|1+>|1-> + |1->|1+>)/sqrt(2): parallel linear polarizations in every
/// basis; the default protocol source.
PairState psi_plus();

/// (|1+>|1-> - |1->|1+>)/sqrt(2): the singlet-like state with perpendicular
/// linear polarizations.
PairState psi_minus();

PairState make_source(SourceKind kind);

/// Rebuilds a Psi+/Psi- state from the linear basis at the given phase,
/// including the explicit e^{i*alpha}/sqrt(2) prefactor. The result equals
/// the circular-basis amplitudes exactly (not merely up to phase) for every
/// alpha; that equality is the rotational-invariance property of the pair.
/// Throws std::invalid_argument for Product/Custom states.
CVec linear_form(const PairState& state, Phase alpha);

}  // namespace mziqkd
