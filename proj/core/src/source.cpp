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

#include "mziqkd/source.hpp"

#include <cmath>
#include <stdexcept>

namespace mziqkd {

PairState::PairState(CVec amplitudes, PairLabel label)
    : amplitudes_(std::move(amplitudes)), label_(label) {
  if (amplitudes_.size() != 16) {
    throw std::invalid_argument("PairState: expected 16 amplitudes");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kAlgebraTol) {
    throw std::invalid_argument("PairState: amplitudes not normalized");
  }
}

namespace {

PairState entangled_pair(double relative_sign, PairLabel label) {
  const double s = 1.0 / std::sqrt(2.0);
  CVec amp = CVec::Zero(16);
  amp(joint_index(PortPolarization::Port1Right, PortPolarization::Port1Left)) =
      Complex(s, 0.0);
  amp(joint_index(PortPolarization::Port1Left, PortPolarization::Port1Right)) =
      Complex(relative_sign * s, 0.0);
  return PairState(std::move(amp), label);
}

}  // namespace

PairState psi_plus() { return entangled_pair(+1.0, PairLabel::PsiPlus); }

PairState psi_minus() { return entangled_pair(-1.0, PairLabel::PsiMinus); }

PairState make_source(SourceKind kind) {
  return kind == SourceKind::PsiPlus ? psi_plus() : psi_minus();
}

CVec linear_form(const PairState& state, Phase alpha) {
  const PairLabel l = state.label();
  if (l != PairLabel::PsiPlus && l != PairLabel::PsiMinus) {
    throw std::invalid_argument(
        "linear_form: only Psi+/Psi- have a linear-basis form");
  }
  const auto [ket, ket_perp] = linear_basis(alpha);
  const Complex prefactor =
      std::exp(kImag * alpha.radians()) / std::sqrt(2.0);
  if (l == PairLabel::PsiPlus) {
    return prefactor * (tensor(ket, ket) - tensor(ket_perp, ket_perp));
  }
  return prefactor * (tensor(ket_perp, ket) - tensor(ket, ket_perp));
}

}  // namespace mziqkd
