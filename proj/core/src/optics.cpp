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

#include "mziqkd/optics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mziqkd {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
const Complex kZero{0.0, 0.0};
const Complex kOne{1.0, 0.0};
}  // namespace

Phase::Phase(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // fmod plus the shift can round up to 2*pi
  radians_ = r;
}

Phase phase_for_polarization_plane(double plane_radians) {
  return Phase(2.0 * plane_radians);
}

PortPolarization port_polarization_from_index(int index) {
  if (index < 0 || index > 3) {
    throw std::invalid_argument("port_polarization_from_index: out of range");
  }
  return static_cast<PortPolarization>(index);
}

std::string_view label(PortPolarization p) {
  switch (p) {
    case PortPolarization::Port1Right: return "1+";
    case PortPolarization::Port1Left: return "1-";
    case PortPolarization::Port2Right: return "2+";
    case PortPolarization::Port2Left: return "2-";
  }
  throw std::logic_error("label: invalid PortPolarization");
}

CMat polarizing_beam_splitter() {
  CMat m(4, 4);
  m << kImag, kZero, kZero, kZero,
       kZero, kZero, kOne,  kZero,
       kZero, kZero, kZero, kOne,
       kZero, kOne,  kZero, kZero;
  return m;
}

CMat half_wave_plate() {
  CMat m(4, 4);
  m << kOne,  kZero, kZero, kZero,
       kZero, kOne,  kZero, kZero,
       kZero, kZero, kZero, kOne,
       kZero, kZero, kOne,  kZero;
  return m;
}

CMat phase_shifter(Phase alpha) {
  const Complex phase = std::exp(kImag * alpha.radians());
  CMat m = CMat::Identity(4, 4);
  m(0, 0) = phase;
  m(1, 1) = phase;
  return m;
}

CMat symmetric_mirror() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex si{0.0, s};
  CMat m(4, 4);
  m << si,              kZero,           Complex{s, 0.0}, kZero,
       kZero,           si,              kZero,           Complex{s, 0.0},
       Complex{s, 0.0}, kZero,           si,              kZero,
       kZero,           Complex{s, 0.0}, kZero,           si;
  return m;
}

CMat interferometer_closed_form(Phase alpha) {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex e = std::exp(kImag * alpha.radians());
  CMat m(4, 4);
  m << -s * e,        Complex{s, 0.0}, kZero,         kZero,
       kZero,         kZero,           s * kImag * e, Complex{s, 0.0},
       s * kImag * e, s * kImag,       kZero,         kZero,
       kZero,         kZero,           s * e,         s * kImag;
  return m;
}

CMat interferometer(Phase alpha) {
  const CMat composed = symmetric_mirror() * phase_shifter(alpha) *
                        half_wave_plate() * polarizing_beam_splitter();
  if (max_abs_diff(composed, interferometer_closed_form(alpha)) > kAlgebraTol) {
    throw std::logic_error(
        "interferometer: composed matrix disagrees with the stored closed "
        "form; one of the transcriptions is corrupt");
  }
  return composed;
}

CMat ev_interferometer() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex si{0.0, s};
  CMat m(2, 2);
  m << si, Complex{s, 0.0},
       Complex{s, 0.0}, si;
  return m;
}

std::pair<CVec, CVec> linear_basis(Phase alpha) {
  const CMat v_dag = dagger(interferometer(alpha));
  // |alpha> = V^dagger (i |2+>),  |alpha_perp> = V^dagger (-|1+>)
  CVec ket = v_dag * CVec(kImag * basis_vector(4, 2));
  CVec ket_perp = v_dag * CVec(-basis_vector(4, 0));
  return {std::move(ket), std::move(ket_perp)};
}

}  // namespace mziqkd
