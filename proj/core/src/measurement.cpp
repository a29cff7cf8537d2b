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

#include "mziqkd/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace mziqkd {

OutcomeDistribution::OutcomeDistribution(Kind kind,
                                         std::vector<double> probabilities)
    : kind_(kind), probabilities_(std::move(probabilities)) {
  double sum = 0.0;
  for (double p : probabilities_) {
    if (p < 0.0) {
      throw std::logic_error("OutcomeDistribution: negative probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kAlgebraTol) {
    throw std::logic_error("OutcomeDistribution: probabilities do not sum to 1");
  }
}

OutcomeDistribution OutcomeDistribution::single(
    std::vector<double> probabilities) {
  if (probabilities.size() != 4) {
    throw std::invalid_argument("single distribution needs 4 probabilities");
  }
  return OutcomeDistribution(Kind::Single, std::move(probabilities));
}

OutcomeDistribution OutcomeDistribution::joint(
    std::vector<double> probabilities) {
  if (probabilities.size() != 16) {
    throw std::invalid_argument("joint distribution needs 16 probabilities");
  }
  return OutcomeDistribution(Kind::Joint, std::move(probabilities));
}

double OutcomeDistribution::prob(PortPolarization outcome) const {
  if (kind_ != Kind::Single) {
    throw std::logic_error("prob(outcome): not a single-photon distribution");
  }
  return probabilities_[static_cast<std::size_t>(index_of(outcome))];
}

double OutcomeDistribution::prob(PortPolarization alice,
                                 PortPolarization bob) const {
  if (kind_ != Kind::Joint) {
    throw std::logic_error("prob(alice, bob): not a joint distribution");
  }
  return probabilities_[static_cast<std::size_t>(joint_index(alice, bob))];
}

std::size_t OutcomeDistribution::sample_index(RngStream& rng) const {
  const double u = rng.next_double();
  double cumulative = 0.0;
  std::size_t last_positive = probabilities_.size();
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    if (probabilities_[i] <= 0.0) continue;
    cumulative += probabilities_[i];
    last_positive = i;
    if (u < cumulative) return i;
  }
  // u landed in the rounding sliver above the accumulated total.
  return last_positive;
}

PortPolarization OutcomeDistribution::sample_single(RngStream& rng) const {
  if (kind_ != Kind::Single) {
    throw std::logic_error("sample_single: not a single-photon distribution");
  }
  return port_polarization_from_index(static_cast<int>(sample_index(rng)));
}

JointOutcome OutcomeDistribution::sample_joint(RngStream& rng) const {
  if (kind_ != Kind::Joint) {
    throw std::logic_error("sample_joint: not a joint distribution");
  }
  const int idx = static_cast<int>(sample_index(rng));
  return {port_polarization_from_index(idx / 4),
          port_polarization_from_index(idx % 4)};
}

CMat apparatus_unitary(const Apparatus& apparatus) {
  if (apparatus.kind() == Apparatus::Kind::Interferometer) {
    return interferometer(apparatus.phase());
  }
  return polarizing_beam_splitter();
}

OutcomeDistribution single_distribution(const CVec& state,
                                        const Apparatus& apparatus) {
  if (state.size() != 4) {
    throw std::invalid_argument("single_distribution: expected 4 amplitudes");
  }
  const CVec out = mziqkd::apply(apparatus_unitary(apparatus), state);
  std::vector<double> probs(4);
  for (Eigen::Index i = 0; i < 4; ++i) probs[i] = std::norm(out(i));
  return OutcomeDistribution::single(std::move(probs));
}

OutcomeDistribution pair_distribution_with(const CMat& joint_unitary,
                                           const CVec& amplitudes) {
  const CVec out = mziqkd::apply(joint_unitary, amplitudes);
  std::vector<double> probs(16);
  for (Eigen::Index i = 0; i < 16; ++i) probs[i] = std::norm(out(i));
  return OutcomeDistribution::joint(std::move(probs));
}

OutcomeDistribution pair_distribution(const PairState& state,
                                      const Apparatus& alice,
                                      const Apparatus& bob) {
  const CMat joint = tensor(apparatus_unitary(alice), apparatus_unitary(bob));
  return pair_distribution_with(joint, state.amplitudes());
}

double coincidence_probability(Phase alpha, Phase beta, JointOutcome joint) {
  if (handedness_of(joint.alice) == Handedness::Left ||
      handedness_of(joint.bob) == Handedness::Left) {
    return 0.0;
  }
  const double half = 0.5 * (alpha.radians() - beta.radians());
  if (port_of(joint.alice) == port_of(joint.bob)) {
    const double c = std::cos(half);
    return 0.5 * c * c;
  }
  const double s = std::sin(half);
  return 0.5 * s * s;
}

double correlation(Phase alpha, Phase beta) {
  using PP = PortPolarization;
  const double same =
      coincidence_probability(alpha, beta, {PP::Port1Right, PP::Port1Right}) +
      coincidence_probability(alpha, beta, {PP::Port2Right, PP::Port2Right});
  const double crossed =
      coincidence_probability(alpha, beta, {PP::Port1Right, PP::Port2Right}) +
      coincidence_probability(alpha, beta, {PP::Port2Right, PP::Port1Right});
  return same - crossed;
}

double chsh_value(Phase a, Phase a_prime, Phase b, Phase b_prime) {
  return std::abs(correlation(a, b) - correlation(a, b_prime) +
                  correlation(a_prime, b) + correlation(a_prime, b_prime));
}

}  // namespace mziqkd
