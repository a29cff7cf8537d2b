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

#include <vector>

#include "mziqkd/hilbert.hpp"
#include "mziqkd/optics.hpp"
#include "mziqkd/rng.hpp"
#include "mziqkd/source.hpp"

namespace mziqkd {

/// A party's measurement choice: the polarizing interferometer V_alpha
/// (linear-polarization analyzer) or detectors placed directly behind the
/// circular analyzer U_+- (circular-polarization measurement).
class Apparatus {
 public:
  enum class Kind : std::uint8_t { Interferometer, CircularAnalyzer };

  static Apparatus interferometer(Phase alpha) {
    return Apparatus(Kind::Interferometer, alpha);
  }
  static Apparatus circular_analyzer() {
    return Apparatus(Kind::CircularAnalyzer, Phase());
  }

  Kind kind() const { return kind_; }
  /// Phase of the interferometer; Phase(0) for the circular analyzer.
  Phase phase() const { return phase_; }

  bool operator==(const Apparatus&) const = default;

 private:
  Apparatus(Kind kind, Phase phase) : kind_(kind), phase_(phase) {}
  Kind kind_;
  Phase phase_;
};

struct JointOutcome {
  PortPolarization alice;
  PortPolarization bob;
  bool operator==(const JointOutcome&) const = default;
};

/// Born-rule outcome probabilities, over the 4 single-photon detector
/// labels or the 16 joint labels, always in the fixed basis ordering.
/// Probabilities are validated to be nonnegative and sum to 1 within
/// kAlgebraTol.
class OutcomeDistribution {
 public:
  enum class Kind : std::uint8_t { Single, Joint };

  static OutcomeDistribution single(std::vector<double> probabilities);
  static OutcomeDistribution joint(std::vector<double> probabilities);

  Kind kind() const { return kind_; }
  std::size_t size() const { return probabilities_.size(); }
  double prob_at(std::size_t index) const { return probabilities_.at(index); }
  double prob(PortPolarization outcome) const;
  double prob(PortPolarization alice, PortPolarization bob) const;
  const std::vector<double>& probabilities() const { return probabilities_; }

  /// Inverse-CDF sampling over outcomes in fixed label order; zero-weight
  /// outcomes are unreachable.
  PortPolarization sample_single(RngStream& rng) const;
  JointOutcome sample_joint(RngStream& rng) const;

 private:
  OutcomeDistribution(Kind kind, std::vector<double> probabilities);
  std::size_t sample_index(RngStream& rng) const;

  Kind kind_;
  std::vector<double> probabilities_;
};

/// V_alpha for an interferometer, U_+- for the circular analyzer.
CMat apparatus_unitary(const Apparatus& apparatus);

OutcomeDistribution single_distribution(const CVec& state,
                                        const Apparatus& apparatus);

OutcomeDistribution pair_distribution(const PairState& state,
                                      const Apparatus& alice,
                                      const Apparatus& bob);

/// Same Born arithmetic as pair_distribution given a prebuilt 16x16 joint
/// unitary; lets session loops hoist the tensor product out of the hot path.
OutcomeDistribution pair_distribution_with(const CMat& joint_unitary,
                                           const CVec& amplitudes);

/// Closed-form coincidence law for the Psi+ source behind V_alpha (x)
/// V_beta: (1/2)cos^2((alpha-beta)/2) when both photons exit the same
/// +-labelled port, (1/2)sin^2 for crossed + ports, 0 for any outcome with
/// left-handed polarization.
double coincidence_probability(Phase alpha, Phase beta, JointOutcome joint);

/// E(alpha, beta) = P(same + port) - P(crossed + ports) = cos(alpha-beta),
/// assembled from coincidence_probability. Outcome value +1 is the 2+ exit,
/// -1 the 1+ exit.
double correlation(Phase alpha, Phase beta);

/// |E(a,b) - E(a,b') + E(a',b) + E(a',b')|.
double chsh_value(Phase a, Phase a_prime, Phase b, Phase b_prime);

}  // namespace mziqkd
