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

#include "mziqkd/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace mziqkd {

namespace {

void validate(const SessionConfig& config) {
  if (config.n_pairs == 0) {
    throw std::invalid_argument("run_session: n_pairs must be positive");
  }
  if (!(config.sacrifice_fraction > 0.0 && config.sacrifice_fraction < 1.0)) {
    throw std::invalid_argument(
        "run_session: sacrifice_fraction must lie strictly in (0, 1)");
  }
  if (!(config.abort_qber_threshold >= 0.0 &&
        config.abort_qber_threshold < 1.0)) {
    throw std::invalid_argument(
        "run_session: abort_qber_threshold must lie in [0, 1)");
  }
}

std::uint8_t alice_key_bit(PortPolarization outcome) {
  return handedness_of(outcome) == Handedness::Right ? 0 : 1;
}

// Bob's mapping is flipped: the source anti-correlates handedness, so the
// flip makes clean keys agree bit for bit.
std::uint8_t bob_key_bit(PortPolarization outcome) {
  return handedness_of(outcome) == Handedness::Right ? 1 : 0;
}

}  // namespace

SessionReport run_session(const SessionConfig& config, unsigned n_workers) {
  validate(config);
  const PairState source_state = make_source(config.source);

  const CMat u_interf =
      apparatus_unitary(Apparatus::interferometer(Phase()));
  const CMat u_circ = apparatus_unitary(Apparatus::circular_analyzer());
  // Joint unitaries for the four basis configurations, [alice][bob] with
  // 0 = interferometer, 1 = circular analyzer.
  const CMat joint[2][2] = {
      {tensor(u_interf, u_interf), tensor(u_interf, u_circ)},
      {tensor(u_circ, u_interf), tensor(u_circ, u_circ)},
  };

  const std::uint64_t n = config.n_pairs;
  std::vector<PairRecord> records(n);

  auto simulate_range = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t k = lo; k < hi; ++k) {
      RngStream stream(config.seed, k);
      const bool alice_circular = stream.next_bit();
      const bool bob_circular = stream.next_bit();

      PairRecord rec;
      rec.index = k;
      rec.alice_basis = alice_circular ? Apparatus::circular_analyzer()
                                       : Apparatus::interferometer(Phase());
      rec.bob_basis = bob_circular ? Apparatus::circular_analyzer()
                                   : Apparatus::interferometer(Phase());

      AttackResult attacked = apply_attack(config.attack, source_state, stream);
      rec.eve_bits = attacked.eve_bits;
      rec.lost = attacked.lost;
      if (!attacked.lost) {
        const auto dist = pair_distribution_with(
            joint[alice_circular ? 1 : 0][bob_circular ? 1 : 0],
            attacked.delivered->amplitudes());
        const JointOutcome outcome = dist.sample_joint(stream);
        rec.alice_outcome = outcome.alice;
        rec.bob_outcome = outcome.bob;
      }
      records[k] = rec;
    }
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(n_workers, static_cast<unsigned>(n)));
  if (workers == 1) {
    simulate_range(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = static_cast<std::uint64_t>(w) * chunk;
      const std::uint64_t hi = std::min(n, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back(simulate_range, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  // Deterministic fold in pair-index order.
  SessionReport report;
  report.config = config;

  RngStream lottery(config.seed, n + 1);
  std::uint64_t eve_known_key_bits = 0;
  for (const PairRecord& rec : records) {
    if (rec.lost) {
      ++report.loss_count;
      continue;
    }
    const bool alice_circular =
        rec.alice_basis.kind() == Apparatus::Kind::CircularAnalyzer;
    const bool bob_circular =
        rec.bob_basis.kind() == Apparatus::Kind::CircularAnalyzer;

    if (!alice_circular && !bob_circular) {
      ++report.count_vv;
      ++report.linear_test.tested;
      if (port_of(*rec.alice_outcome) != port_of(*rec.bob_outcome)) {
        ++report.linear_test.mismatches;
      }
    } else if (!alice_circular && bob_circular) {
      ++report.count_vu;
    } else if (alice_circular && !bob_circular) {
      ++report.count_uv;
    } else {
      ++report.count_uu;
      if (lottery.next_double() < config.sacrifice_fraction) {
        ++report.circular_test.tested;
        if (handedness_of(*rec.alice_outcome) ==
            handedness_of(*rec.bob_outcome)) {
          ++report.circular_test.mismatches;
        }
      } else {
        report.sifted_key_alice.push_back(alice_key_bit(*rec.alice_outcome));
        report.sifted_key_bob.push_back(bob_key_bit(*rec.bob_outcome));
        if (rec.eve_bits.has_value()) ++eve_known_key_bits;
      }
    }
  }

  if (report.linear_test.tested > 0) {
    report.linear_test.qber =
        static_cast<double>(report.linear_test.mismatches) /
        static_cast<double>(report.linear_test.tested);
  }
  if (report.circular_test.tested > 0) {
    report.circular_test.qber =
        static_cast<double>(report.circular_test.mismatches) /
        static_cast<double>(report.circular_test.tested);
  }

  const std::size_t key_len = report.sifted_key_alice.size();
  if (key_len > 0) {
    std::size_t agree = 0;
    for (std::size_t i = 0; i < key_len; ++i) {
      if (report.sifted_key_alice[i] == report.sifted_key_bob[i]) ++agree;
    }
    report.key_agreement_rate =
        static_cast<double>(agree) / static_cast<double>(key_len);
  }

  if (config.attack.eve_measures()) {
    report.eve_knowledge_rate =
        key_len > 0 ? static_cast<double>(eve_known_key_bits) /
                          static_cast<double>(key_len)
                    : 0.0;
  }

  if (!report.linear_test.qber.has_value() ||
      !report.circular_test.qber.has_value()) {
    report.verdict = Verdict::Aborted;
  } else if (*report.linear_test.qber > config.abort_qber_threshold ||
             *report.circular_test.qber > config.abort_qber_threshold) {
    report.verdict = Verdict::EavesdropperDetected;
  } else {
    report.verdict = Verdict::Clean;
  }
  return report;
}

std::vector<std::pair<std::uint64_t, double>> detection_curve(
    const AttackModel& model, std::uint64_t test_pairs_max) {
  const double p = std::max(detection_probability(model, EavesdropTest::Linear),
                            detection_probability(model, EavesdropTest::Circular));
  std::vector<std::pair<std::uint64_t, double>> curve;
  curve.reserve(test_pairs_max);
  for (std::uint64_t k = 1; k <= test_pairs_max; ++k) {
    curve.emplace_back(k, 1.0 - std::pow(1.0 - p, static_cast<double>(k)));
  }
  return curve;
}

std::vector<BasisMapping> bbm92_mapping() {
  return {{"circular", "sigma_z"}, {"linear", "sigma_x"}};
}

}  // namespace mziqkd
