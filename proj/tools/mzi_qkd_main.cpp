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

// Command-line front end: `verify` replays the algebraic identity suite,
// `run` simulates a protocol session, `bell` evaluates the CHSH
// combination, `coincidence-scan` tabulates the coincidence law.
//
// Exit codes: 0 success/clean, 1 failed verification, 2 eavesdropper
// detected, 3 session aborted, 64 usage error.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mziqkd/adversary.hpp"
#include "mziqkd/measurement.hpp"
#include "mziqkd/protocol.hpp"
#include "mziqkd/report_io.hpp"
#include "mziqkd/rng.hpp"
#include "mziqkd/verify.hpp"

namespace {

using namespace mziqkd;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDetected = 2;
constexpr int kExitAborted = 3;
constexpr int kExitUsage = 64;

struct RunOptions {
  std::uint64_t pairs = 100000;
  std::string attack = "none";
  double resend_axis = 0.0;
  std::string block_side = "alice";
  std::string block_path = "upper";
  std::uint64_t seed = 0;
  double sacrifice = 0.25;
  double threshold = 0.05;
  std::string source = "psi+";
  std::string format = "human";
  unsigned workers = 1;
};

struct BellOptions {
  std::string mode = "exact";
  std::uint64_t pairs = 100000;
  std::vector<double> angles = {0.0, std::numbers::pi / 2,
                                std::numbers::pi / 4,
                                3 * std::numbers::pi / 4};
  std::uint64_t seed = 0;
  std::string format = "human";
};

struct ScanOptions {
  std::string alpha_grid = "0:6.283185307179586:25";
  double beta = 0.0;
  std::string format = "csv";
};

AttackModel parse_attack(const RunOptions& opt) {
  if (opt.attack == "none") return AttackModel::none();
  if (opt.attack == "intercept") return AttackModel::intercept_resend_circular();
  if (opt.attack == "nasty") {
    return AttackModel::nasty_send_linear(Phase(opt.resend_axis));
  }
  const BlockSide side =
      opt.block_side == "alice" ? BlockSide::Alice : BlockSide::Bob;
  const BlockPath path =
      opt.block_path == "upper" ? BlockPath::Upper : BlockPath::Lower;
  return AttackModel::path_block(side, path);
}

int cmd_verify(const std::string& fault_spec) {
  std::optional<FaultInjection> fault;
  if (!fault_spec.empty()) {
    FaultInjection f;
    char eq[16] = {0};
    if (std::sscanf(fault_spec.c_str(), "%15[^:]:%d:%d:%lf", eq, &f.row,
                    &f.col, &f.delta) != 4 ||
        f.row < 0 || f.row > 3 || f.col < 0 || f.col > 3) {
      std::cerr << "invalid fault spec, expected EQ:row:col:delta\n";
      return kExitUsage;
    }
    f.equation = eq;
    fault = f;
  }
  const auto results = run_identity_suite(fault);
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) {
      ++passed;
      std::printf("PASS  %-52s (max err %.3g)\n", r.name.c_str(), r.max_error);
    } else {
      std::printf("FAIL  %-52s (max err %.3g)%s%s\n", r.name.c_str(),
                  r.max_error, r.detail.empty() ? "" : ": ",
                  r.detail.c_str());
    }
  }
  std::printf("verify: %zu/%zu identity checks passed\n", passed,
              results.size());
  return passed == results.size() ? 0 : kExitVerifyFailed;
}

int cmd_run(const RunOptions& opt) {
  SessionConfig config;
  config.n_pairs = opt.pairs;
  config.attack = parse_attack(opt);
  config.seed = opt.seed;
  config.sacrifice_fraction = opt.sacrifice;
  config.abort_qber_threshold = opt.threshold;
  config.source =
      opt.source == "psi+" ? SourceKind::PsiPlus : SourceKind::PsiMinus;

  const SessionReport report = run_session(config, opt.workers);
  if (opt.format == "json") {
    std::cout << to_json(report);
  } else if (opt.format == "csv") {
    std::cout << to_csv(report);
  } else {
    std::cout << to_human(report);
  }
  switch (report.verdict) {
    case Verdict::Clean: return 0;
    case Verdict::EavesdropperDetected: return kExitDetected;
    case Verdict::Aborted: return kExitAborted;
  }
  return kExitAborted;
}

double sampled_correlation(Phase alpha, Phase beta, std::uint64_t pairs,
                           RngStream& rng) {
  const auto dist = pair_distribution(psi_plus(),
                                      Apparatus::interferometer(alpha),
                                      Apparatus::interferometer(beta));
  std::int64_t same = 0;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const JointOutcome o = dist.sample_joint(rng);
    same += port_of(o.alice) == port_of(o.bob) ? 1 : -1;
  }
  return static_cast<double>(same) / static_cast<double>(pairs);
}

int cmd_bell(const BellOptions& opt) {
  const Phase a(opt.angles[0]), a_prime(opt.angles[1]);
  const Phase b(opt.angles[2]), b_prime(opt.angles[3]);
  const Phase pair_phases[4][2] = {
      {a, b}, {a, b_prime}, {a_prime, b}, {a_prime, b_prime}};
  double e[4];
  if (opt.mode == "exact") {
    for (int i = 0; i < 4; ++i) {
      e[i] = correlation(pair_phases[i][0], pair_phases[i][1]);
    }
  } else {
    for (int i = 0; i < 4; ++i) {
      RngStream rng(opt.seed, static_cast<std::uint64_t>(i));
      e[i] = sampled_correlation(pair_phases[i][0], pair_phases[i][1],
                                 opt.pairs, rng);
    }
  }
  const double s = std::abs(e[0] - e[1] + e[2] + e[3]);

  if (opt.format == "json") {
    std::cout << "{\n  \"mode\": \"" << opt.mode << "\",\n";
    if (opt.mode == "sample") {
      std::cout << "  \"pairs\": " << opt.pairs << ",\n  \"seed\": "
                << opt.seed << ",\n";
    }
    std::cout << "  \"angles\": {\"a\": " << format_real(a.radians())
              << ", \"a_prime\": " << format_real(a_prime.radians())
              << ", \"b\": " << format_real(b.radians())
              << ", \"b_prime\": " << format_real(b_prime.radians()) << "},\n";
    std::cout << "  \"correlations\": {\"E_ab\": " << format_real(e[0])
              << ", \"E_ab_prime\": " << format_real(e[1])
              << ", \"E_a_prime_b\": " << format_real(e[2])
              << ", \"E_a_prime_b_prime\": " << format_real(e[3]) << "},\n";
    std::cout << "  \"S\": " << format_real(s) << "\n}\n";
  } else if (opt.format == "csv") {
    std::cout << "quantity,alpha,beta,value\n";
    const char* names[4] = {"E_ab", "E_ab_prime", "E_a_prime_b",
                            "E_a_prime_b_prime"};
    for (int i = 0; i < 4; ++i) {
      std::cout << names[i] << ',' << format_real(pair_phases[i][0].radians())
                << ',' << format_real(pair_phases[i][1].radians()) << ','
                << format_real(e[i]) << '\n';
    }
    std::cout << "S,,," << format_real(s) << '\n';
  } else {
    std::cout << "CHSH correlations (" << opt.mode << " mode";
    if (opt.mode == "sample") {
      std::cout << ", " << opt.pairs << " pairs per setting, seed "
                << opt.seed;
    }
    std::cout << ")\n";
    for (int i = 0; i < 4; ++i) {
      const double pa = pair_phases[i][0].radians();
      const double pb = pair_phases[i][1].radians();
      // A phase of alpha analyzes the polarization plane at alpha/2.
      std::cout << "  E(alpha=" << format_real(pa) << " [plane "
                << format_real(pa / 2) << "], beta=" << format_real(pb)
                << " [plane " << format_real(pb / 2)
                << "]) = " << format_real(e[i]) << "\n";
    }
    std::cout << "  S = " << format_real(s) << "\n";
  }
  return 0;
}

bool parse_grid(const std::string& spec, double* start, double* stop,
                int* steps) {
  std::istringstream in(spec);
  char c1 = 0, c2 = 0;
  if (!(in >> *start >> c1 >> *stop >> c2 >> *steps)) return false;
  if (c1 != ':' || c2 != ':' || *steps < 1) return false;
  std::string rest;
  return !(in >> rest);
}

int cmd_scan(const ScanOptions& opt) {
  double start = 0.0, stop = 0.0;
  int steps = 0;
  if (!parse_grid(opt.alpha_grid, &start, &stop, &steps)) {
    std::cerr << "invalid --alpha-grid, expected start:stop:steps\n";
    return kExitUsage;
  }
  const Phase beta(opt.beta);
  using PP = PortPolarization;
  const JointOutcome outcomes[4] = {
      {PP::Port1Right, PP::Port1Right},
      {PP::Port2Right, PP::Port2Right},
      {PP::Port1Right, PP::Port2Right},
      {PP::Port2Right, PP::Port1Right},
  };

  if (opt.format == "csv") {
    std::cout << "alpha,beta,P_1p1p,P_2p2p,P_1p2p,P_2p1p,analytic,abs_error\n";
  } else if (opt.format == "human") {
    std::cout << "coincidence scan, beta = " << format_real(beta.radians())
              << "\n";
  } else {
    std::cout << "[\n";
  }
  const PairState psi = psi_plus();
  const Apparatus bob = Apparatus::interferometer(beta);
  for (int i = 0; i < steps; ++i) {
    const double raw =
        steps == 1 ? start : start + (stop - start) * i / (steps - 1);
    const Phase alpha(raw);
    const auto dist =
        pair_distribution(psi, Apparatus::interferometer(alpha), bob);
    double p[4], abs_error = 0.0;
    for (int o = 0; o < 4; ++o) {
      p[o] = dist.prob(outcomes[o].alice, outcomes[o].bob);
      abs_error = std::max(
          abs_error,
          std::abs(p[o] - coincidence_probability(alpha, beta, outcomes[o])));
    }
    const double analytic =
        coincidence_probability(alpha, beta, outcomes[0]);
    if (opt.format == "human") {
      std::cout << "  alpha=" << format_real(alpha.radians())
                << "  P(1+,1+)=" << format_real(p[0])
                << "  P(2+,2+)=" << format_real(p[1])
                << "  P(1+,2+)=" << format_real(p[2])
                << "  P(2+,1+)=" << format_real(p[3])
                << "  analytic=" << format_real(analytic)
                << "  err=" << format_real(abs_error) << "\n";
    } else if (opt.format == "json") {
      std::cout << "  {\"alpha\": " << format_real(alpha.radians())
                << ", \"beta\": " << format_real(beta.radians())
                << ", \"P_1p1p\": " << format_real(p[0])
                << ", \"P_2p2p\": " << format_real(p[1])
                << ", \"P_1p2p\": " << format_real(p[2])
                << ", \"P_2p1p\": " << format_real(p[3])
                << ", \"analytic\": " << format_real(analytic)
                << ", \"abs_error\": " << format_real(abs_error) << "}"
                << (i + 1 < steps ? "," : "") << "\n";
    } else {
      std::cout << format_real(alpha.radians()) << ','
                << format_real(beta.radians()) << ',' << format_real(p[0])
                << ',' << format_real(p[1]) << ',' << format_real(p[2]) << ','
                << format_real(p[3]) << ',' << format_real(analytic) << ','
                << format_real(abs_error) << '\n';
    }
  }
  if (opt.format == "json") std::cout << "]\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polarizing Mach-Zehnder interferometer QKD simulator"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify", "Run the algebraic identity suite and report per-identity "
                "pass/fail");
  std::string fault_spec;
  verify->add_option("--inject-fault", fault_spec,
                     "Test hook: perturb one stored matrix entry, "
                     "EQ:row:col:delta (e.g. Eq13:0:0:1e-6)")
      ->group("");

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Simulate one protocol session");
  run->add_option("--pairs", run_opt.pairs, "Number of emitted pairs")
      ->default_val(run_opt.pairs)
      ->check(CLI::PositiveNumber);
  run->add_option("--attack", run_opt.attack, "Eavesdropping channel")
      ->default_val(run_opt.attack)
      ->check(CLI::IsMember({"none", "intercept", "nasty", "block"}));
  run->add_option("--resend-axis", run_opt.resend_axis,
                  "nasty: polarization plane angle Eve resends, radians "
                  "(the analyzing interferometer phase is twice this)")
      ->default_val(run_opt.resend_axis);
  run->add_option("--block-side", run_opt.block_side,
                  "block: whose interferometer holds the obstacle")
      ->default_val(run_opt.block_side)
      ->check(CLI::IsMember({"alice", "bob"}));
  run->add_option("--block-path", run_opt.block_path,
                  "block: which arm is obstructed")
      ->default_val(run_opt.block_path)
      ->check(CLI::IsMember({"upper", "lower"}));
  run->add_option("--seed", run_opt.seed, "RNG seed")
      ->default_val(run_opt.seed)
      ->envname("MZI_QKD_SEED");
  run->add_option("--sacrifice", run_opt.sacrifice,
                  "Fraction of both-circular rounds spent on the circular "
                  "test")
      ->default_val(run_opt.sacrifice)
      ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)));
  run->add_option("--threshold", run_opt.threshold,
                  "QBER above which the session aborts")
      ->default_val(run_opt.threshold)
      ->check(CLI::Range(0.0, std::nextafter(1.0, 0.0)));
  run->add_option("--source", run_opt.source, "Entangled source state")
      ->default_val(run_opt.source)
      ->check(CLI::IsMember({"psi+", "psi-"}));
  run->add_option("--format", run_opt.format, "Report format")
      ->default_val(run_opt.format)
      ->check(CLI::IsMember({"json", "csv", "human"}));
  run->add_option("--workers", run_opt.workers,
                  "Worker threads (the report is identical for any count)")
      ->default_val(run_opt.workers)
      ->check(CLI::Range(1u, 256u));

  BellOptions bell_opt;
  auto* bell = app.add_subcommand(
      "bell", "Evaluate the CHSH combination at four phase pairs");
  bell->add_option("--mode", bell_opt.mode, "exact or sample")
      ->default_val(bell_opt.mode)
      ->check(CLI::IsMember({"exact", "sample"}));
  bell->add_option("--pairs", bell_opt.pairs,
                   "sample: pairs per phase setting")
      ->default_val(bell_opt.pairs)
      ->check(CLI::PositiveNumber);
  bell->add_option("--angles", bell_opt.angles,
                   "a,a',b,b' interferometer phases in radians")
      ->delimiter(',')
      ->expected(4);
  bell->add_option("--seed", bell_opt.seed, "RNG seed (sample mode)")
      ->default_val(bell_opt.seed)
      ->envname("MZI_QKD_SEED");
  bell->add_option("--format", bell_opt.format, "Output format")
      ->default_val(bell_opt.format)
      ->check(CLI::IsMember({"json", "csv", "human"}));

  ScanOptions scan_opt;
  auto* scan = app.add_subcommand(
      "coincidence-scan",
      "Tabulate joint exit probabilities against the analytic law");
  scan->add_option("--alpha-grid", scan_opt.alpha_grid,
                   "Alice phases as start:stop:steps, radians")
      ->default_val(scan_opt.alpha_grid);
  scan->add_option("--beta", scan_opt.beta, "Bob's fixed phase, radians")
      ->default_val(scan_opt.beta);
  scan->add_option("--format", scan_opt.format, "Output format")
      ->default_val(scan_opt.format)
      ->check(CLI::IsMember({"json", "csv", "human"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(fault_spec);
    if (app.got_subcommand(run)) return cmd_run(run_opt);
    if (app.got_subcommand(bell)) return cmd_bell(bell_opt);
    if (app.got_subcommand(scan)) return cmd_scan(scan_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
  return kExitUsage;
}
