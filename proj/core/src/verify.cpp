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

#include "mziqkd/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "mziqkd/hilbert.hpp"
#include "mziqkd/measurement.hpp"
#include "mziqkd/optics.hpp"
#include "mziqkd/protocol.hpp"
#include "mziqkd/rng.hpp"
#include "mziqkd/source.hpp"

namespace mziqkd {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Second, deliberately separate transcriptions of the component matrices.
// The suite compares the library's matrices against these so that a typo
// in either copy shows up as a named failure.

CMat reference_pbs() {
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = kImag;
  m(1, 2) = 1.0;
  m(2, 3) = 1.0;
  m(3, 1) = 1.0;
  return m;
}

CMat reference_hwp() {
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

CMat reference_phase(Phase alpha) {
  CMat m = CMat::Zero(4, 4);
  const Complex e{std::cos(alpha.radians()), std::sin(alpha.radians())};
  m(0, 0) = e;
  m(1, 1) = e;
  m(2, 2) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

CMat reference_mirror() {
  const double s = 1.0 / std::sqrt(2.0);
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = Complex(0.0, s);
  m(0, 2) = s;
  m(1, 1) = Complex(0.0, s);
  m(1, 3) = s;
  m(2, 0) = s;
  m(2, 2) = Complex(0.0, s);
  m(3, 1) = s;
  m(3, 3) = Complex(0.0, s);
  return m;
}

CMat reference_two_port() {
  const double s = 1.0 / std::sqrt(2.0);
  CMat m(2, 2);
  m << Complex(0.0, s), Complex(s, 0.0), Complex(s, 0.0), Complex(0.0, s);
  return m;
}

// The suite's (possibly fault-injected) view of the stored matrices.
struct MatrixView {
  CMat two_port;
  CMat pbs;
  CMat hwp;
  std::function<CMat(Phase)> phase;
  CMat mirror;
  std::function<CMat(Phase)> closed;
};

MatrixView make_view(const std::optional<FaultInjection>& fault) {
  MatrixView v;
  v.two_port = ev_interferometer();
  v.pbs = polarizing_beam_splitter();
  v.hwp = half_wave_plate();
  v.mirror = symmetric_mirror();
  auto hit = [&fault](const char* tag) {
    return fault.has_value() && fault->target == tag;
  };
  if (hit("pbs")) v.pbs(fault->row, fault->col) += fault->delta;
  if (hit("hwp")) v.hwp(fault->row, fault->col) += fault->delta;
  if (hit("mirror")) v.mirror(fault->row, fault->col) += fault->delta;
  const bool fault_phase = hit("phase");
  const bool fault_closed = hit("vclosed");
  const FaultInjection f = fault.value_or(FaultInjection{});
  v.phase = [fault_phase, f](Phase a) {
    CMat m = phase_shifter(a);
    if (fault_phase) m(f.row, f.col) += f.delta;
    return m;
  };
  v.closed = [fault_closed, f](Phase a) {
    CMat m = interferometer_closed_form(a);
    if (fault_closed) m(f.row, f.col) += f.delta;
    return m;
  };
  return v;
}

std::vector<Phase> phase_grid(std::size_t count, std::uint64_t stream) {
  std::vector<Phase> grid;
  grid.reserve(count);
  RngStream rng(0x1D5EED, stream);
  for (std::size_t i = 0; i < count; ++i) {
    grid.emplace_back(rng.next_double() * kTwoPi);
  }
  return grid;
}

class Suite {
 public:
  explicit Suite(MatrixView view) : v_(std::move(view)) {}

  std::vector<CheckResult> run() {
    check_two_port_transcription();
    check_two_port_output();
    check_two_port_double_pass();
    check_analyzer_action();
    check_linear_routing();
    check_pbs();
    check_hwp();
    check_phase();
    check_mirror();
    check_composition();
    check_adjoint_formulas();
    check_linear_basis();
    check_pair_amplitudes();
    check_linear_form_invariance();
    check_xy_form();
    check_coincidence_grid();
    check_mapping();
    return std::move(results_);
  }

 private:
  void record(const std::string& name, std::function<double()> max_error_fn) {
    CheckResult r;
    r.name = name;
    try {
      r.max_error = max_error_fn();
      r.passed = r.max_error <= kAlgebraTol;
      if (!r.passed) r.detail = "max deviation above tolerance";
    } catch (const std::exception& e) {
      r.passed = false;
      r.max_error = std::numeric_limits<double>::infinity();
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  void check_two_port_transcription() {
    record("two-port splitter transcription and unitarity", [this] {
      return std::max(max_abs_diff(v_.two_port, reference_two_port()),
                      unitarity_defect(v_.two_port));
    });
  }

  void check_two_port_output() {
    record("two-port splitter single-pass output", [this] {
      const double s = 1.0 / std::sqrt(2.0);
      CVec expected(2);
      expected << Complex(0.0, s), Complex(s, 0.0);
      return max_abs_diff(CVec(v_.two_port * basis_vector(2, 0)), expected);
    });
  }

  void check_two_port_double_pass() {
    record("two-port splitter double pass equals i*sigma_x", [this] {
      CMat i_sigma_x = CMat::Zero(2, 2);
      i_sigma_x(0, 1) = kImag;
      i_sigma_x(1, 0) = kImag;
      const CMat twice = v_.two_port * v_.two_port;
      CVec expected(2);
      expected << Complex(0.0, 0.0), kImag;
      return std::max(max_abs_diff(twice, i_sigma_x),
                      max_abs_diff(CVec(twice * basis_vector(2, 0)), expected));
    });
  }

  void check_analyzer_action() {
    record("circular analyzer action on port 1", [this] {
      RngStream rng(0x1D5EED, 99);
      double err = 0.0;
      for (int trial = 0; trial < 8; ++trial) {
        Complex a(rng.next_double() - 0.5, rng.next_double() - 0.5);
        Complex b(rng.next_double() - 0.5, rng.next_double() - 0.5);
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        a /= n;
        b /= n;
        CVec in = CVec::Zero(4), expected = CVec::Zero(4);
        in(0) = a;
        in(1) = b;
        expected(0) = kImag * a;
        expected(3) = b;
        err = std::max(err, max_abs_diff(CVec(v_.pbs * in), expected));
      }
      return err;
    });
  }

  void check_linear_routing() {
    record("x and y inputs map to dedicated exits", [this] {
      const double s = 1.0 / std::sqrt(2.0);
      CVec x_pol(4), y_pol(4);
      x_pol << Complex(s, 0), Complex(s, 0), Complex(0, 0), Complex(0, 0);
      y_pol << Complex(-s, 0), Complex(s, 0), Complex(0, 0), Complex(0, 0);
      const CMat v0 = v_.closed(Phase());
      const double ex =
          max_abs_diff(CVec(v0 * x_pol), CVec(kImag * basis_vector(4, 2)));
      const double ey = max_abs_diff(CVec(v0 * y_pol), basis_vector(4, 0));
      return std::max(ex, ey);
    });
  }

  void check_pbs() {
    record("pbs transcription (circular-polarizing splitter)", [this] {
      return std::max(max_abs_diff(v_.pbs, reference_pbs()),
                      unitarity_defect(v_.pbs));
    });
  }

  void check_hwp() {
    record("hwp transcription (half-wave plate)", [this] {
      return std::max(max_abs_diff(v_.hwp, reference_hwp()),
                      max_abs_diff(CMat(v_.hwp * v_.hwp), identity(4)));
    });
  }

  void check_phase() {
    record("phase transcription and additivity (phase shifter)", [this] {
      double err = 0.0;
      const auto grid = phase_grid(20, 1);
      for (const Phase& a : grid) {
        err = std::max(err, max_abs_diff(v_.phase(a), reference_phase(a)));
      }
      for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const Phase a = grid[i], b = grid[i + 1];
        err = std::max(err, max_abs_diff(CMat(v_.phase(a) * v_.phase(b)),
                                         v_.phase(a + b)));
      }
      return err;
    });
  }

  void check_mirror() {
    record("mirror transcription (symmetric mirror)", [this] {
      double err = std::max(max_abs_diff(v_.mirror, reference_mirror()),
                            unitarity_defect(v_.mirror));
      // Restricted to either handedness the mirror is the two-port splitter
      // and two passes give i*sigma_x.
      const CMat twice = v_.mirror * v_.mirror;
      const CMat two_port_ref = reference_two_port();
      for (int h = 0; h < 2; ++h) {
        const int rows[2] = {h, h + 2};
        CMat block(2, 2), block_twice(2, 2);
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            block(i, j) = v_.mirror(rows[i], rows[j]);
            block_twice(i, j) = twice(rows[i], rows[j]);
          }
        }
        err = std::max(err, max_abs_diff(block, two_port_ref));
        err = std::max(
            err, max_abs_diff(block_twice, CMat(two_port_ref * two_port_ref)));
      }
      return err;
    });
  }

  void check_composition() {
    record("vclosed composition consistency (interferometer)", [this] {
      double err = 0.0;
      for (const Phase& a : phase_grid(100, 2)) {
        const CMat composed = v_.mirror * v_.phase(a) * v_.hwp * v_.pbs;
        err = std::max(err, max_abs_diff(composed, v_.closed(a)));
      }
      return err;
    });
  }

  // Expected adjoint images of the four exit states as functions of alpha.
  static CVec adjoint_expected(int out_index, double alpha) {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex em{std::cos(alpha), -std::sin(alpha)};  // e^{-i alpha}
    CVec e = CVec::Zero(4);
    switch (out_index) {
      case 0:  // -(1/sqrt2)(e^{-ia}|1+> - |1->)
        e(0) = -s * em;
        e(1) = s;
        break;
      case 1:  // -(i/sqrt2)(e^{-ia}|2+> + i|2->)
        e(2) = -s * kImag * em;
        e(3) = s;
        break;
      case 2:  // -(i/sqrt2)(e^{-ia}|1+> + |1->)
        e(0) = -s * kImag * em;
        e(1) = -s * kImag;
        break;
      case 3:  // (1/sqrt2)(e^{-ia}|2+> - i|2->)
        e(2) = s * em;
        e(3) = -s * kImag;
        break;
    }
    return e;
  }

  void check_adjoint_formulas() {
    static const char* names[4] = {
        "adjoint formula for the 1+ exit",
        "adjoint formula for the 1- exit",
        "adjoint formula for the 2+ exit",
        "adjoint formula for the 2- exit",
    };
    for (int out = 0; out < 4; ++out) {
      record(names[out], [this, out] {
        double err = 0.0;
        for (const Phase& a : phase_grid(20, 3)) {
          const CMat v_dag = dagger(v_.closed(a));
          err = std::max(err,
                         max_abs_diff(CVec(v_dag * basis_vector(4, out)),
                                      adjoint_expected(out, a.radians())));
        }
        return err;
      });
    }
  }

  void check_linear_basis() {
    record("linear basis definition, orthonormality, completeness", [this] {
      double err = 0.0;
      for (const Phase& a : phase_grid(20, 4)) {
        const CMat v = v_.closed(a);
        const CMat v_dag = dagger(v);
        const CVec ket = v_dag * CVec(kImag * basis_vector(4, 2));
        const CVec ket_perp = v_dag * CVec(-basis_vector(4, 0));
        // Round trip back to the single exits.
        err = std::max(err, max_abs_diff(CVec(v * ket),
                                         CVec(kImag * basis_vector(4, 2))));
        err = std::max(err, max_abs_diff(CVec(v * ket_perp),
                                         CVec(-basis_vector(4, 0))));
        // Orthonormal and supported on port 1 only.
        err = std::max(err, std::abs(ket.norm() - 1.0));
        err = std::max(err, std::abs(ket_perp.norm() - 1.0));
        err = std::max(err, std::abs(ket.dot(ket_perp)));
        err = std::max(err, std::abs(ket(2)) + std::abs(ket(3)));
        err = std::max(err, std::abs(ket_perp(2)) + std::abs(ket_perp(3)));
        // Completeness on port 1.
        CMat port1 = CMat::Zero(4, 4);
        port1(0, 0) = 1.0;
        port1(1, 1) = 1.0;
        err = std::max(
            err, max_abs_diff(CMat(projector(ket) + projector(ket_perp)),
                              port1));
      }
      // At zero phase the pair reduces to |1x> and -|1y>.
      const double s = 1.0 / std::sqrt(2.0);
      const CMat v0_dag = dagger(v_.closed(Phase()));
      CVec x_pol(4), minus_y(4);
      x_pol << Complex(s, 0), Complex(s, 0), Complex(0, 0), Complex(0, 0);
      minus_y << Complex(s, 0), Complex(-s, 0), Complex(0, 0), Complex(0, 0);
      err = std::max(err,
                     max_abs_diff(CVec(v0_dag * CVec(kImag * basis_vector(4, 2))),
                                  x_pol));
      err = std::max(
          err,
          max_abs_diff(CVec(v0_dag * CVec(-basis_vector(4, 0))), minus_y));
      return err;
    });
  }

  void check_pair_amplitudes() {
    record("entangled pair amplitudes", [] {
      const double s = 1.0 / std::sqrt(2.0);
      const PairState plus = psi_plus();
      const PairState minus = psi_minus();
      using PP = PortPolarization;
      double err = 0.0;
      err = std::max(err, std::abs(plus.amplitude(PP::Port1Right,
                                                  PP::Port1Left) -
                                   Complex(s, 0)));
      err = std::max(err, std::abs(plus.amplitude(PP::Port1Left,
                                                  PP::Port1Right) -
                                   Complex(s, 0)));
      err = std::max(err, std::abs(minus.amplitude(PP::Port1Right,
                                                   PP::Port1Left) -
                                   Complex(s, 0)));
      err = std::max(err, std::abs(minus.amplitude(PP::Port1Left,
                                                   PP::Port1Right) +
                                   Complex(s, 0)));
      err = std::max(err, std::abs(plus.amplitudes().norm() - 1.0));
      err = std::max(err, std::abs(minus.amplitudes().norm() - 1.0));
      err = std::max(err,
                     std::abs(plus.amplitudes().dot(minus.amplitudes())));
      return err;
    });
  }

  void check_linear_form_invariance() {
    record("linear form phase invariance", [] {
      double err = 0.0;
      const PairState plus = psi_plus();
      const PairState minus = psi_minus();
      for (const Phase& a : phase_grid(50, 5)) {
        err = std::max(err,
                       max_abs_diff(linear_form(plus, a), plus.amplitudes()));
        err = std::max(
            err, max_abs_diff(linear_form(minus, a), minus.amplitudes()));
      }
      return err;
    });
  }

  void check_xy_form() {
    record("pair state x/y product form", [] {
      const double s = 1.0 / std::sqrt(2.0);
      CVec x_pol(4), y_pol(4);
      x_pol << Complex(s, 0), Complex(s, 0), Complex(0, 0), Complex(0, 0);
      y_pol << Complex(-s, 0), Complex(s, 0), Complex(0, 0), Complex(0, 0);
      const CVec linear_built =
          (tensor(x_pol, x_pol) - tensor(y_pol, y_pol)) / std::sqrt(2.0);
      return max_abs_diff(linear_built, psi_plus().amplitudes());
    });
  }

  void check_coincidence_grid() {
    record("coincidence law on a 30x30 phase grid", [this] {
      using PP = PortPolarization;
      const JointOutcome outcomes[4] = {
          {PP::Port1Right, PP::Port1Right},
          {PP::Port2Right, PP::Port2Right},
          {PP::Port1Right, PP::Port2Right},
          {PP::Port2Right, PP::Port1Right},
      };
      CMat joint_projectors[4];
      for (int i = 0; i < 4; ++i) {
        joint_projectors[i] =
            tensor(projector(basis_vector(4, index_of(outcomes[i].alice))),
                   projector(basis_vector(4, index_of(outcomes[i].bob))));
      }
      const CVec psi = psi_plus().amplitudes();
      double err = 0.0;
      for (int i = 0; i < 30; ++i) {
        for (int j = 0; j < 30; ++j) {
          const Phase alpha(kTwoPi * i / 30.0);
          const Phase beta(kTwoPi * j / 30.0);
          const CVec rotated =
              mziqkd::apply(tensor(v_.closed(alpha), v_.closed(beta)), psi);
          for (int o = 0; o < 4; ++o) {
            const double numeric =
                rotated.dot(joint_projectors[o] * rotated).real();
            const double analytic =
                coincidence_probability(alpha, beta, outcomes[o]);
            err = std::max(err, std::abs(numeric - analytic));
          }
        }
      }
      return err;
    });
  }

  void check_mapping() {
    record("two-basis mapping sanity", [] {
      const auto mapping = bbm92_mapping();
      if (mapping.size() != 2 || mapping[0].measurement != "circular" ||
          mapping[0].pauli_analog != "sigma_z" ||
          mapping[1].measurement != "linear" ||
          mapping[1].pauli_analog != "sigma_x") {
        throw std::logic_error("mapping table rows are wrong");
      }
      // Circular basis states are the z-analog eigenstates: the circular
      // analyzer resolves them deterministically on distinct detectors.
      const Apparatus circ = Apparatus::circular_analyzer();
      double err = 0.0;
      err = std::max(err, std::abs(single_distribution(basis_vector(4, 0), circ)
                                       .prob(PortPolarization::Port1Right) -
                                   1.0));
      err = std::max(err, std::abs(single_distribution(basis_vector(4, 1), circ)
                                       .prob(PortPolarization::Port2Left) -
                                   1.0));
      // The x-analog pair is the linear basis analyzed at zero phase.
      const Apparatus interf = Apparatus::interferometer(Phase());
      const auto [ket, ket_perp] = linear_basis(Phase());
      err = std::max(err, std::abs(single_distribution(ket, interf)
                                       .prob(PortPolarization::Port2Right) -
                                   1.0));
      err = std::max(err, std::abs(single_distribution(ket_perp, interf)
                                       .prob(PortPolarization::Port1Right) -
                                   1.0));
      const double s = 1.0 / std::sqrt(2.0);
      CVec x_pol(4), minus_y(4);
      x_pol << Complex(s, 0), Complex(s, 0), Complex(0, 0), Complex(0, 0);
      minus_y << Complex(s, 0), Complex(-s, 0), Complex(0, 0), Complex(0, 0);
      err = std::max(err, max_abs_diff(ket, x_pol));
      err = std::max(err, max_abs_diff(ket_perp, minus_y));
      return err;
    });
  }

  MatrixView v_;
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_identity_suite(
    const std::optional<FaultInjection>& fault) {
  return Suite(make_view(fault)).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace mziqkd
