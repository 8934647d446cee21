// Copyright 2026 The spinsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Release gate: prints one PASS/FAIL line per acceptance criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "spinsim/experiments.h"
#include "spinsim/oracle.h"
#include "spinsim/propagator.h"
#include "spinsim/pulse_lib.h"

namespace {

using namespace spinsim;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  int failures = 0;
  double worst_norm = 0.0;  // criterion 6 collects from every run

  void report(int id, bool ok, const std::string& what) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  void note_norm(double norm) { worst_norm = std::max(worst_norm, std::abs(norm - 1.0)); }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

void ideal_grover(Gate& gate) {
  const auto start = Clock::now();
  double worst = 0.0;
  for (InitOrder order : {InitOrder::kW1First, InitOrder::kW2First}) {
    for (int item = 0; item < 4; ++item) {
      GroverReport r = run_grover(HardwareKind::kIdeal, item, order);
      worst = std::max(worst, r.max_deviation);
      gate.note_norm(r.norm);
    }
  }
  const double elapsed = seconds_since(start);
  gate.report(1, worst < 1e-9 && elapsed < 1.0,
              fmt("ideal Grover, max |Q - table| = %.2e, %.3f s", worst, elapsed));
}

struct NmrRow {
  std::array<double, 2> q{};
  std::array<double, 2> ref{};
  bool converged = false;
  bool within = false;
  bool flagged = false;
};

// Converged values plus the timing of the auto-m runs for one init order.
std::array<NmrRow, 4> nmr_grover(Gate& gate, InitOrder order, double& auto_seconds,
                                 double& auto_shift) {
  std::array<NmrRow, 4> rows;
  RunOptions quiet;
  quiet.sample_every = std::int64_t{1} << 40;
  const auto start = Clock::now();
  std::array<std::array<double, 2>, 4> auto_q{};
  for (int item = 0; item < 4; ++item) {
    GroverReport r = run_grover(HardwareKind::kNmr, item, order, quiet);
    auto_q[item] = r.q;
    gate.note_norm(r.norm);
  }
  auto_seconds = seconds_since(start);

  auto_shift = 0.0;
  for (int item = 0; item < 4; ++item) {
    ConvergeReport c = converge_grover(HardwareKind::kNmr, item, order, 1e-6);
    NmrRow& row = rows[item];
    row.converged = c.converged;
    row.q = c.q;
    row.ref = *reference_q(HardwareKind::kNmr, item, order);
    double dev = 0.0;
    for (int j = 0; j < 2; ++j) dev = std::max(dev, std::abs(row.q[j] - row.ref[j]));
    row.within = dev <= kReferenceTolerance;

    // The report produced at the converged resolution must carry the flag
    // exactly when the table is missed.
    RunOptions at = quiet;
    at.substep_multiplier = 2 * c.multiplier;
    GroverReport final_report = run_grover(HardwareKind::kNmr, item, order, at);
    gate.note_norm(final_report.norm);
    row.flagged = final_report.discrepancy;

    const auto& h = c.history;
    if (h.size() >= 2) {
      for (int j = 0; j < 2; ++j) {
        auto_shift = std::max(auto_shift, std::abs(h[1].second[j] - h[0].second[j]));
      }
    }
    std::printf("  nmr init %s item %d: Q = (%.4f, %.4f) table (%.3f, %.3f) "
                "converged at multiplier %lld%s%s\n",
                init_order_name(order), item, row.q[0], row.q[1], row.ref[0], row.ref[1],
                static_cast<long long>(c.multiplier), row.converged ? "" : " [NOT CONVERGED]",
                row.flagged ? " [DISCREPANCY]" : "");
  }
  return rows;
}

bool rows_ok(const std::array<NmrRow, 4>& rows, std::string& detail) {
  bool ok = true;
  int within = 0;
  for (const auto& r : rows) {
    ok = ok && r.converged && r.within && (r.flagged == !r.within);
    within += r.within ? 1 : 0;
  }
  detail = std::to_string(within) + "/4 items within +-0.03 after convergence";
  return ok;
}

void second_order(Gate& gate) {
  const ElementaryOperation eo = make_profile(HardwareKind::kNmr).eo("X1");
  const GateMatrix reference = dense_propagator(eo.model, 0.0, eo.tau, 1024);
  std::vector<double> err;
  for (std::int64_t m = 2560; m <= 20480; m *= 2) {
    err.push_back(max_abs_diff(integrator_unitary(eo, 0.0, {m, eo.tau}), reference));
  }
  bool ok = err.size() >= 4;
  std::string detail = "NMR X1 error ratios per halving:";
  for (std::size_t i = 1; i < err.size(); ++i) {
    const double ratio = err[i - 1] / err[i];
    ok = ok && ratio >= 3.3 && ratio <= 4.7;
    detail += fmt(" %.3f", ratio);
  }
  detail += fmt(" (error %.2e at finest step)", err.back());
  gate.report(4, ok, detail);
}

double conjugation_worst(int trials) {
  std::mt19937_64 rng(7340033);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 1.0;
  for (int trial = 0; trial < trials; ++trial) {
    SpinModel model(2);
    for (Axis a : kAllAxes) {
      model.set_coupling(1, 2, a, u(rng));
      for (int j = 1; j <= 2; ++j) {
        model.set_static_field(j, a, u(rng));
        model.set_rf_amplitude(j, a, u(rng));
        model.set_rf_frequency(j, a, 3.0 * std::abs(u(rng)));
        model.set_rf_phase(j, a, 3.0 * u(rng));
      }
    }
    const double delta = 2.0 * std::abs(u(rng));
    const double t_mid = 20.0 * std::abs(u(rng));
    for (Axis axis : {Axis::kY, Axis::kX}) {
      const Axis conj = axis == Axis::kY ? Axis::kX : Axis::kY;
      Eigen::MatrixXcd kernel(4, 4);
      for (int c = 0; c < 4; ++c) {
        StateVector psi = StateVector::basis(2, static_cast<std::uint64_t>(c));
        global_half_pi_rotation(psi, conj, true);
        apply_diagonal_factor(psi, model, axis, delta, t_mid, false);
        global_half_pi_rotation(psi, conj, false);
        for (int r = 0; r < 4; ++r) kernel(r, c) = psi[r];
      }
      GateMatrix exact(spectral_exponential(axis_hamiltonian_matrix(model, axis, t_mid), delta));
      worst = std::min(worst, column_fidelity(GateMatrix(kernel), exact));
    }
  }
  return worst;
}

void oracle_identities(Gate& gate) {
  bool iterates = true;
  for (int item = 0; item < 4; ++item) {
    GroverIterateReport r = grover_iterate_check(item, 10);
    iterates = iterates && r.pure_iterations == std::vector<int>{1, 4, 7, 10};
    for (int idx : r.pure_index) iterates = iterates && idx == item;
  }
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  double shortening = 1.0;
  for (int item = 0; item < 4; ++item) {
    GateMatrix a = matrix_of_sequence(expand_product(ideal, shortened_grover_product(item)));
    GateMatrix b = matrix_of_sequence(expand_product(ideal, full_grover_product(item)));
    shortening = std::min({shortening, column_fidelity(a, b), std::abs(relative_phase(a, b))});
  }
  const double conj = conjugation_worst(100);
  const bool ok = iterates && shortening >= 1.0 - 1e-12 && conj >= 1.0 - 1e-12;
  gate.report(5, ok,
              std::string("pure iterates 1,4,7,10 ") + (iterates ? "yes" : "no") +
                  fmt(", shortening fidelity %.15f, conjugation worst %.15f", shortening, conj));
}

void scale_smoke(Gate& gate) {
  constexpr int kL = 20;
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SpinModel model(kL);
  for (Axis a : kAllAxes) {
    for (int j = 1; j <= kL; ++j) {
      for (int k = j + 1; k <= kL; ++k) model.set_coupling(j, k, a, u(rng));
      model.set_static_field(j, a, u(rng));
      model.set_rf_amplitude(j, a, u(rng));
      model.set_rf_frequency(j, a, std::abs(u(rng)));
    }
  }
  StateVector state = StateVector::uniform(kL);
  KernelCounters counters;
  const auto start = Clock::now();
  symmetrized_step(state, model, 0.05, 0.0, &counters);
  const double elapsed = seconds_since(start);
  const double drift = std::abs(state.norm() - 1.0);
  gate.report(7, elapsed < 60.0 && drift < 1e-10,
              fmt("L=20, %.0f pair terms, one step %.2f s, |norm - 1| = %.1e",
                  static_cast<double>(counters.pair_terms), elapsed, drift));
}

}  // namespace

int main() {
  Gate gate;
  ideal_grover(gate);

  double t12 = 0.0, t21 = 0.0, shift12 = 0.0, shift21 = 0.0;
  auto rows12 = nmr_grover(gate, InitOrder::kW1First, t12, shift12);
  std::string d12;
  const bool ok12 = rows_ok(rows12, d12);
  gate.report(2, ok12 && t12 < 30.0,
              "NMR init 12: " + d12 + fmt(", auto-m runtime %.2f s", t12));

  auto rows21 = nmr_grover(gate, InitOrder::kW2First, t21, shift21);
  std::string d21;
  const bool ok21 = rows_ok(rows21, d21);
  bool unstable = true;
  for (int item : {0, 1}) {
    double diff = 0.0;
    for (int j = 0; j < 2; ++j) diff = std::max(diff, std::abs(rows21[item].q[j] - rows12[item].q[j]));
    unstable = unstable && diff > 0.5;
  }
  gate.report(3, ok21 && unstable && t21 < 30.0,
              "NMR init 21: " + d21 + (unstable ? ", items 0 and 1 flip vs init 12" :
                                                  ", items 0 and 1 do NOT flip") +
                  fmt(", auto-m runtime %.2f s", t21));
  std::printf("  note: largest Q shift when doubling the automatic step count: %.2e\n",
              std::max(shift12, shift21));

  second_order(gate);
  oracle_identities(gate);
  gate.report(6, gate.worst_norm < 1e-9, fmt("worst |norm - 1| over all runs %.2e", gate.worst_norm));
  scale_smoke(gate);

  std::printf("%s: %d criteria failed\n", gate.failures == 0 ? "ALL PASS" : "FAILED",
              gate.failures);
  return gate.failures == 0 ? 0 : 1;
}
