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

#include "spinsim/experiments.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "spinsim/oracle.h"

namespace spinsim {
namespace {

// Published final qubit values of the four-item search, [item][qubit].
constexpr double kIdealQ[4][2] = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}};
constexpr double kNmrW1FirstQ[4][2] = {
    {0.028, 0.163}, {0.966, 0.171}, {0.037, 0.836}, {0.955, 0.830}};
constexpr double kNmrW2FirstQ[4][2] = {
    {0.955, 0.031}, {0.041, 0.026}, {0.971, 0.971}, {0.027, 0.972}};

constexpr double kIdealTolerance = 1e-9;

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

CheckResult check_conjugation() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 1.0;
  for (int trial = 0; trial < 100; ++trial) {
    SpinModel model(2);
    for (Axis a : kAllAxes) {
      model.set_coupling(1, 2, a, u(rng));
      for (int j = 1; j <= 2; ++j) {
        model.set_static_field(j, a, u(rng));
        model.set_rf_amplitude(j, a, u(rng));
        model.set_rf_frequency(j, a, 2.0 * std::abs(u(rng)));
        model.set_rf_phase(j, a, 3.0 * u(rng));
      }
    }
    const double delta = 0.5 + std::abs(u(rng));
    const double t_mid = 10.0 * std::abs(u(rng));
    for (Axis axis : {Axis::kY, Axis::kX}) {
      const Axis conj = axis == Axis::kY ? Axis::kX : Axis::kY;
      const bool half = axis == Axis::kY;
      Eigen::MatrixXcd kernel(4, 4);
      for (int c = 0; c < 4; ++c) {
        StateVector psi = StateVector::basis(2, static_cast<std::uint64_t>(c));
        global_half_pi_rotation(psi, conj, true);
        apply_diagonal_factor(psi, model, axis, delta, t_mid, half);
        global_half_pi_rotation(psi, conj, false);
        for (int r = 0; r < 4; ++r) kernel(r, c) = psi[r];
      }
      GateMatrix reference(spectral_exponential(
          axis_hamiltonian_matrix(model, axis, t_mid), half ? delta / 2 : delta));
      worst = std::min(worst, column_fidelity(GateMatrix(kernel), reference));
    }
  }
  return {"conjugation identity (100 random 2-spin models)",
          worst >= 1.0 - 1e-12, "worst column fidelity " + fmt("%.15f", worst)};
}

CheckResult check_second_order() {
  const HardwareProfile nmr = make_profile(HardwareKind::kNmr);
  const ElementaryOperation& eo = nmr.eo("X1");
  const GateMatrix reference = dense_propagator(eo.model, 0.0, eo.tau, 1024);
  std::vector<double> errors;
  for (std::int64_t m = 2560; m <= 20480; m *= 2) {
    errors.push_back(max_abs_diff(integrator_unitary(eo, 0.0, {m, eo.tau}), reference));
  }
  bool ok = true;
  std::string detail = "ratios";
  for (std::size_t i = 1; i < errors.size(); ++i) {
    double ratio = errors[i - 1] / errors[i];
    ok = ok && ratio >= 3.3 && ratio <= 4.7;
    detail += " " + fmt("%.3f", ratio);
  }
  return {"second-order convergence (NMR X1 vs dense oracle)", ok, detail};
}

CheckResult check_shortening() {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  bool ok = true;
  std::string detail;
  for (int item = 0; item < 4; ++item) {
    GateMatrix shortened =
        matrix_of_sequence(expand_product(ideal, shortened_grover_product(item)));
    GateMatrix full = matrix_of_sequence(expand_product(ideal, full_grover_product(item)));
    Complex phase = relative_phase(full, shortened);
    double fid = column_fidelity(full, shortened);
    ok = ok && fid >= 1.0 - 1e-12 && std::abs(std::abs(phase) - 1.0) < 1e-12;
    detail += "U" + std::to_string(item) + " phase " + fmt("%+.3f", phase.real()) +
              fmt("%+.3fi ", phase.imag());
  }
  return {"shortened sequences match W1W2 P W1W2 F_i", ok, detail};
}

CheckResult check_iterates() {
  bool ok = true;
  for (int item = 0; item < 4; ++item) {
    GroverIterateReport r = grover_iterate_check(item, 10);
    ok = ok && r.pure_iterations == std::vector<int>{1, 4, 7, 10};
    for (int idx : r.pure_index) ok = ok && idx == item;
  }
  return {"Grover iterate pure at 1, 4, 7, 10", ok, ""};
}

CheckResult check_ideal_eos() {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  double worst = 0.0;
  for (const auto& [name, eo] : ideal.eo_table) {
    GateMatrix simulated = integrator_unitary(eo, 0.0, auto_substeps(eo));
    worst = std::max(worst, max_abs_diff(simulated, ideal_gate_by_name(name, 2)));
  }
  return {"ideal EOs equal their gates", worst <= 1e-12,
          "max deviation " + fmt("%.3e", worst)};
}

}  // namespace

std::optional<std::array<double, 2>> reference_q(HardwareKind kind, int item,
                                                      InitOrder order) {
  if (item < 0 || item > 3) return std::nullopt;
  const double(*table)[2] = kind == HardwareKind::kIdeal ? kIdealQ
                            : order == InitOrder::kW1First ? kNmrW1FirstQ
                                                           : kNmrW2FirstQ;
  return std::array<double, 2>{table[item][0], table[item][1]};
}

void write_csv_header(std::ostream& out, int num_qubits) {
  out << "step,t,norm";
  for (int j = 1; j <= num_qubits; ++j) {
    out << ",sx" << j << ",sy" << j << ",sz" << j << ",q" << j;
  }
  out << ",eo_index\n";
}

void write_csv_row(std::ostream& out, const Sample& sample) {
  const Observables& o = sample.obs;
  out << sample.step << ',' << fmt12(o.t) << ',' << fmt12(o.norm);
  for (std::size_t j = 0; j < o.q.size(); ++j) {
    out << ',' << fmt12(o.sx[j]) << ',' << fmt12(o.sy[j]) << ',' << fmt12(o.sz[j])
        << ',' << fmt12(o.q[j]);
  }
  out << ',' << sample.eo_index << '\n';
}

void write_csv(std::ostream& out, int num_qubits, const std::vector<Sample>& trajectory) {
  write_csv_header(out, num_qubits);
  for (const auto& s : trajectory) write_csv_row(out, s);
}

GroverReport run_grover(HardwareKind kind, int item, InitOrder order,
                        const RunOptions& options) {
  const HardwareProfile profile = make_profile(kind);
  const GroverProgram program = grover_program(item, profile, order);
  StateVector state = StateVector::basis(2, std::uint64_t{0});

  auto start = std::chrono::steady_clock::now();
  RunResult result = run_sequence(state, program.seq, options);
  auto stop = std::chrono::steady_clock::now();

  GroverReport report;
  report.kind = kind;
  report.item = item;
  report.order = order;
  const Observables final_obs = qubit_values(state, result.end_time);
  report.q = {final_obs.q[0], final_obs.q[1]};
  report.norm = final_obs.norm;
  report.wall_seconds = std::chrono::duration<double>(stop - start).count();
  report.total_substeps = result.total_substeps;
  report.reference = reference_q(kind, item, order);
  if (report.reference) {
    for (int j = 0; j < 2; ++j) {
      report.max_deviation =
          std::max(report.max_deviation, std::abs(report.q[j] - (*report.reference)[j]));
    }
    const double tol = kind == HardwareKind::kIdeal ? kIdealTolerance : kReferenceTolerance;
    report.discrepancy = report.max_deviation > tol;
  }
  report.trajectory = std::move(result.trajectory);
  return report;
}

std::string format_report(const GroverReport& r) {
  std::ostringstream out;
  out << "hardware " << hardware_name(r.kind) << ", item " << r.item << ", init "
      << init_order_name(r.order) << "\n";
  out << "final Q1 = " << fmt("%.6f", r.q[0]) << "  Q2 = " << fmt("%.6f", r.q[1]) << "\n";
  out << "norm - 1 = " << fmt("%.3e", r.norm - 1.0) << "\n";
  out << "substeps " << r.total_substeps << ", wall time " << fmt("%.3f", r.wall_seconds)
      << " s\n";
  if (r.reference) {
    out << "reference Q1 = " << fmt("%.3f", (*r.reference)[0])
        << "  Q2 = " << fmt("%.3f", (*r.reference)[1]) << "  (max deviation "
        << fmt("%.4f", r.max_deviation) << ")\n";
    if (r.discrepancy) out << "DISCREPANCY: result differs from the reference table\n";
  }
  return out.str();
}

ConvergeReport converge_grover(HardwareKind kind, int item, InitOrder order,
                               double tol, RunOptions base,
                               std::int64_t max_multiplier) {
  ConvergeReport report;
  std::int64_t multiplier = std::max<std::int64_t>(1, base.substep_multiplier);
  auto run_at = [&](std::int64_t mult) {
    RunOptions opts = base;
    opts.substep_multiplier = mult;
    opts.sample_every = std::numeric_limits<std::int64_t>::max();
    GroverReport r = run_grover(kind, item, order, opts);
    report.history.emplace_back(mult, r.q);
    return r.q;
  };
  std::array<double, 2> previous = run_at(multiplier);
  while (multiplier * 2 <= max_multiplier) {
    std::array<double, 2> next = run_at(multiplier * 2);
    report.last_shift =
        std::max(std::abs(next[0] - previous[0]), std::abs(next[1] - previous[1]));
    if (report.last_shift < tol) {
      report.converged = true;
      report.multiplier = multiplier;
      report.q = next;
      return report;
    }
    previous = next;
    multiplier *= 2;
  }
  report.multiplier = multiplier;
  report.q = previous;
  return report;
}

std::vector<CheckResult> run_selftest() {
  return {check_conjugation(), check_second_order(), check_shortening(),
          check_iterates(), check_ideal_eos()};
}

}  // namespace spinsim
